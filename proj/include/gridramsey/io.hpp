#pragma once

#include <string>

#include "gridramsey/coloring.hpp"

namespace gridramsey {

// On-disk coloring formats. One header line, then one record per line;
// vertices and color ids are 1-based in files. Palette entries appear as
// `# color <id> <structured>` comments right after the header and are
// parsed back, so parse(serialize(x)) reproduces the bytes exactly.
//
//   graph <n> <palette>            u v c
//   hyper <n> <k> <palette>        v1 ... vk c      (absent edges omitted)
//   grid <n> <m> <palette>         row i j j' c  |  col i i' j c
//   partition <n> <t>              u v class
struct ColoringFile {
  enum class Kind { Graph, Hyper, Grid, Partition };
  Kind kind;
  GraphColoring graph;  // Graph and Hyper
  GridColoring grid;
  EdgePartition partition;
};

std::string serialize(const GraphColoring& c);
std::string serialize(const GridColoring& g);
std::string serialize(const EdgePartition& p);

// Throws std::runtime_error with a line-tagged message on malformed input.
ColoringFile parse_coloring_text(const std::string& text);

ColoringFile load_coloring_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gridramsey
