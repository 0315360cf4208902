#include "gridramsey/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace gridramsey {

namespace {

void palette_lines(std::ostream& out, const ColorTable& table) {
  for (int id = 0; id < table.size(); ++id)
    out << "# color " << id + 1 << " " << table.at(id).to_string() << "\n";
}

// Colex-ordered pairs (u, v), u < v < n; index == pair_rank(u, v).
std::vector<std::pair<int, int>> colex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(size_t(binom(n, 2)));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  return pairs;
}

struct LineError : std::runtime_error {
  LineError(int lineno, const std::string& what)
      : std::runtime_error("line " + std::to_string(lineno) + ": " + what) {}
};

struct Parser {
  std::vector<std::string> lines;
  int at = 0;  // next line index

  explicit Parser(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  static std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
  }

  int to_int(const std::string& s, int lineno, const char* what) const {
    try {
      size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return int(v);
    } catch (const std::exception&) {
      throw LineError(lineno, std::string("bad ") + what + " '" + s + "'");
    }
  }
};

ColorTablePtr parse_palette(Parser& ps, int expected) {
  auto table = make_table();
  int next_id = 1;
  while (ps.at < int(ps.lines.size())) {
    const std::string& line = ps.lines[size_t(ps.at)];
    if (line.empty() || line[0] != '#') break;
    auto toks = Parser::split(line);
    if (toks.size() == 4 && toks[0] == "#" && toks[1] == "color") {
      int lineno = ps.at + 1;
      int id = ps.to_int(toks[2], lineno, "color id");
      if (id != next_id)
        throw LineError(lineno, "palette ids must be contiguous from 1");
      std::optional<StructuredColor> sc = StructuredColor::parse(toks[3]);
      if (!sc) throw LineError(lineno, "malformed structured color");
      if (table->intern(*sc) != id - 1)
        throw LineError(lineno, "duplicate palette entry");
      ++next_id;
    }
    ++ps.at;  // other comments are skipped
  }
  if (table->size() == 0) {
    for (int c = 1; c <= expected; ++c)
      table->intern(StructuredColor::ints({c}));
  } else if (table->size() != expected) {
    throw LineError(ps.at, "palette comment count differs from header");
  }
  return table;
}

}  // namespace

std::string serialize(const GraphColoring& c) {
  std::ostringstream out;
  const int n = c.n(), k = c.k();
  if (k == 2)
    out << "graph " << n << " " << c.table()->size() << "\n";
  else
    out << "hyper " << n << " " << k << " " << c.table()->size() << "\n";
  palette_lines(out, *c.table());
  std::vector<int> verts = first_subset(k);
  if (n >= k && k >= 1) do {
      int id = c.color_of(verts);
      if (id == kNoColor) continue;
      for (int i = 0; i < k; ++i) out << verts[size_t(i)] + 1 << " ";
      out << id + 1 << "\n";
    } while (next_subset_lex(verts, n));
  return out.str();
}

std::string serialize(const GridColoring& g) {
  std::ostringstream out;
  const int m = g.rows(), n = g.cols();
  out << "grid " << n << " " << m << " " << g.table()->size() << "\n";
  palette_lines(out, *g.table());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int j2 = j + 1; j2 < n; ++j2) {
        int id = g.row_color(i, j, j2);
        if (id == kNoColor) continue;
        out << "row " << i + 1 << " " << j + 1 << " " << j2 + 1 << " "
            << id + 1 << "\n";
      }
  for (auto [i, i2] : colex_pairs(m))
    for (int j = 0; j < n; ++j) {
      int id = g.col_color(i, i2, j);
      if (id == kNoColor) continue;
      out << "col " << i + 1 << " " << i2 + 1 << " " << j + 1 << " " << id + 1
          << "\n";
    }
  return out.str();
}

std::string serialize(const EdgePartition& p) {
  std::ostringstream out;
  out << "partition " << p.n() << " " << p.class_count() << "\n";
  for (auto [u, v] : colex_pairs(p.n()))
    out << u + 1 << " " << v + 1 << " " << p.class_of(u, v) + 1 << "\n";
  return out.str();
}

ColoringFile parse_coloring_text(const std::string& text) {
  Parser ps(text);
  if (ps.lines.empty()) throw LineError(1, "empty input");
  auto head = Parser::split(ps.lines[0]);
  if (head.empty()) throw LineError(1, "missing header");
  const std::string& kind = head[0];
  ps.at = 1;

  auto expect_record = [&](const std::vector<std::string>& toks, size_t want,
                           int lineno) {
    if (toks.size() != want)
      throw LineError(lineno, "expected " + std::to_string(want) + " fields");
  };

  if (kind == "graph" || kind == "hyper") {
    int n = 0, k = 2, palette = 0;
    if (kind == "graph") {
      if (head.size() != 3) throw LineError(1, "graph header needs n, palette");
      n = ps.to_int(head[1], 1, "n");
      palette = ps.to_int(head[2], 1, "palette size");
    } else {
      if (head.size() != 4)
        throw LineError(1, "hyper header needs n, k, palette");
      n = ps.to_int(head[1], 1, "n");
      k = ps.to_int(head[2], 1, "k");
      palette = ps.to_int(head[3], 1, "palette size");
    }
    if (n < 1 || k < 1 || k > n || palette < 0)
      throw LineError(1, "bad header values");
    ColorTablePtr table = parse_palette(ps, palette);
    GraphColoring c(n, k, table);
    std::vector<int> verts(static_cast<size_t>(k));
    for (; ps.at < int(ps.lines.size()); ++ps.at) {
      int lineno = ps.at + 1;
      const std::string& line = ps.lines[size_t(ps.at)];
      if (line.empty() || line[0] == '#') continue;
      auto toks = Parser::split(line);
      expect_record(toks, size_t(k) + 1, lineno);
      for (int i = 0; i < k; ++i) {
        int v = ps.to_int(toks[size_t(i)], lineno, "vertex");
        if (v < 1 || v > n) throw LineError(lineno, "vertex out of range");
        verts[size_t(i)] = v - 1;
      }
      std::sort(verts.begin(), verts.end());
      for (int i = 1; i < k; ++i)
        if (verts[size_t(i)] == verts[size_t(i - 1)])
          throw LineError(lineno, "repeated vertex");
      int col = ps.to_int(toks[size_t(k)], lineno, "color");
      if (col < 1 || col > palette) throw LineError(lineno, "color out of range");
      if (c.has_color(verts)) throw LineError(lineno, "duplicate record");
      c.set_color(verts, col - 1);
    }
    ColoringFile f;
    f.kind = (kind == "graph") ? ColoringFile::Kind::Graph
                               : ColoringFile::Kind::Hyper;
    f.graph = std::move(c);
    return f;
  }

  if (kind == "grid") {
    if (head.size() != 4)
      throw LineError(1, "grid header needs columns, rows, palette");
    int n = ps.to_int(head[1], 1, "columns");
    int m = ps.to_int(head[2], 1, "rows");
    int palette = ps.to_int(head[3], 1, "palette size");
    if (n < 1 || m < 1 || palette < 0) throw LineError(1, "bad header values");
    ColorTablePtr table = parse_palette(ps, palette);
    GridColoring g(m, n, table);
    for (; ps.at < int(ps.lines.size()); ++ps.at) {
      int lineno = ps.at + 1;
      const std::string& line = ps.lines[size_t(ps.at)];
      if (line.empty() || line[0] == '#') continue;
      auto toks = Parser::split(line);
      expect_record(toks, 5, lineno);
      int a = ps.to_int(toks[1], lineno, "index");
      int b = ps.to_int(toks[2], lineno, "index");
      int d = ps.to_int(toks[3], lineno, "index");
      int col = ps.to_int(toks[4], lineno, "color");
      if (col < 1 || col > palette) throw LineError(lineno, "color out of range");
      if (toks[0] == "row") {
        if (a < 1 || a > m || b < 1 || b > n || d < 1 || d > n || b == d)
          throw LineError(lineno, "row record out of range");
        if (b > d) std::swap(b, d);
        if (g.row_color(a - 1, b - 1, d - 1) != kNoColor)
          throw LineError(lineno, "duplicate record");
        g.set_row_color(a - 1, b - 1, d - 1, col - 1);
      } else if (toks[0] == "col") {
        if (a < 1 || a > m || b < 1 || b > m || d < 1 || d > n || a == b)
          throw LineError(lineno, "col record out of range");
        if (a > b) std::swap(a, b);
        if (g.col_color(a - 1, b - 1, d - 1) != kNoColor)
          throw LineError(lineno, "duplicate record");
        g.set_col_color(a - 1, b - 1, d - 1, col - 1);
      } else {
        throw LineError(lineno, "expected 'row' or 'col'");
      }
    }
    ColoringFile f;
    f.kind = ColoringFile::Kind::Grid;
    f.grid = std::move(g);
    return f;
  }

  if (kind == "partition") {
    if (head.size() != 3) throw LineError(1, "partition header needs n, t");
    int n = ps.to_int(head[1], 1, "n");
    int t = ps.to_int(head[2], 1, "t");
    if (n < 1 || t < 0) throw LineError(1, "bad header values");
    EdgePartition p(n, t);
    std::vector<char> seen(size_t(binom(n, 2)), 0);
    for (; ps.at < int(ps.lines.size()); ++ps.at) {
      int lineno = ps.at + 1;
      const std::string& line = ps.lines[size_t(ps.at)];
      if (line.empty() || line[0] == '#') continue;
      auto toks = Parser::split(line);
      expect_record(toks, 3, lineno);
      int u = ps.to_int(toks[0], lineno, "vertex");
      int v = ps.to_int(toks[1], lineno, "vertex");
      int cls = ps.to_int(toks[2], lineno, "class");
      if (u < 1 || u > n || v < 1 || v > n || u == v)
        throw LineError(lineno, "vertex out of range");
      if (cls < 1 || cls > t) throw LineError(lineno, "class out of range");
      if (u > v) std::swap(u, v);
      int64_t rank = pair_rank(u - 1, v - 1);
      if (seen[size_t(rank)]) throw LineError(lineno, "duplicate record");
      seen[size_t(rank)] = 1;
      p.set_class(u - 1, v - 1, cls - 1);
    }
    for (char s : seen)
      if (!s)
        throw std::runtime_error("partition is missing a pair record");
    ColoringFile f;
    f.kind = ColoringFile::Kind::Partition;
    f.partition = std::move(p);
    return f;
  }

  throw LineError(1, "unknown format '" + kind + "'");
}

ColoringFile load_coloring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_coloring_text(buf.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gridramsey
