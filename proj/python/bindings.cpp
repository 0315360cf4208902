#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gridramsey/cli.hpp"
#include "gridramsey/constructions.hpp"
#include "gridramsey/io.hpp"
#include "gridramsey/solvers.hpp"
#include "gridramsey/verifiers.hpp"

namespace py = pybind11;
using namespace gridramsey;

namespace {

py::object rect_or_none(const std::optional<Rectangle>& r) {
  if (!r) return py::none();
  return py::make_tuple(r->i, r->i2, r->j, r->j2);
}

py::object pq_or_none(const std::optional<PQViolation>& v) {
  if (!v) return py::none();
  return py::make_tuple(v->vertices, v->colors);
}

template <class Cert>
py::dict solve_dict(const SearchResult<Cert>& r) {
  py::dict d;
  d["decided"] = r.decided;
  if (r.decided) d["value"] = r.value;
  d["lo"] = r.lo;
  d["hi"] = r.hi >= 0 ? py::cast(r.hi) : py::none();
  d["exhausted"] = r.exhausted;
  d["nodes"] = r.stats.nodes;
  d["certificate"] =
      r.certificate ? py::cast(serialize(*r.certificate)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "edge colorings of grids and small hypergraphs: constructions, "
            "verifiers, pigeonhole witnesses, exact searches";

  py::class_<GraphColoring>(m, "GraphColoring")
      .def_property_readonly("n", &GraphColoring::n)
      .def_property_readonly("k", &GraphColoring::k)
      .def("color_of",
           [](const GraphColoring& c, const std::vector<int>& verts) {
             return c.color_of(verts);
           },
           py::arg("verts"), "color id of a sorted 0-based vertex k-set")
      .def("edge_color", &GraphColoring::edge_color, py::arg("u"),
           py::arg("v"))
      .def("used_colors", &GraphColoring::used_colors)
      .def("color_name",
           [](const GraphColoring& c, int id) {
             return c.table()->at(id).to_string();
           },
           py::arg("id"), "structured text form of a color id")
      .def("palette_size", [](const GraphColoring& c) {
        return c.table()->size();
      })
      .def("__str__", [](const GraphColoring& c) { return serialize(c); });

  py::class_<GridColoring>(m, "GridColoring")
      .def_property_readonly("rows", &GridColoring::rows)
      .def_property_readonly("cols", &GridColoring::cols)
      .def("row_color", &GridColoring::row_color, py::arg("i"), py::arg("j"),
           py::arg("j2"))
      .def("col_color", &GridColoring::col_color, py::arg("i"), py::arg("i2"),
           py::arg("j"))
      .def("used_row_colors", &GridColoring::used_row_colors)
      .def("used_col_colors", &GridColoring::used_col_colors)
      .def("color_name",
           [](const GridColoring& g, int id) {
             return g.table()->at(id).to_string();
           },
           py::arg("id"))
      .def("__str__", [](const GridColoring& g) { return serialize(g); });

  py::class_<EdgePartition>(m, "EdgePartition")
      .def_property_readonly("n", &EdgePartition::n)
      .def_property_readonly("class_count", &EdgePartition::class_count)
      .def("class_of", &EdgePartition::class_of, py::arg("u"), py::arg("v"))
      .def("__str__", [](const EdgePartition& p) { return serialize(p); });

  // Constructions.
  m.def("binary_coloring", &binary_coloring, py::arg("n"));
  m.def("mubayi_coloring", &mubayi_coloring, py::arg("n"));
  m.def("product_partition", &product_partition, py::arg("base"),
        py::arg("t"));
  m.def("asymmetric_grid", &asymmetric_grid, py::arg("r"));
  m.def("random_grid_coloring", &random_grid_coloring, py::arg("m"),
        py::arg("n"), py::arg("r"), py::arg("seed"));
  m.def("random_coloring", &random_coloring, py::arg("n"), py::arg("k"),
        py::arg("r"), py::arg("seed"));
  m.def(
      "f3_43_coloring",
      [](int n, uint64_t seed) {
        return f3_43_coloring(n, default_grid_provider(seed));
      },
      py::arg("n"), py::arg("seed"));
  m.def(
      "f3_56_coloring",
      [](int n, uint64_t seed) {
        return f3_56_coloring(n, default_grid_provider(seed));
      },
      py::arg("n"), py::arg("seed"));
  m.def("grid_to_partite3", &grid_to_partite3, py::arg("grid"));
  m.def("partite3_to_grid", &partite3_to_grid, py::arg("h"));

  // Verifiers and witnesses.
  m.def(
      "find_alternating_rectangle",
      [](const GridColoring& g) {
        return rect_or_none(find_alternating_rectangle(g));
      },
      py::arg("grid"), "None, or the 0-based (i, i2, j, j2) of the first one");
  m.def(
      "verify_pq",
      [](const GraphColoring& c, int p, int q, int threads) {
        return pq_or_none(verify_pq(c, p, q, threads));
      },
      py::arg("coloring"), py::arg("p"), py::arg("q"), py::arg("threads") = 1,
      "None when every p-subset spans >= q colors, else (vertices, colors)");
  m.def(
      "shelah_witness",
      [](const GridColoring& g, int r) {
        Rectangle rect = shelah_witness(g, r);
        return py::make_tuple(rect.i, rect.i2, rect.j, rect.j2);
      },
      py::arg("grid"), py::arg("r"));
  m.def(
      "stepdown_witness",
      [](const GraphColoring& c, int r, int p, int q) {
        StepdownWitness w = stepdown_witness(c, r, p, q);
        py::dict d;
        d["vertices"] = w.violation.vertices;
        d["colors"] = w.violation.colors;
        d["degenerate_tail"] = w.degenerate_tail;
        return d;
      },
      py::arg("coloring"), py::arg("r"), py::arg("p"), py::arg("q"));
  m.def("stepdown_bound", &stepdown_bound, py::arg("k"), py::arg("r"),
        py::arg("p"), py::arg("q"));
  m.def("chi_slow_grow_bound", &chi_slow_grow_bound, py::arg("x"));

  // Exact searches (budget in explored color assignments).
  m.def(
      "exact_g",
      [](int mm, int nn, int r_max, int64_t budget) {
        SolveOptions o;
        o.node_budget = budget;
        return solve_dict(exact_g(mm, nn, r_max, o));
      },
      py::arg("m"), py::arg("n"), py::arg("r_max"),
      py::arg("budget") = int64_t(100'000'000));
  m.def(
      "exact_G",
      [](int r, int n_max, int64_t budget) {
        SolveOptions o;
        o.node_budget = budget;
        return solve_dict(exact_G(r, n_max, o));
      },
      py::arg("r"), py::arg("n_max"),
      py::arg("budget") = int64_t(100'000'000));
  m.def(
      "exact_f",
      [](int nn, int p, int q, int k, int r_max, int64_t budget) {
        SolveOptions o;
        o.node_budget = budget;
        return solve_dict(exact_f(nn, p, q, k, r_max, o));
      },
      py::arg("n"), py::arg("p"), py::arg("q"), py::arg("k") = 2,
      py::arg("r_max") = 8, py::arg("budget") = int64_t(100'000'000));

  // File format round trip.
  m.def(
      "parse",
      [](const std::string& text) -> py::object {
        ColoringFile f = parse_coloring_text(text);
        switch (f.kind) {
          case ColoringFile::Kind::Graph:
          case ColoringFile::Kind::Hyper:
            return py::cast(f.graph);
          case ColoringFile::Kind::Grid:
            return py::cast(f.grid);
          case ColoringFile::Kind::Partition:
            return py::cast(f.partition);
        }
        return py::none();
      },
      py::arg("text"), "parse a serialized coloring/partition file");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "(exit_code, stdout, stderr) of the CLI entry point");
}
