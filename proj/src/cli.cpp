#include "gridramsey/cli.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridramsey/constructions.hpp"
#include "gridramsey/io.hpp"
#include "gridramsey/solvers.hpp"
#include "gridramsey/verifiers.hpp"

namespace gridramsey {

namespace {

// Flat report emitted as `key value...` lines or as the identical JSON
// document; insertion order is preserved in both.
class Report {
 public:
  void set(const std::string& key, const std::string& v) {
    j_[key] = v;
    lines_.push_back(key + " " + v);
  }
  void set(const std::string& key, const char* v) { set(key, std::string(v)); }
  void set(const std::string& key, int64_t v) {
    j_[key] = v;
    lines_.push_back(key + " " + std::to_string(v));
  }
  void set(const std::string& key, int v) { set(key, int64_t(v)); }
  void set(const std::string& key, bool v) {
    j_[key] = v;
    lines_.push_back(key + std::string(v ? " true" : " false"));
  }
  // Values are emitted as given; callers convert to 1-based beforehand.
  void set(const std::string& key, const std::vector<int>& v) {
    j_[key] = v;
    std::string line = key;
    for (int x : v) line += " " + std::to_string(x);
    lines_.push_back(line);
  }
  void print(std::ostream& out, bool json) const {
    if (json) {
      out << j_.dump(2) << "\n";
    } else {
      for (const auto& line : lines_) out << line << "\n";
    }
  }

 private:
  nlohmann::ordered_json j_;
  std::vector<std::string> lines_;
};

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(x + 1);
  return out;
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int64_t pigeonhole_columns(int r) {
  int64_t need = 1;
  for (int64_t i = 0; i < binom(r + 1, 2); ++i) {
    need *= r;
    if (need > (int64_t(1) << 40)) return -1;
  }
  return need + 1;
}

// ------------------------------------------------------------- construct ----

struct ConstructArgs {
  std::string family, in, out;
  int n = -1, m = -1, t = -1, r = -1;
  int64_t seed = -1;
};

int run_construct(const ConstructArgs& a, bool json, std::ostream& out,
                  std::ostream& err) {
  Report rep;
  rep.set("command", "construct");
  rep.set("family", a.family);
  std::string text;

  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Usage(std::string("construct --family ") + a.family +
                         " requires " + what);
  };
  auto need_seed = [&]() -> uint64_t {
    need(a.seed >= 0, "--seed");
    return uint64_t(a.seed);
  };

  if (a.family == "binary" || a.family == "mubayi") {
    need(a.n >= 1, "--n");
    GraphColoring c =
        a.family == "binary" ? binary_coloring(a.n) : mubayi_coloring(a.n);
    rep.set("n", a.n);
    rep.set("palette", c.table()->size());
    text = serialize(c);
  } else if (a.family == "product-partition") {
    need(a.n >= 2, "--n (the base)");
    need(a.t >= 1, "--t");
    EdgePartition p = product_partition(a.n, a.t);
    rep.set("n", p.n());
    rep.set("classes", p.class_count());
    text = serialize(p);
  } else if (a.family == "grid-random") {
    need(a.m >= 1, "--m");
    need(a.r >= 1, "--r");
    uint64_t seed = need_seed();
    EdgePartition p;
    if (!a.in.empty()) {
      ColoringFile f = load_coloring_file(a.in);
      if (f.kind != ColoringFile::Kind::Partition)
        throw Usage("construct grid-random: --in must be a partition file");
      p = f.partition;
    } else {
      int cols = a.n >= 1 ? a.n : a.m;
      if (cols < 2) throw Usage("construct grid-random: need --n >= 2");
      p = partition_from_coloring(binary_coloring(cols));
    }
    rep.set("classes", p.class_count());
    rep.set("r", a.r);
    rep.set("seed", a.seed);
    std::optional<GridColoring> g = random_grid(p, a.r, a.m, seed);
    if (!g) {
      rep.set("result", "failed");
      rep.set("reason", "fewer than m rows survived the deletion pass");
      rep.print(out, json);
      return 1;
    }
    rep.set("rows", g->rows());
    rep.set("cols", g->cols());
    rep.set("palette", g->table()->size());
    text = serialize(*g);
  } else if (a.family == "asym-grid") {
    need(a.r >= 4, "--r (>= 4)");
    GridColoring g = asymmetric_grid(a.r);
    rep.set("rows", g.rows());
    rep.set("cols", g.cols());
    rep.set("row-colors", int(g.used_row_colors().size()));
    rep.set("col-colors", int(g.used_col_colors().size()));
    text = serialize(g);
  } else if (a.family == "f3-43" || a.family == "f3-56") {
    need(a.n >= 2, "--n (a power of two)");
    uint64_t seed = need_seed();
    GridProvider provider = default_grid_provider(seed);
    GraphColoring c = a.family == "f3-43" ? f3_43_coloring(a.n, provider)
                                          : f3_56_coloring(a.n, provider);
    rep.set("n", a.n);
    rep.set("seed", a.seed);
    rep.set("palette", c.table()->size());
    text = serialize(c);
  } else if (a.family == "partite3") {
    need(!a.in.empty(), "--in (a grid file)");
    ColoringFile f = load_coloring_file(a.in);
    if (f.kind != ColoringFile::Kind::Grid)
      throw Usage("construct partite3: --in must be a grid file");
    GraphColoring h = grid_to_partite3(f.grid);
    rep.set("n", h.n());
    rep.set("palette", h.table()->size());
    text = serialize(h);
  } else if (a.family == "partite3-inverse") {
    need(!a.in.empty(), "--in (a hyper file)");
    ColoringFile f = load_coloring_file(a.in);
    if (f.kind != ColoringFile::Kind::Hyper)
      throw Usage("construct partite3-inverse: --in must be a hyper file");
    GridColoring g = partite3_to_grid(f.graph);
    rep.set("rows", g.rows());
    rep.set("cols", g.cols());
    text = serialize(g);
  } else {
    throw Usage("unknown family '" + a.family + "'");
  }

  if (a.out.empty()) {
    out << text;  // raw file dump; report suppressed
    return 0;
  }
  write_text_file(a.out, text);
  rep.set("wrote", a.out);
  rep.print(out, json);
  (void)err;
  return 0;
}

// ---------------------------------------------------------------- verify ----

struct VerifyArgs {
  std::string property, in;
  int p = -1, q = -1;
  int64_t samples = -1;
  int64_t seed = -1;
  int threads = 1;
  int exhaustive_max = 3, sample_max = 8;
};

int run_verify(const VerifyArgs& a, bool json, std::ostream& out,
               std::ostream& err) {
  Report rep;
  rep.set("command", "verify");
  rep.set("property", a.property);
  rep.set("input", a.in);
  err << "# verify " << a.property << " " << a.in << "\n";
  ColoringFile f = load_coloring_file(a.in);
  const int threads = std::max(1, a.threads);

  if (a.property == "alternating-free") {
    if (f.kind != ColoringFile::Kind::Grid)
      throw Usage("alternating-free applies to grid files");
    auto rect = find_alternating_rectangle(f.grid);
    if (!rect) {
      rep.set("result", "holds");
      rep.print(out, json);
      return 0;
    }
    rep.set("result", "violated");
    rep.set("rows", std::vector<int>{rect->i + 1, rect->i2 + 1});
    rep.set("cols", std::vector<int>{rect->j + 1, rect->j2 + 1});
    rep.print(out, json);
    return 1;
  }

  if (a.property == "pq") {
    if (f.kind != ColoringFile::Kind::Graph &&
        f.kind != ColoringFile::Kind::Hyper)
      throw Usage("pq applies to graph or hyper files");
    if (a.p < 1 || a.q < 1) throw Usage("pq requires --p and --q");
    rep.set("p", a.p);
    rep.set("q", a.q);
    rep.set("subsets", binom(f.graph.n(), a.p));
    auto v = verify_pq(f.graph, a.p, a.q, threads);
    if (!v) {
      rep.set("result", "holds");
      rep.print(out, json);
      return 0;
    }
    rep.set("result", "violated");
    rep.set("vertices", one_based(v->vertices));
    rep.set("colors", one_based(v->colors));
    rep.print(out, json);
    return 1;
  }

  if (a.property == "chromatic-pq") {
    if (f.kind != ColoringFile::Kind::Graph)
      throw Usage("chromatic-pq applies to graph files");
    if (a.p < 2 || a.q < 2) throw Usage("chromatic-pq requires --p and --q");
    rep.set("p", a.p);
    rep.set("q", a.q);
    std::optional<SampleMode> mode;
    if (a.samples >= 0) {
      if (a.seed < 0) throw Usage("sampled chromatic-pq requires --seed");
      mode = SampleMode{a.samples, uint64_t(a.seed)};
      rep.set("mode", "sampled");
      rep.set("samples", a.samples);
      rep.set("seed", a.seed);
    } else {
      rep.set("mode", "exhaustive");
      rep.set("subsets",
              binom(int(f.graph.used_colors().size()), a.q - 1));
    }
    auto v = verify_chromatic_pq(f.graph, a.p, a.q, mode, threads);
    if (!v) {
      rep.set("result", "holds");
      rep.print(out, json);
      return 0;
    }
    rep.set("result", "violated");
    rep.set("colors", one_based(v->colors));
    rep.set("chi", v->proof.chi);
    rep.set("limit", a.p - 1);
    rep.print(out, json);
    return 1;
  }

  if (a.property == "chi-slow-grow") {
    if (f.kind != ColoringFile::Kind::Graph)
      throw Usage("chi-slow-grow applies to graph files");
    int64_t samples = a.samples >= 0 ? a.samples : 1000;
    uint64_t seed = a.seed >= 0 ? uint64_t(a.seed) : 0;
    if (samples > 0 && a.seed < 0)
      throw Usage("chi-slow-grow requires --seed for its sampled phase");
    rep.set("exhaustive-max", a.exhaustive_max);
    rep.set("samples", samples);
    rep.set("sample-max", a.sample_max);
    rep.set("seed", int64_t(seed));
    ChiSlowGrowReport r = verify_chi_slow_grow(f.graph, a.exhaustive_max,
                                               samples, a.sample_max, seed,
                                               threads);
    rep.set("exhaustive-checked", r.exhaustive_checked);
    rep.set("sampled-checked", r.sampled_checked);
    if (!r.violation) {
      rep.set("result", "holds");
      rep.print(out, json);
      return 0;
    }
    rep.set("result", "violated");
    if (r.violation->kind == ChiSlowGrowViolation::Kind::ChiBound) {
      rep.set("violation", "chi-bound");
      rep.set("colors", one_based(r.violation->colors));
      rep.set("chi", r.violation->chi);
      rep.set("bound", r.violation->bound);
    } else {
      rep.set("violation", "independent-not-bipartite");
      rep.set("colors", one_based(r.violation->colors));
      rep.set("independent", one_based(r.violation->indep_set));
    }
    rep.print(out, json);
    return 1;
  }

  if (a.property == "bipartite-rows") {
    if (f.kind != ColoringFile::Kind::Grid)
      throw Usage("bipartite-rows applies to grid files");
    std::vector<GraphColoring> rows = rows_from_grid(f.grid);
    const int m = f.grid.rows();
    rep.set("pairs", binom(m, 2));
    for (int i = 0; i < m; ++i)
      for (int i2 = i + 1; i2 < m; ++i2) {
        SimpleGraph h = agreement_graph(rows[size_t(i)], rows[size_t(i2)]);
        BipartiteResult b = is_bipartite(h);
        if (!b.bipartite()) {
          rep.set("result", "violated");
          rep.set("rows", std::vector<int>{i + 1, i2 + 1});
          rep.set("odd-cycle", one_based(b.odd_cycle));
          rep.print(out, json);
          return 1;
        }
      }
    rep.set("result", "holds");
    rep.print(out, json);
    return 0;
  }

  throw Usage("unknown property '" + a.property + "'");
}

// --------------------------------------------------------------- witness ----

struct WitnessArgs {
  std::string method, in;
  int r = -1, p = -1, q = -1, k = 2, m = -1, n = -1;
  int64_t seed = -1;
};

int run_witness(const WitnessArgs& a, bool json, std::ostream& out,
                std::ostream& err) {
  Report rep;
  rep.set("command", "witness");
  rep.set("method", a.method);
  (void)err;

  if (a.method == "shelah") {
    if (a.r < 1) throw Usage("witness shelah requires --r");
    GridColoring grid;
    if (!a.in.empty()) {
      ColoringFile f = load_coloring_file(a.in);
      if (f.kind != ColoringFile::Kind::Grid)
        throw Usage("witness shelah: --in must be a grid file");
      grid = f.grid;
      rep.set("input", a.in);
    } else {
      if (a.seed < 0) throw Usage("witness shelah requires --seed");
      int m = a.m >= 1 ? a.m : a.r + 1;
      int64_t cols = a.n >= 1 ? a.n : pigeonhole_columns(a.r);
      if (cols < 1 || cols > 200000)
        throw Usage("witness shelah: give --n explicitly (default too large)");
      grid = random_grid_coloring(m, int(cols), a.r, uint64_t(a.seed));
      rep.set("seed", a.seed);
    }
    rep.set("r", a.r);
    rep.set("grid-rows", grid.rows());
    rep.set("grid-cols", grid.cols());
    Rectangle rect = shelah_witness(grid, a.r);
    rep.set("rectangle-rows", std::vector<int>{rect.i + 1, rect.i2 + 1});
    rep.set("rectangle-cols", std::vector<int>{rect.j + 1, rect.j2 + 1});
    rep.set("verified", true);
    rep.print(out, json);
    return 0;
  }

  if (a.method == "stepdown") {
    if (a.r < 1 || a.p < 1 || a.q < 2)
      throw Usage("witness stepdown requires --r, --p, --q (>= 2)");
    const int k = a.k;
    GraphColoring c;
    if (!a.in.empty()) {
      ColoringFile f = load_coloring_file(a.in);
      if (f.kind != ColoringFile::Kind::Graph &&
          f.kind != ColoringFile::Kind::Hyper)
        throw Usage("witness stepdown: --in must be a graph or hyper file");
      c = f.graph;
      rep.set("input", a.in);
    } else {
      if (a.seed < 0) throw Usage("witness stepdown requires --seed");
      int64_t n = a.n >= 1 ? a.n : stepdown_bound(k, a.r, a.p, a.q);
      if (n < 1 || n > 1000000)
        throw Usage("witness stepdown: give --n explicitly (bound too large)");
      c = random_coloring(int(n), k, a.r, uint64_t(a.seed));
      rep.set("seed", a.seed);
    }
    rep.set("k", c.k());
    rep.set("r", a.r);
    rep.set("p", a.p);
    rep.set("q", a.q);
    rep.set("n", c.n());
    StepdownWitness w = stepdown_witness(c, a.r, a.p, a.q);
    rep.set("vertices", one_based(w.violation.vertices));
    rep.set("colors", one_based(w.violation.colors));
    rep.set("degenerate-tail", w.degenerate_tail);
    rep.set("verified", true);
    rep.print(out, json);
    return 0;
  }

  throw Usage("unknown method '" + a.method + "'");
}

// ----------------------------------------------------------------- solve ----

struct SolveArgs {
  std::string solver, checkpoint, out_path;
  int m = -1, n = -1, r = -1, p = -1, q = -1, k = 2;
  int r_max = -1, n_max = -1;
  int64_t budget = 100'000'000;
};

template <class Cert>
int report_solve(Report& rep, const SearchResult<Cert>& res,
                 const std::string& out_path, bool json, std::ostream& out) {
  rep.set("decided", res.decided);
  if (res.decided) rep.set("value", res.value);
  rep.set("lo", res.lo);
  if (res.hi >= 0)
    rep.set("hi", res.hi);
  else
    rep.set("hi", "open");
  rep.set("exhausted", res.exhausted);
  rep.set("nodes", res.stats.nodes);
  if (res.certificate) {
    if (!out_path.empty()) {
      write_text_file(out_path, serialize(*res.certificate));
      rep.set("certificate", out_path);
    } else {
      rep.set("certificate", "not-written");
    }
  } else {
    rep.set("certificate", "none");
  }
  rep.print(out, json);
  if (!res.decided && !res.exhausted) return 3;
  return 0;
}

int run_solve(const SolveArgs& a, bool json, std::ostream& out,
              std::ostream& err) {
  Report rep;
  rep.set("command", "solve");
  rep.set("solver", a.solver);
  SolveOptions opts;
  opts.node_budget = a.budget;
  opts.checkpoint_path = a.checkpoint;

  int code;
  if (a.solver == "g") {
    if (a.m < 1 || a.n < 1 || a.r_max < 1)
      throw Usage("solve g requires --m, --n, --r-max");
    rep.set("m", a.m);
    rep.set("n", a.n);
    rep.set("r-max", a.r_max);
    rep.set("budget", a.budget);
    auto res = exact_g(a.m, a.n, a.r_max, opts);
    err << "# solve g elapsed_ms " << res.stats.elapsed_ms << "\n";
    code = report_solve(rep, res, a.out_path, json, out);
  } else if (a.solver == "G") {
    if (a.r < 1 || a.n_max < 1) throw Usage("solve G requires --r, --n-max");
    rep.set("r", a.r);
    rep.set("n-max", a.n_max);
    rep.set("budget", a.budget);
    auto res = exact_G(a.r, a.n_max, opts);
    err << "# solve G elapsed_ms " << res.stats.elapsed_ms << "\n";
    code = report_solve(rep, res, a.out_path, json, out);
  } else if (a.solver == "f") {
    if (a.n < 1 || a.p < 1 || a.q < 1 || a.k < 1 || a.r_max < 1)
      throw Usage("solve f requires --n, --p, --q, --k, --r-max");
    rep.set("n", a.n);
    rep.set("p", a.p);
    rep.set("q", a.q);
    rep.set("k", a.k);
    rep.set("r-max", a.r_max);
    rep.set("budget", a.budget);
    auto res = exact_f(a.n, a.p, a.q, a.k, a.r_max, opts);
    err << "# solve f elapsed_ms " << res.stats.elapsed_ms << "\n";
    code = report_solve(rep, res, a.out_path, json, out);
  } else {
    throw Usage("unknown solver '" + a.solver + "'");
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "gridramsey: build, verify, and search edge colorings of grids, "
      "graphs, and small hypergraphs"};
  app.name("gridramsey");
  bool json = false;
  app.add_flag("--json", json, "emit reports as JSON documents");

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand(
      "construct", "build a coloring family and write/print its file");
  construct->add_option("--family", ca.family,
                        "binary | mubayi | product-partition | grid-random | "
                        "asym-grid | f3-43 | f3-56 | partite3 | "
                        "partite3-inverse")
      ->required();
  construct->add_option("--n", ca.n, "vertex/column count (family specific)");
  construct->add_option("--m", ca.m, "row count");
  construct->add_option("--t", ca.t, "coordinate count (product-partition)");
  construct->add_option("--r", ca.r, "color count");
  construct->add_option("--seed", ca.seed, "rng seed (randomized families)");
  construct->add_option("--in", ca.in, "input file (partite3 directions, "
                                       "grid-random partition)");
  construct->add_option("--out", ca.out,
                        "output path; omitted = dump file to stdout");

  VerifyArgs va;
  CLI::App* verify =
      app.add_subcommand("verify", "check a property of a coloring file");
  verify->add_option("--property", va.property,
                     "alternating-free | pq | chromatic-pq | chi-slow-grow | "
                     "bipartite-rows")
      ->required();
  verify->add_option("--in", va.in, "coloring file")->required();
  verify->add_option("--p", va.p, "clique size p");
  verify->add_option("--q", va.q, "required distinct colors q");
  verify->add_option("--samples", va.samples,
                     "sampled mode with this many draws (default exhaustive)");
  verify->add_option("--seed", va.seed, "rng seed for sampled modes");
  verify->add_option("--threads", va.threads, "worker threads (default 1)");
  verify->add_option("--exhaustive-max", va.exhaustive_max,
                     "chi-slow-grow: exhaustive subset size cap (default 3)");
  verify->add_option("--sample-max", va.sample_max,
                     "chi-slow-grow: sampled subset size cap (default 8)");

  WitnessArgs wa;
  CLI::App* witness = app.add_subcommand(
      "witness", "run a constructive pigeonhole argument and re-verify it");
  witness->add_option("--method", wa.method, "shelah | stepdown")->required();
  witness->add_option("--r", wa.r, "palette size of the input coloring");
  witness->add_option("--p", wa.p, "witness size (stepdown)");
  witness->add_option("--q", wa.q, "color ceiling + 1 (stepdown)");
  witness->add_option("--k", wa.k, "edge arity (stepdown, default 2)");
  witness->add_option("--m", wa.m, "rows of the generated grid (shelah)");
  witness->add_option("--n", wa.n, "columns / vertices of the generated input");
  witness->add_option("--seed", wa.seed, "rng seed for the generated input");
  witness->add_option("--in", wa.in, "use this coloring file instead");

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand(
      "solve", "exact small values of g, G, f by backtracking");
  solve->add_option("--solver", sa.solver, "g | G | f")->required();
  solve->add_option("--m", sa.m, "grid rows (g)");
  solve->add_option("--n", sa.n, "grid columns (g) / vertices (f)");
  solve->add_option("--r", sa.r, "palette size (G)");
  solve->add_option("--p", sa.p, "clique size (f)");
  solve->add_option("--q", sa.q, "distinct colors (f)");
  solve->add_option("--k", sa.k, "edge arity (f, default 2)");
  solve->add_option("--r-max", sa.r_max, "largest palette to try (g, f)");
  solve->add_option("--n-max", sa.n_max, "largest size to try (G)");
  solve->add_option("--budget", sa.budget,
                    "node budget per run (default 100000000)");
  solve->add_option("--checkpoint", sa.checkpoint,
                    "resume/save the search frontier here");
  solve->add_option("--out", sa.out_path, "write the certificate here");

  app.require_subcommand(1);
  for (CLI::App* sub : {construct, verify, witness, solve}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(construct)) return run_construct(ca, json, out, err);
    if (app.got_subcommand(verify)) return run_verify(va, json, out, err);
    if (app.got_subcommand(witness)) return run_witness(wa, json, out, err);
    if (app.got_subcommand(solve)) return run_solve(sa, json, out, err);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace gridramsey
