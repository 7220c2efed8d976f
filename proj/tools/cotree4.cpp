#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cotree4/export.hpp"
#include "cotree4/gen.hpp"
#include "cotree4/io.hpp"
#include "cotree4/verify.hpp"

using namespace cotree4;

namespace {

// beyond this size `solve` replaces the exact connectivity predicate by its
// cheap necessary conditions (generated corpora are 3-connected by
// construction; the exact predicate is quadratic)
constexpr int kExactPredicateLimit = 4000;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  require(file.good(), errc::parse_error, "cannot write " + path);
  return file;
}

std::array<Vertex, 3> resolve_roots(const GraphInput& gi) {
  if (gi.roots) return *gi.roots;
  return gen::default_roots(gi.g);
}

Suspension checked_suspension(const GraphInput& gi) {
  auto roots = resolve_roots(gi);
  if (gi.g.n <= kExactPredicateLimit) return suspend(gi.g, roots);
  for (Vertex v = 0; v < gi.g.n; ++v) {
    bool is_root = v == roots[0] || v == roots[1] || v == roots[2];
    require(gi.g.degree(v) >= (is_root ? 2 : 3), errc::not_internally_3_connected,
            "vertex " + std::to_string(v) + " has too small a degree");
  }
  return suspend_unchecked(gi.g, roots);
}

std::string edge_name(const PlaneGraph& g, Edge e) {
  return std::to_string(g.tail(2 * e)) + "-" + std::to_string(g.head(2 * e));
}

void print_deletions(std::ostream& out, const char* tag, const PlaneGraph& host,
                     const DeletionSet& ds) {
  for (const DeletionEntry& de : ds.entries) {
    out << tag << ' ' << edge_name(host, de.edge) << ' ' << deletion_case_name(de.dcase)
        << " covering=" << de.covering_path << " target=" << de.target_path << "\n";
  }
}

int cmd_solve(const std::string& input, const std::string& output, bool dump_wood,
              bool dump_opp) {
  GraphInput gi = read_graph_file(input);
  Suspension s = checked_suspension(gi);
  PipelineResult r = run_pipeline(s);

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "tree:";
  for (Edge e = 0; e < s.g.edge_count(); ++e)
    if (r.pair.in_tree[e]) out << ' ' << edge_name(s.g, e);
  out << "\ncotree:";
  for (Edge e = 0; e < s.g.edge_count(); ++e)
    if (r.pair.in_co_tree[e])
      out << ' ' << s.g.left_face(2 * e) << '-' << s.g.left_face(2 * e + 1);
  out << "\ncertificate:\n";
  out << "tree_max_degree " << r.pair.tree_max_degree << "\n";
  out << "cotree_max_degree " << r.pair.co_tree_max_degree << "\n";
  print_deletions(out, "D", s.g, r.d);
  print_deletions(out, "D'", r.dw.sd.susp.g, r.d_prime);
  if (dump_wood) {
    out << "wood:\n";
    write_wood(out, s, r.wood);
  }
  if (dump_opp) {
    out << "opp:\n";
    for (int i = 0; i < r.opp.size(); ++i) {
      const OppPath& p = r.opp.paths[i];
      out << i << ':';
      for (Vertex v : p.vertices) out << ' ' << v;
      out << " | left=" << p.left << " right=" << p.right << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& input, const std::string& tree_arg) {
  GraphInput gi = read_graph_file(input);
  const PlaneGraph& g = gi.g;
  std::vector<Edge> tree;
  {
    std::istringstream ss(tree_arg);
    std::string tok;
    while (ss >> tok) {
      auto dash = tok.find('-');
      require(dash != std::string::npos, errc::parse_error, "tree edges look like u-v");
      Vertex u = std::stoi(tok.substr(0, dash)), v = std::stoi(tok.substr(dash + 1));
      auto d = g.find_dart(u, v);
      require(d.has_value(), errc::parse_error, "no edge " + tok);
      tree.push_back(edge_of(*d));
    }
  }
  bool all = true;
  auto report = [&](const Certificate& c) {
    std::cout << (c.pass ? "PASS" : "FAIL") << ' ' << cert_kind_name(c.kind);
    if (!c.detail.empty()) std::cout << " " << c.detail;
    for (int wv : c.witness) std::cout << ' ' << wv;
    std::cout << "\n";
    all = all && c.pass;
  };

  Certificate st = is_spanning_tree(g, tree);
  report(st);
  if (st.pass) {
    DualMap dm = dual(g);
    auto co = co_tree_of(g, dm, tree);
    Certificate cd = is_spanning_tree(dm.dual, co);
    cd.kind = CertKind::co_tree_duality;
    cd.detail = "co-tree has " + std::to_string(co.size()) + " dual edges";
    report(cd);

    std::vector<int> vdeg(g.n, 0), fdeg(g.face_count(), 0);
    for (Edge e : tree) {
      ++vdeg[g.tail(2 * e)];
      ++vdeg[g.head(2 * e)];
    }
    for (Edge e : co) {
      ++fdeg[g.left_face(2 * e)];
      ++fdeg[g.left_face(2 * e + 1)];
    }
    int td = *std::max_element(vdeg.begin(), vdeg.end());
    int cd2 = *std::max_element(fdeg.begin(), fdeg.end());
    Certificate db{CertKind::degree_bound, td <= 4 && cd2 <= 4,
                   "tree " + std::to_string(td) + ", co-tree " + std::to_string(cd2), {}};
    report(db);
  }
  return all ? 0 : 1;
}

int cmd_oracle(const std::string& input, long long max_trees) {
  GraphInput gi = read_graph_file(input);
  Suspension s = checked_suspension(gi);
  PipelineResult r = run_pipeline(s);
  std::cout << "pipeline_pair " << r.pair.tree_max_degree << ' ' << r.pair.co_tree_max_degree
            << "\n";
  OracleResult o = oracle_best_pair(gi.g, max_trees);
  std::cout << "oracle_trees " << o.tree_count << "\n";
  std::cout << "oracle_best " << o.best << "\n";
  std::cout << "grunbaum_33_pair " << (o.has_33_pair ? "yes" : "no") << "\n";
  std::cout << "oracle_witness:";
  for (Edge e : o.witness_tree) std::cout << ' ' << edge_name(gi.g, e);
  std::cout << "\n";
  return 0;
}

int cmd_generate(const std::string& family, int k, int n, uint64_t seed,
                 const std::string& output) {
  Fixture f;
  if (family == "k4" || family == "tetrahedron") f = gen::k4();
  else if (family == "cube") f = gen::cube();
  else if (family == "octahedron") f = gen::octahedron();
  else if (family == "dodecahedron") f = gen::dodecahedron();
  else if (family == "icosahedron") f = gen::icosahedron();
  else if (family == "example") f = gen::worked_example();
  else if (family == "wheel") f = gen::wheel(k);
  else if (family == "prism") f = gen::prism(k);
  else if (family == "sun") f = gen::sun(k);
  else if (family == "rt") f = gen::random_triangulation(n, seed);
  else raise(errc::bad_parameters, "unknown family " + family);
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  write_graph(out, f.g, f.roots);
  return 0;
}

int cmd_bench(const std::string& profile, std::vector<int> sizes, uint64_t seed) {
  if (sizes.empty()) {
    if (profile == "bench") sizes = {1250, 2500, 5000, 10000, 20000};
    else if (profile == "medium") sizes = {100, 200, 300, 400, 500};
    else raise(errc::bad_parameters, "unknown profile " + profile);
  }
  std::cout << "n,seconds\n";
  std::vector<double> lx, ly;
  for (int n : sizes) {
    Fixture f = gen::random_triangulation(n, seed);
    Suspension s = suspend_unchecked(f.g, f.roots);
    auto t0 = std::chrono::steady_clock::now();
    PipelineResult r = run_pipeline(s);
    auto t1 = std::chrono::steady_clock::now();
    double dt = std::chrono::duration<double>(t1 - t0).count();
    require(r.pair.tree_max_degree <= 4 && r.pair.co_tree_max_degree <= 4,
            errc::postcondition_failure, "bench instance failed the degree bound");
    std::cout << n << ',' << dt << "\n";
    lx.push_back(std::log(double(n)));
    ly.push_back(std::log(std::max(dt, 1e-9)));
  }
  // least squares slope on the log-log points
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = double(lx.size());
  for (size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  std::cout << "fitted_exponent " << slope << "\n";
  return 0;
}

int cmd_export(const std::string& input, const std::string& format, bool with_solution,
               const std::string& output) {
  GraphInput gi = read_graph_file(input);
  Suspension s = checked_suspension(gi);
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  if (with_solution) {
    PipelineResult r = run_pipeline(s);
    if (format == "dot") write_dot(out, s, r.wood, &r.pair);
    else if (format == "svg") write_svg(out, s, &r.wood, &r.pair);
    else raise(errc::bad_parameters, "export format must be dot or svg");
  } else {
    SchnyderWood w = minimize(s, compute_wood(s));
    if (format == "dot") write_dot(out, s, w, nullptr);
    else if (format == "svg") write_svg(out, s, &w, nullptr);
    else raise(errc::bad_parameters, "export format must be dot or svg");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"4-trees with co-4-trees via minimal Schnyder woods"};
  app.require_subcommand(1);

  std::string input, output, tree_arg, family = "rt", format = "dot", profile = "bench";
  int k = 4, n = 16;
  uint64_t seed = 1;
  long long max_trees = 10'000'000;
  bool dump_wood = false, dump_opp = false, with_solution = false;
  std::vector<int> sizes;

  auto* solve = app.add_subcommand("solve", "compute a 4-tree whose co-tree is a 4-tree");
  solve->add_option("input", input)->required();
  solve->add_option("-o,--output", output);
  solve->add_flag("--dump-wood", dump_wood);
  solve->add_flag("--dump-opp", dump_opp);
  solve->add_option("--seed", seed, "generator seed (accepted for interface symmetry)");

  auto* verify = app.add_subcommand("verify", "check a tree/co-tree pair");
  verify->add_option("input", input)->required();
  verify->add_option("--tree", tree_arg, "whitespace-separated edge list u-v ...")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive best pair on small instances");
  oracle->add_option("input", input)->required();
  oracle->add_option("--max-trees", max_trees);

  auto* generate = app.add_subcommand("generate", "write a fixture graph");
  generate->add_option("--family", family,
                       "k4|cube|octahedron|dodecahedron|icosahedron|example|wheel|prism|sun|rt");
  generate->add_option("-k", k);
  generate->add_option("-n", n);
  generate->add_option("--seed", seed);
  generate->add_option("-o,--output", output);

  auto* bench = app.add_subcommand("bench", "time the pipeline over a size schedule");
  bench->add_option("--profile", profile);
  bench->add_option("--sizes", sizes);
  bench->add_option("--seed", seed);

  auto* exp = app.add_subcommand("export", "render the instance");
  exp->add_option("input", input)->required();
  exp->add_option("--export-format", format);
  exp->add_flag("--solve", with_solution);
  exp->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(input, output, dump_wood, dump_opp);
    if (*verify) return cmd_verify(input, tree_arg);
    if (*oracle) return cmd_oracle(input, max_trees);
    if (*generate) return cmd_generate(family, k, n, seed, output);
    if (*bench) return cmd_bench(profile, sizes, seed);
    if (*exp) return cmd_export(input, format, with_solution, output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code == errc::postcondition_failure || e.code == errc::internal_error ||
        e.code == errc::flip_did_not_converge || e.code == errc::case_exhaustion ||
        e.code == errc::no_covering_path)
      return 3;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
