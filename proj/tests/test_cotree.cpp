#include <functional>
#include <set>
#include <optional>
#include <random>

#include "cotree4/gen.hpp"
#include "cotree4/verify.hpp"
#include "doctest.h"

using namespace cotree4;

namespace {

// all simple cycles of the spanning subgraph picked by in_h, as vertex sets
void all_cycles(const PlaneGraph& g, const std::vector<char>& in_h,
                const std::function<void(const std::vector<Vertex>&)>& sink) {
  std::vector<Vertex> path;
  std::vector<char> used(g.n, 0);
  std::function<void(Vertex, Vertex, Edge)> dfs = [&](Vertex root, Vertex v, Edge via) {
    for (Dart d : g.rotation[v]) {
      Edge e = edge_of(d);
      if (!in_h[e] || e == via) continue;
      Vertex u = g.head(d);
      if (u == root && path.size() >= 3) sink(path);
      if (u > root && !used[u]) {
        used[u] = 1;
        path.push_back(u);
        dfs(root, u, e);
        path.pop_back();
        used[u] = 0;
      }
    }
  };
  for (Vertex v = 0; v < g.n; ++v) {
    used[v] = 1;
    path = {v};
    dfs(v, v, -1);
  }
}

}  // namespace

TEST_SUITE_BEGIN("cotree");

TEST_CASE("k4 candidate is the outer triangle") {
  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood w = minimize(s, compute_wood(s));
  CandidateGraph h = candidate(s, w);
  std::set<Edge> expect{edge_of(*f.g.find_dart(0, 1)), edge_of(*f.g.find_dart(1, 2)),
                        edge_of(*f.g.find_dart(0, 2))};
  for (Edge e = 0; e < f.g.edge_count(); ++e) CHECK(bool(h.in_h[e]) == bool(expect.count(e)));
  CHECK(h.max_degree == 2);

  // dual side: the three spoke duals plus the b-triangle
  DualWood dw = dual_wood(s, w);
  CandidateGraph hd = candidate(dw.sd.susp, dw.wood);
  int cnt = 0;
  for (Edge e = 0; e < dw.sd.susp.g.edge_count(); ++e) cnt += hd.in_h[e];
  CHECK(cnt == 6);
  CHECK(hd.max_degree <= 3);
  for (int j = 0; j < 3; ++j) CHECK(hd.in_h[f.g.edge_count() + j]);
}

TEST_CASE("candidate degree stays below four corpus-wide") {
  for (const auto& f : {gen::icosahedron(), gen::dodecahedron(), gen::prism(8)}) {
    Suspension s = suspend_unchecked(f.g, f.roots);
    SchnyderWood w = minimize(s, compute_wood(s));
    CHECK(candidate(s, w).max_degree <= 3);
  }
}

TEST_CASE("index-maximal subpaths match the exhaustive cycle oracle") {
  for (const auto& f : {gen::k4(), gen::octahedron(), gen::cube(), gen::worked_example(), gen::wheel(6),
                        gen::prism(4), gen::random_triangulation(12, 4),
                        gen::random_triangulation(14, 9)}) {
    Suspension s = suspend_unchecked(f.g, f.roots);
    SchnyderWood w = minimize(s, compute_wood(s));
    OrderedPathPartition opp = compatible_opp(s, w, 1);
    CandidateGraph h = candidate(s, w);
    auto pmax = index_maximal_subpaths(s, h, opp);

    // oracle: highest path touched by each cycle of H, plus the containment
    // claim that the cycle holds the full extension of that path
    std::set<int> oracle;
    all_cycles(f.g, h.in_h, [&](const std::vector<Vertex>& cyc) {
      int hi = 0;
      for (Vertex v : cyc) hi = std::max(hi, opp.path_of[v]);
      oracle.insert(hi);
      const OppPath& p = opp.paths[hi];
      std::set<Vertex> on(cyc.begin(), cyc.end());
      for (Vertex v : p.vertices) CHECK(on.count(v));
      CHECK(on.count(p.left));
      CHECK(on.count(p.right));
    });
    CHECK(std::set<int>(pmax.begin(), pmax.end()) == oracle);
  }
}

TEST_CASE("k4 deletions and pair") {
  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  PipelineResult r = run_pipeline(s);

  // only the final path is index-maximal and the outer rule removes the
  // outgoing green edge of r1
  REQUIRE(r.d.entries.size() == 1);
  CHECK(r.d.entries[0].edge == edge_of(*f.g.find_dart(0, 1)));
  CHECK(r.d.entries[0].dcase == DeletionCase::outer_face);

  // tree = two outer edges plus one spoke, maximum degree two
  CHECK(r.pair.in_tree[edge_of(*f.g.find_dart(1, 2))]);
  CHECK(r.pair.in_tree[edge_of(*f.g.find_dart(0, 2))]);
  CHECK_FALSE(r.pair.in_tree[edge_of(*f.g.find_dart(0, 1))]);
  int spokes = 0;
  for (Vertex v : {0, 1, 2}) spokes += r.pair.in_tree[edge_of(*f.g.find_dart(3, v))];
  CHECK(spokes == 1);
  CHECK(r.pair.tree_max_degree == 2);
  CHECK(r.pair.co_tree_max_degree <= 3);

  // the oracle confirms the returned pair is among the valid ones
  OracleResult o = oracle_best_pair(f.g, 100);
  CHECK(o.tree_count == 16);
  CHECK(r.pair.tree_max_degree <= 4);
  CHECK(o.best <= 4);
}

TEST_CASE("pipeline output is exactly dual on the icosahedron") {
  auto f = gen::icosahedron();
  Suspension s = suspend(f.g, f.roots);
  PipelineResult r = run_pipeline(s);
  CHECK(r.pair.tree_max_degree <= 4);
  CHECK(r.pair.co_tree_max_degree <= 4);
  // recompute the co-tree independently through the plain dual
  DualMap dm = dual(f.g);
  std::vector<Edge> tree;
  for (Edge e = 0; e < f.g.edge_count(); ++e)
    if (r.pair.in_tree[e]) tree.push_back(e);
  std::vector<Edge> co = co_tree_of(f.g, dm, tree);
  std::set<Edge> co_set(co.begin(), co.end());
  for (Edge e = 0; e < f.g.edge_count(); ++e)
    CHECK(bool(r.pair.in_co_tree[e]) == bool(co_set.count(e)));
}

TEST_CASE("deletion provenance stays consistent corpus-wide") {
  for (const auto& f : {gen::worked_example(), gen::dodecahedron(), gen::prism(7),
                        gen::random_triangulation(60, 2)}) {
    Suspension s = suspend_unchecked(f.g, f.roots);
    PipelineResult r = run_pipeline(s);
    // every deletion entry names either the outer rule or a real covering path
    for (const auto& de : r.d.entries) {
      if (de.dcase == DeletionCase::outer_face) CHECK(de.covering_path == -1);
      else CHECK(de.covering_path > de.target_path);
    }
    CHECK(r.pair.tree_max_degree <= 4);
    CHECK(r.pair.co_tree_max_degree <= 4);
  }
}

TEST_CASE("build_tree_pair equals the pipeline pair") {
  auto f = gen::wheel(7);
  Suspension s = suspend(f.g, f.roots);
  TreePair p = build_tree_pair(s);
  PipelineResult r = run_pipeline(s);
  CHECK(p.in_tree == r.pair.in_tree);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("cotree_stress");

namespace {

// random sigma-internally 3-connected non-triangulations: grow a triangulation
// and delete inner edges while the class predicate holds
std::optional<Fixture> thinned_fixture(int n, uint64_t seed) {
  Fixture f = gen::random_triangulation(n, seed);
  std::mt19937_64 rng(seed * 7919 + n);
  auto outer = f.g.outer_boundary();
  for (int attempt = 0; attempt < n; ++attempt) {
    Edge e = Edge(rng() % f.g.edge_count());
    if (f.g.left_face(2 * e) == f.g.outer_face || f.g.left_face(2 * e + 1) == f.g.outer_face)
      continue;
    std::vector<std::vector<Vertex>> nbrs(f.g.n);
    for (Vertex v = 0; v < f.g.n; ++v)
      for (Dart d : f.g.rotation[v])
        if (edge_of(d) != e) nbrs[v].push_back(f.g.head(d));
    try {
      PlaneGraph thinned = build_plane_graph(f.g.n, nbrs, outer);
      if (!is_sigma_internally_3_connected(thinned, f.roots)) continue;
      f.g = std::move(thinned);
      f.name += "-";
    } catch (const Error&) {
      continue;
    }
  }
  if (f.g.edge_count() == 3 * f.g.n - 6) return std::nullopt;  // nothing removable
  return f;
}

}  // namespace

TEST_CASE("randomized non-triangulations run the searching peeler end to end") {
  int ran = 0;
  for (int n = 7; n <= 16; ++n)
    for (uint64_t seed = 1; seed <= 6; ++seed) {
      auto fx = thinned_fixture(n, seed);
      if (!fx) continue;
      ++ran;
      Suspension s = suspend(fx->g, fx->roots);
      PipelineResult r = run_pipeline(s);
      CHECK(r.pair.tree_max_degree <= 4);
      CHECK(r.pair.co_tree_max_degree <= 4);
      CHECK(check_opp(s, r.wood, r.opp).empty());
      CHECK(check_path_properties(s, r.wood, r.opp).empty());
      CHECK(check_interior_red_rule(s, r.wood, r.opp).empty());
      CHECK(check_interior_red_rule(r.dw.sd.susp, r.dw.wood, r.dual_opp).empty());
      CHECK(check_root_degrees(s, r.wood, r.pair).pass);
      long long tau = count_spanning_trees(edge_list_of(fx->g));
      if (tau <= 200000) {
        OracleResult o = oracle_best_pair(fx->g, 200000);
        CHECK(o.best <= 4);
      }
    }
  CHECK(ran >= 40);  // the thinning must actually produce general inputs
}

TEST_SUITE_END();
