#include <functional>
#include <set>
#include <sstream>

#include "cotree4/gen.hpp"
#include "cotree4/io.hpp"
#include "doctest.h"

using namespace cotree4;

namespace {

// the wood of the single-inner-vertex K4: spokes unidirected toward the
// roots, outer edges bidirected with the direction toward r_i colored i
SchnyderWood k4_wood(const Suspension& s) {
  SchnyderWood w;
  w.dart_color.assign(s.g.dart_count(), -1);
  auto set = [&](Vertex u, Vertex v, int c) { w.dart_color[*s.g.find_dart(u, v)] = c; };
  set(1, 0, 0); set(0, 1, 1);  // r1-r2: toward r1 red, toward r2 green
  set(2, 1, 1); set(1, 2, 2);  // r2-r3
  set(2, 0, 0); set(0, 2, 2);  // r1-r3
  set(3, 0, 0);                // spokes
  set(3, 1, 1);
  set(3, 2, 2);
  return w;
}

// exhaustive enumeration of every simple directed cycle on a completion (all
// cycles through the smallest vertex first, then that vertex deleted); the
// desk-scale oracle for the clockwise-cycle finder
bool has_clockwise_cycle_brute(const Completion& c) {
  const PlaneGraph& g = c.g;
  std::vector<std::vector<Dart>> out(g.n);
  for (Edge e = 0; e < g.edge_count(); ++e) out[g.tail(c.arc[e])].push_back(c.arc[e]);
  bool found = false;
  long long guard = 0;
  std::vector<Dart> stack;
  std::vector<char> used(g.n, 0);
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex root, Vertex v) {
    if (found) return;
    REQUIRE(++guard < 20'000'000);
    for (Dart d : out[v]) {
      Vertex u = g.head(d);
      if (u == root) {
        stack.push_back(d);
        if (cycle_is_clockwise(c, stack)) found = true;
        stack.pop_back();
      } else if (u > root && !used[u]) {
        used[u] = 1;
        stack.push_back(d);
        dfs(root, u);
        stack.pop_back();
        used[u] = 0;
      }
      if (found) return;
    }
  };
  for (Vertex v = 0; v < g.n && !found; ++v) {
    used[v] = 1;
    dfs(v, v);
  }
  return found;
}

}  // namespace

TEST_SUITE_BEGIN("schnyder");

TEST_CASE("the k4 wood satisfies every wood condition") {
  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood w = k4_wood(s);
  CHECK(check_wood(s, w).empty());
}

TEST_CASE("a duplicated outgoing color violates condition 3") {
  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood w = k4_wood(s);
  // recolor the spoke 3->1 to red: vertex 3 then has two red out-edges
  w.dart_color[*s.g.find_dart(3, 1)] = 0;
  auto v = check_wood(s, w);
  REQUIRE(!v.empty());
  bool cond3_at_3 = false;
  for (const auto& viol : v) cond3_at_3 = cond3_at_3 || (viol.condition == 3 && viol.vertex == 3);
  CHECK(cond3_at_3);
}

TEST_CASE("uncovered and equal-color edges violate condition 1") {
  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood w = k4_wood(s);
  Edge e = edge_of(*s.g.find_dart(3, 1));
  w.dart_color[2 * e] = w.dart_color[2 * e + 1] = -1;
  bool uncovered = false;
  for (const auto& viol : check_wood(s, w)) uncovered = uncovered || viol.condition == 1;
  CHECK(uncovered);
}

TEST_CASE("the drawn wood of the worked example is valid") {
  auto f = gen::worked_example();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood w = gen::worked_example_wood(s);
  CHECK(check_wood(s, w).empty());
}

TEST_CASE("computed woods validate across the small corpus") {
  for (const auto& f : corpus(CorpusProfile::small)) {
    Suspension s = suspend_unchecked(f.g, f.roots);
    SchnyderWood w = compute_wood(s);
    CHECK(check_wood(s, w).empty());
  }
}

TEST_CASE("computed k4 wood matches the canonical labeling") {
  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  CHECK(compute_wood(s).dart_color == k4_wood(s).dart_color);
}

TEST_CASE("trees extracts directed spanning trees") {
  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood w = k4_wood(s);
  auto red = trees(s, w, 0);
  REQUIRE(red.size() == 3);
  std::set<std::pair<Vertex, Vertex>> arcs;
  for (Dart d : red) arcs.insert({s.g.tail(d), s.g.head(d)});
  CHECK(arcs == std::set<std::pair<Vertex, Vertex>>{{3, 0}, {1, 0}, {2, 0}});

  auto f2 = gen::worked_example();
  Suspension s2 = suspend(f2.g, f2.roots);
  SchnyderWood w2 = gen::worked_example_wood(s2);
  for (int c = 0; c < 3; ++c) {
    CHECK(trees(s2, w2, c).size() == size_t(f2.g.n - 1));
    CHECK(tree_union_acyclic(s2, w2, c));
  }
}

TEST_CASE("dual wood of the worked example matches the drawn labels") {
  auto f = gen::worked_example();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood w = gen::worked_example_wood(s);
  DualWood dw = dual_wood(s, w);
  CHECK(check_wood(dw.sd.susp, dw.wood).empty());
  const PlaneGraph& dg = dw.sd.susp.g;

  auto face_with = [&](std::set<Vertex> tails) -> Vertex {
    for (FaceId fa = 0; fa < f.g.face_count(); ++fa) {
      auto t = f.g.face_tails(fa);
      if (std::set<Vertex>(t.begin(), t.end()) == tails)
        return dw.sd.dual_vertex_of_face[fa];
    }
    return -1;
  };
  // (r3-1)*: unidirected red from the quadrilateral r3,1,3,5 toward b1
  {
    Edge e = edge_of(*f.g.find_dart(2, 3));
    Dart d = dw.wood.direction(e);
    CHECK(dw.wood.unidirected(e));
    CHECK(dw.wood.dart_color[d] == 0);
    CHECK(dg.tail(d) == face_with({2, 3, 5, 7}));
    CHECK(dg.head(d) == dw.sd.b[0]);
  }
  // (9-5)*: unidirected green from the central pentagon to the upper-left face
  {
    Edge e = edge_of(*f.g.find_dart(9, 7));
    Dart d = dw.wood.direction(e);
    CHECK(dw.wood.unidirected(e));
    CHECK(dw.wood.dart_color[d] == 1);
    CHECK(dg.tail(d) == face_with({5, 6, 7, 8, 9}));
    CHECK(dg.head(d) == face_with({0, 2, 7, 9}));
  }
  // (r1-9)* crosses a unidirected red edge: bidirected green-blue
  {
    Edge e = edge_of(*f.g.find_dart(0, 9));
    CHECK(dw.wood.bidirected(e));
    std::set<int> colors{dw.wood.dart_color[2 * e], dw.wood.dart_color[2 * e + 1]};
    CHECK(colors == std::set<int>{1, 2});
  }
}

TEST_CASE("dual wood is an involution") {
  for (const auto& f : {gen::k4(), gen::cube(), gen::worked_example(), gen::wheel(5), gen::prism(4)}) {
    Suspension s = suspend_unchecked(f.g, f.roots);
    SchnyderWood w = compute_wood(s);
    DualWood dw = dual_wood(s, w);
    DualWood ddw = dual_wood(dw.sd.susp, dw.wood);
    for (Edge e = 0; e < f.g.edge_count(); ++e) {
      // the double dual reverses dart orientation edge-wise
      CHECK(ddw.wood.dart_color[2 * e] == w.dart_color[2 * e + 1]);
      CHECK(ddw.wood.dart_color[2 * e + 1] == w.dart_color[2 * e]);
    }
  }
}

TEST_CASE("completion of k4 has the counted layout") {
  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  Completion c = build_completion(s, k4_wood(s));
  CHECK(c.g.n == 4 + 6 + 9 + 6);
  CHECK(c.g.edge_count() == 39);
  CHECK(c.g.face_count() == 16);
  CHECK(check_crossing_vertices(c).empty());
}

TEST_CASE("crossing vertices have the 1-out/3-in rgb pattern corpus-wide") {
  for (const auto& f : {gen::octahedron(), gen::worked_example(), gen::prism(5), gen::wheel(7)}) {
    Suspension s = suspend_unchecked(f.g, f.roots);
    Completion c = build_completion(s, compute_wood(s));
    CHECK(check_crossing_vertices(c).empty());
  }
}

TEST_CASE("the drawn wood has a clockwise cycle, the k4 wood has none") {
  auto f2 = gen::worked_example();
  Suspension s2 = suspend(f2.g, f2.roots);
  Completion c2 = build_completion(s2, gen::worked_example_wood(s2));
  auto cycle = find_clockwise_cycle(c2);
  REQUIRE(cycle.has_value());
  CHECK(cycle_is_clockwise(c2, *cycle));
  CHECK(has_clockwise_cycle_brute(c2));

  auto f = gen::k4();
  Suspension s = suspend(f.g, f.roots);
  Completion c = build_completion(s, k4_wood(s));
  CHECK_FALSE(find_clockwise_cycle(c).has_value());
  CHECK_FALSE(has_clockwise_cycle_brute(c));
}

TEST_CASE("the cycle finder agrees with the exhaustive oracle") {
  for (const auto& f : {gen::cube(), gen::prism(3), gen::wheel(4), gen::worked_example()}) {
    Suspension s = suspend_unchecked(f.g, f.roots);
    SchnyderWood w = compute_wood(s);
    Completion c = build_completion(s, w);
    CHECK(find_clockwise_cycle(c).has_value() == has_clockwise_cycle_brute(c));
  }
}

TEST_CASE("minimize reaches and preserves the lattice minimum") {
  auto f = gen::worked_example();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood drawn = gen::worked_example_wood(s);
  CHECK_FALSE(is_minimal(s, drawn));
  SchnyderWood m = minimize(s, drawn);
  CHECK(check_wood(s, m).empty());
  CHECK(is_minimal(s, m));
  // fixpoint and idempotence
  CHECK(minimize(s, m).dart_color == m.dart_color);

  for (const auto& fx : {gen::cube(), gen::dodecahedron(), gen::prism(6), gen::wheel(8)}) {
    Suspension sx = suspend_unchecked(fx.g, fx.roots);
    SchnyderWood mx = minimize(sx, compute_wood(sx));
    CHECK(is_minimal(sx, mx));
    CHECK(minimize(sx, mx).dart_color == mx.dart_color);
    DualWood dw = dual_wood(sx, mx);
    CHECK(is_minimal(dw.sd.susp, dw.wood));
  }
}

TEST_CASE("wood serialization round trip") {
  auto f = gen::worked_example();
  Suspension s = suspend(f.g, f.roots);
  SchnyderWood w = gen::worked_example_wood(s);
  std::stringstream ss;
  write_wood(ss, s, w);
  SchnyderWood r = read_wood(ss, s);
  CHECK(r.dart_color == w.dart_color);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("schnyder_descent");

TEST_CASE("general cycle descent reaches the identical minimum") {
  auto fixtures = {gen::cube(), gen::dodecahedron(), gen::prism(6), gen::prism(3),
                   gen::worked_example(), gen::wheel(8)};
  for (const auto& f : fixtures) {
    Suspension s = suspend_unchecked(f.g, f.roots);
    SchnyderWood seed = compute_wood(s);
    CHECK(minimize_by_cycles(s, seed).dart_color == minimize(s, seed).dart_color);
  }
  // the drawn wood of the worked example starts strictly above the minimum
  auto f2 = gen::worked_example();
  Suspension s2 = suspend(f2.g, f2.roots);
  SchnyderWood drawn = gen::worked_example_wood(s2);
  CHECK(minimize_by_cycles(s2, drawn).dart_color == minimize(s2, drawn).dart_color);
}

TEST_SUITE_END();
