#include <set>
#include <sstream>

#include "cotree4/gen.hpp"
#include "cotree4/io.hpp"
#include "doctest.h"

using namespace cotree4;

TEST_SUITE_BEGIN("plane_graph");

TEST_CASE("k4 counts and faces") {
  auto f = gen::k4();
  CHECK(f.g.n == 4);
  CHECK(f.g.edge_count() == 6);
  CHECK(f.g.face_count() == 4);
  for (FaceId fa = 0; fa < f.g.face_count(); ++fa) CHECK(f.g.face_darts(fa).size() == 3);
}

TEST_CASE("rotation invariants hold on fixtures") {
  for (const auto& f : {gen::k4(), gen::cube(), gen::worked_example(), gen::wheel(6), gen::prism(5)}) {
    const PlaneGraph& g = f.g;
    for (Dart d = 0; d < g.dart_count(); ++d) {
      CHECK(twin(twin(d)) == d);
      CHECK(g.head(twin(d)) == g.tail(d));
    }
    // face orbits partition the darts
    std::vector<int> seen(g.dart_count(), 0);
    for (FaceId fa = 0; fa < g.face_count(); ++fa)
      for (Dart d : g.face_darts(fa)) ++seen[d];
    for (Dart d = 0; d < g.dart_count(); ++d) CHECK(seen[d] == 1);
    CHECK(g.n - g.edge_count() + g.face_count() == 2);
  }
}

TEST_CASE("duplicated neighbor is an inconsistent rotation") {
  try {
    build_plane_graph(3, {{1, 2, 1}, {0, 2}, {0, 1}}, {0, 1, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == errc::inconsistent_rotation);
  }
}

TEST_CASE("one-sided edge is an inconsistent rotation") {
  try {
    build_plane_graph(3, {{1, 2}, {0}, {0, 1}}, {0, 1, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == errc::inconsistent_rotation);
  }
}

TEST_CASE("worked_example fixture has seven faces") {
  auto f = gen::worked_example();
  CHECK(f.g.n == 10);
  CHECK(f.g.edge_count() == 15);
  CHECK(f.g.face_count() == 7);
}

TEST_CASE("cube has six quadrilateral faces") {
  auto f = gen::cube();
  CHECK(f.g.n == 8);
  CHECK(f.g.edge_count() == 12);
  CHECK(f.g.face_count() == 6);
  for (FaceId fa = 0; fa < f.g.face_count(); ++fa) CHECK(f.g.face_darts(fa).size() == 4);
}

TEST_CASE("g5 has five triangles, the inner pentagon and the outer face") {
  auto f = gen::sun(5);
  CHECK(f.g.n == 10);
  CHECK(f.g.edge_count() == 15);
  CHECK(f.g.face_count() == 7);
  std::multiset<size_t> sizes;
  for (FaceId fa = 0; fa < f.g.face_count(); ++fa) sizes.insert(f.g.face_darts(fa).size());
  CHECK(sizes == std::multiset<size_t>{3, 3, 3, 3, 3, 5, 10});
}

TEST_CASE("tetrahedron is self-dual") {
  auto f = gen::k4();
  DualMap dm = dual(f.g);
  CHECK(dm.dual.n == 4);
  CHECK(dm.dual.edge_count() == 6);
  CHECK(isomorphic(f.g, dm.dual));
}

TEST_CASE("cube dualizes to the octahedron") {
  auto f = gen::cube();
  DualMap dm = dual(f.g);
  CHECK(isomorphic(dm.dual, gen::octahedron().g));
  CHECK_FALSE(isomorphic(dm.dual, f.g));
}

TEST_CASE("double dual is isomorphic to the primal") {
  for (const auto& f : {gen::k4(), gen::cube(), gen::octahedron(), gen::worked_example(), gen::prism(4)}) {
    DualMap dm = dual(f.g);
    DualMap dd = dual(dm.dual);
    CHECK(isomorphic(dd.dual, f.g));
    // edge ids are preserved; the dual dart of edge k separates the faces of
    // the primal darts of edge k
    for (Edge e = 0; e < f.g.edge_count(); ++e) {
      CHECK(dm.dual.tail(2 * e) == f.g.left_face(2 * e));
      CHECK(dm.dual.head(2 * e) == f.g.left_face(2 * e + 1));
    }
  }
}

TEST_CASE("sun dual support is complete bipartite") {
  for (int k = 4; k <= 8; ++k) {
    auto f = gen::sun(k);
    DualMap dm = dual(f.g);
    CHECK(dm.dual.n == k + 2);
    CHECK(dm.dual.edge_count() == 3 * k);
    std::set<std::pair<int, int>> support;
    for (Edge e = 0; e < dm.dual.edge_count(); ++e) {
      int a = dm.dual.tail(2 * e), b = dm.dual.head(2 * e);
      support.insert({std::min(a, b), std::max(a, b)});
    }
    CHECK(int(support.size()) == 2 * k);
    std::vector<int> deg(dm.dual.n, 0);
    for (auto [a, b] : support) {
      ++deg[a];
      ++deg[b];
    }
    std::vector<int> hubs;
    for (int v = 0; v < dm.dual.n; ++v) {
      CHECK((deg[v] == 2 || deg[v] == k));
      if (deg[v] == k) hubs.push_back(v);
    }
    REQUIRE(hubs.size() == 2);
    CHECK(!support.count({std::min(hubs[0], hubs[1]), std::max(hubs[0], hubs[1])}));
  }
}

TEST_CASE("sigma-internal 3-connectivity") {
  SUBCASE("k4 with every clockwise root triple") {
    auto f = gen::k4();
    auto walk = f.g.outer_boundary();
    const int kk = int(walk.size());
    for (int s = 0; s < kk; ++s)
      CHECK(
          is_sigma_internally_3_connected(f.g, {walk[s], walk[(s + 1) % kk], walk[(s + 2) % kk]}));
  }
  SUBCASE("path on four vertices") {
    PlaneGraph g = build_plane_graph(4, {{1}, {0, 2}, {1, 3}, {2}}, {0, 1, 2, 3, 2, 1});
    CHECK_FALSE(is_sigma_internally_3_connected(g, {0, 1, 2}));
  }
  SUBCASE("g7 fails for every clockwise root triple") {
    auto f = gen::sun(7);
    auto walk = f.g.outer_boundary();
    const int kk = int(walk.size());
    for (int a = 0; a < kk; ++a)
      for (int b = 1; b < kk; ++b)
        for (int c = b + 1; c < kk; ++c) {
          std::array<Vertex, 3> roots{walk[a], walk[(a + b) % kk], walk[(a + c) % kk]};
          if (roots[0] == roots[1] || roots[1] == roots[2] || roots[0] == roots[2]) continue;
          CHECK_FALSE(is_sigma_internally_3_connected(f.g, roots));
        }
  }
  SUBCASE("g5 cannot be suspended") {
    auto f = gen::sun(5);
    try {
      suspend(f.g, f.roots);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code == errc::not_internally_3_connected);
    }
  }
  SUBCASE("wrong root order is rejected") {
    auto f = gen::k4();
    try {
      is_sigma_internally_3_connected(f.g, {0, 2, 1});
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code == errc::roots_not_clockwise);
    }
  }
  SUBCASE("interior vertex cannot be a root") {
    auto f = gen::wheel(5);
    try {
      is_sigma_internally_3_connected(f.g, {0, 1, 5});
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code == errc::roots_not_on_outer_face);
    }
  }
}

TEST_CASE("suspended dual structure") {
  auto f = gen::worked_example();
  Suspension s = suspend(f.g, f.roots);
  SuspendedDual sd = suspended_dual(s);
  const PlaneGraph& dg = sd.susp.g;
  CHECK(dg.n == f.g.face_count() - 1 + 3);
  CHECK(dg.edge_count() == f.g.edge_count() + 3);
  CHECK(dg.outer_boundary().size() == 3);
  CHECK(sd.susp.roots[0] == sd.b[0]);
  CHECK(sd.susp.roots[1] == sd.b[1]);
  CHECK(sd.susp.roots[2] == sd.b[2]);
}

TEST_CASE("graph io round trip") {
  auto f = gen::worked_example();
  std::stringstream ss;
  write_graph(ss, f.g, f.roots);
  GraphInput gi = read_graph(ss);
  CHECK(gi.g.n == f.g.n);
  CHECK(gi.g.edge_count() == f.g.edge_count());
  REQUIRE(gi.roots.has_value());
  CHECK(*gi.roots == f.roots);
  std::stringstream ss2, ss3;
  write_graph(ss2, gi.g, gi.roots);
  write_graph(ss3, f.g, f.roots);
  CHECK(ss2.str() == ss3.str());
}

TEST_SUITE_END();
