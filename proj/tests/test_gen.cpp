#include "cotree4/gen.hpp"
#include "cotree4/io.hpp"
#include "doctest.h"

#include <sstream>

using namespace cotree4;

namespace {

// plain 3-connectivity by the articulation sweep, used as the brute oracle
bool three_connected(const PlaneGraph& g) {
  if (g.n < 4) return false;
  for (Vertex skip = 0; skip < g.n; ++skip) {
    std::vector<char> alive(g.n, 1);
    alive[skip] = 0;
    for (Vertex second = 0; second < g.n; ++second) {
      if (second == skip) continue;
      alive[second] = 0;
      Vertex start = -1;
      int total = 0;
      for (Vertex v = 0; v < g.n; ++v)
        if (alive[v]) {
          ++total;
          start = v;
        }
      std::vector<Vertex> stack{start};
      std::vector<char> vis(g.n, 0);
      vis[start] = 1;
      int cnt = 0;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++cnt;
        for (Vertex u : g.neighbors(v))
          if (alive[u] && !vis[u]) {
            vis[u] = 1;
            stack.push_back(u);
          }
      }
      if (cnt != total) return false;
      alive[second] = 1;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("gen");

TEST_CASE("sun(11) has the documented size") {
  auto f = gen::sun(11);
  CHECK(f.g.n == 22);
  CHECK(f.g.edge_count() == 33);
}

TEST_CASE("wheel(4) is the 3-connected W4") {
  auto f = gen::wheel(4);
  CHECK(f.g.n == 5);
  CHECK(f.g.edge_count() == 8);
  CHECK(three_connected(f.g));
}

TEST_CASE("random triangulations are deterministic per seed") {
  auto a = gen::random_triangulation(100, 7);
  auto b = gen::random_triangulation(100, 7);
  std::stringstream sa, sb;
  write_graph(sa, a.g, a.roots);
  write_graph(sb, b.g, b.roots);
  CHECK(sa.str() == sb.str());
  auto c = gen::random_triangulation(100, 8);
  std::stringstream sc;
  write_graph(sc, c.g, c.roots);
  CHECK(sa.str() != sc.str());
}

TEST_CASE("random triangulations are maximal planar and 3-connected") {
  for (int n : {4, 7, 12, 25, 50}) {
    auto f = gen::random_triangulation(n, n);
    CHECK(3 * f.g.edge_count() == 3 * (3 * f.g.n - 6));  // E = 3V - 6
    CHECK(f.g.face_count() == 2 * f.g.n - 4);
    CHECK(three_connected(f.g));
    CHECK(is_sigma_internally_3_connected(f.g, f.roots));
  }
  for (int n : {120, 400}) {  // spot checks above the brute-force range
    auto f = gen::random_triangulation(n, n);
    CHECK(f.g.edge_count() == 3 * f.g.n - 6);
    CHECK(is_sigma_internally_3_connected(f.g, f.roots));
  }
}

TEST_CASE("platonic fixtures") {
  CHECK(gen::octahedron().g.n == 6);
  CHECK(gen::octahedron().g.edge_count() == 12);
  CHECK(gen::icosahedron().g.n == 12);
  CHECK(gen::icosahedron().g.edge_count() == 30);
  CHECK(gen::icosahedron().g.face_count() == 20);
  CHECK(gen::dodecahedron().g.n == 20);
  CHECK(gen::dodecahedron().g.edge_count() == 30);
  CHECK(gen::dodecahedron().g.face_count() == 12);
  CHECK(three_connected(gen::dodecahedron().g));
  CHECK(isomorphic(dual(gen::icosahedron().g).dual, gen::dodecahedron().g));
}

TEST_CASE("small corpus contents") {
  auto small = corpus(CorpusProfile::small);
  auto has = [&](const std::string& name) {
    for (const auto& f : small)
      if (f.name == name) return true;
    return false;
  };
  CHECK(has("k4"));
  CHECK(has("octahedron"));
  CHECK(has("icosahedron"));
  CHECK(has("worked_example"));
  for (int k = 4; k <= 8; ++k) CHECK(has("wheel" + std::to_string(k)));
  for (const auto& f : small) CHECK(is_sigma_internally_3_connected(f.g, f.roots));
}

TEST_CASE("medium corpus size and membership") {
  auto small = corpus(CorpusProfile::small);
  auto medium = corpus(CorpusProfile::medium);
  CHECK(small.size() + medium.size() >= 200);
  int max_n = 0;
  for (const auto& f : medium) max_n = std::max(max_n, f.g.n);
  CHECK(max_n == 500);
  // every fifth member gets the full predicate here; the acceptance suite
  // exercises the whole corpus end to end anyway
  for (size_t i = 0; i < medium.size(); i += 5)
    CHECK(is_sigma_internally_3_connected(medium[i].g, medium[i].roots));
}

TEST_CASE("bench corpus schedule") {
  auto bench = corpus(CorpusProfile::bench);
  REQUIRE(bench.size() == 5);
  CHECK(bench[0].g.n == 1250);
  CHECK(bench[4].g.n == 20000);
}

TEST_CASE("negative bucket members fail the predicate for every root triple") {
  auto neg = negative_corpus();
  REQUIRE(neg.size() == 4);
  for (const auto& f : neg) {
    auto walk = f.g.outer_boundary();
    const int kk = int(walk.size());
    bool any = false;
    for (int a = 0; a < kk && !any; ++a)
      for (int b = 1; b < kk && !any; ++b)
        for (int c = b + 1; c < kk && !any; ++c) {
          std::array<Vertex, 3> roots{walk[a], walk[(a + b) % kk], walk[(a + c) % kk]};
          if (roots[0] == roots[1] || roots[1] == roots[2] || roots[0] == roots[2]) continue;
          if (is_sigma_internally_3_connected(f.g, roots)) any = true;
        }
    CHECK_FALSE(any);
  }
}

TEST_CASE("bad parameters are rejected") {
  CHECK_THROWS_AS(gen::wheel(2), Error);
  CHECK_THROWS_AS(gen::random_triangulation(3, 1), Error);
}

TEST_SUITE_END();
