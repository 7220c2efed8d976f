#include "cotree4/gen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace cotree4 {
namespace gen {

namespace {

Fixture from_lists(std::string name, int n, const std::vector<std::vector<Vertex>>& nbrs,
                   const std::vector<Vertex>& outer, std::array<Vertex, 3> roots) {
  Fixture f;
  f.name = std::move(name);
  f.g = build_plane_graph(n, nbrs, outer);
  f.roots = roots;
  return f;
}

/// Plane graph of a convex polyhedron given by 3D vertex coordinates and an
/// adjacency threshold: neighbors of v are sorted by angle in the plane
/// orthogonal to v's position vector, giving a consistent rotation system.
Fixture from_polyhedron(std::string name, const std::vector<std::array<double, 3>>& pts,
                        double edge_len, double tol) {
  const int n = int(pts.size());
  auto sub = [](std::array<double, 3> a, std::array<double, 3> b) {
    return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  auto dot = [](std::array<double, 3> a, std::array<double, 3> b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  auto cross = [](std::array<double, 3> a, std::array<double, 3> b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                 a[0] * b[1] - a[1] * b[0]};
  };
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> cand;
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      auto d = sub(pts[u], pts[v]);
      if (std::abs(std::sqrt(dot(d, d)) - edge_len) < tol) cand.push_back(u);
    }
    // local frame at v: angle of each neighbor around the outward normal
    auto nrm = pts[v];
    auto ref = sub(pts[cand[0]], pts[v]);
    auto ref_t = sub(ref, {nrm[0] * dot(ref, nrm) / dot(nrm, nrm),
                           nrm[1] * dot(ref, nrm) / dot(nrm, nrm),
                           nrm[2] * dot(ref, nrm) / dot(nrm, nrm)});
    auto perp = cross(nrm, ref_t);
    std::vector<std::pair<double, Vertex>> ang;
    for (Vertex u : cand) {
      auto d = sub(pts[u], pts[v]);
      ang.push_back({std::atan2(dot(d, perp), dot(d, ref_t)), u});
    }
    std::sort(ang.begin(), ang.end());
    for (auto& [a, u] : ang) nbrs[v].push_back(u);
  }
  PlaneGraph g = assemble_plane_graph(n, nbrs);
  g.outer_face = 0;
  Fixture f;
  f.name = std::move(name);
  f.g = std::move(g);
  f.roots = default_roots(f.g);
  return f;
}

}  // namespace

std::array<Vertex, 3> default_roots(const PlaneGraph& g) {
  auto walk = g.outer_boundary();
  const int k = int(walk.size());
  require(k >= 3, errc::bad_parameters, "outer face too small for a root triple");
  std::array<Vertex, 3> best{-1, -1, -1};
  for (int s = 0; s < k; ++s) {
    std::array<Vertex, 3> cand{walk[s], walk[(s + 1) % k], walk[(s + 2) % k]};
    if (cand[0] == cand[1] || cand[1] == cand[2] || cand[0] == cand[2]) continue;
    if (best[0] == -1 || cand < best) best = cand;
  }
  require(best[0] != -1, errc::bad_parameters, "no clockwise-consecutive root triple");
  return best;
}

Fixture k4() {
  return from_lists("k4", 4,
                    {{1, 3, 2},    // 0: top of the outer triangle
                     {2, 3, 0},    // 1
                     {0, 3, 1},    // 2
                     {0, 1, 2}},   // 3: center
                    {0, 1, 2}, {0, 1, 2});
}

Fixture tetrahedron() {
  Fixture f = k4();
  f.name = "tetrahedron";
  return f;
}

Fixture cube() {
  std::vector<std::array<double, 3>> pts;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back({double(x), double(y), double(z)});
  return from_polyhedron("cube", pts, 2.0, 1e-6);
}

Fixture octahedron() {
  return from_lists("octahedron", 6,
                    {{1, 4, 3, 2},
                     {2, 5, 4, 0},
                     {0, 3, 5, 1},
                     {0, 4, 5, 2},
                     {1, 5, 3, 0},
                     {1, 2, 3, 4}},
                    {0, 1, 2}, {0, 1, 2});
}

Fixture dodecahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> pts;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back({double(x), double(y), double(z)});
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      pts.push_back({0.0, a / phi, b * phi});
      pts.push_back({a / phi, b * phi, 0.0});
      pts.push_back({a * phi, 0.0, b / phi});
    }
  return from_polyhedron("dodecahedron", pts, 2.0 / phi, 1e-6);
}

Fixture icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> pts;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      pts.push_back({0.0, double(a), b * phi});
      pts.push_back({double(a), b * phi, 0.0});
      pts.push_back({a * phi, 0.0, double(b)});
    }
  return from_polyhedron("icosahedron", pts, 2.0, 1e-6);
}

Fixture wheel(int k) {
  require(k >= 3, errc::bad_parameters, "wheel needs k >= 3");
  const int hub = k;
  std::vector<std::vector<Vertex>> nbrs(k + 1);
  std::vector<Vertex> outer;
  for (int i = 0; i < k; ++i) {
    nbrs[i] = {(i + 1) % k, hub, (i + k - 1) % k};
    nbrs[hub].push_back(i);
    outer.push_back(i);
  }
  return from_lists("wheel" + std::to_string(k), k + 1, nbrs, outer, {0, 1, 2});
}

Fixture prism(int k) {
  require(k >= 3, errc::bad_parameters, "prism needs k >= 3");
  std::vector<std::vector<Vertex>> nbrs(2 * k);
  std::vector<Vertex> outer;
  for (int i = 0; i < k; ++i) {
    nbrs[i] = {(i + 1) % k, k + i, (i + k - 1) % k};
    nbrs[k + i] = {i, k + (i + 1) % k, k + (i + k - 1) % k};
    outer.push_back(i);
  }
  return from_lists("prism" + std::to_string(k), 2 * k, nbrs, outer, {0, 1, 2});
}

Fixture worked_example() {
  // ids: 0 r1, 1 r2, 2 r3, then the inner vertices 1,2,3,4,5,7,9 of the
  // drawing as 3,4,5,6,7,8,9
  return from_lists("worked_example", 10,
                    {{1, 9, 2},     // r1
                     {4, 8, 0},     // r2
                     {0, 7, 3},     // r3
                     {2, 5, 4},     // 1
                     {3, 6, 1},     // 2
                     {3, 7, 6},     // 3
                     {4, 5, 8},     // 4
                     {5, 2, 9},     // 5
                     {1, 6, 9},     // 7
                     {0, 8, 7}},    // 9
                    {0, 1, 4, 3, 2}, {0, 1, 2});
}

SchnyderWood worked_example_wood(const Suspension& s) {
  const PlaneGraph& g = s.g;
  SchnyderWood w;
  w.dart_color.assign(g.dart_count(), -1);
  auto set = [&](Vertex u, Vertex v, int c) {  // direction u -> v has color c
    auto d = g.find_dart(u, v);
    require(d.has_value(), errc::internal_error, "worked_example wood references a non-edge");
    w.dart_color[*d] = c;
  };
  // outer boundary
  set(2, 3, 1); set(3, 2, 2);   // r3-1 green/blue
  set(3, 4, 1); set(4, 3, 2);   // 1-2
  set(4, 1, 1); set(1, 4, 2);   // 2-r2
  set(2, 0, 0); set(0, 2, 2);   // r3-r1 red/blue
  set(1, 0, 0); set(0, 1, 1);   // r2-r1 red/green
  // interior
  set(3, 5, 0); set(5, 3, 2);   // 1-3 red/blue
  set(4, 6, 0); set(6, 4, 1);   // 2-4 red/green
  set(5, 7, 0); set(7, 5, 1);   // 3-5 red/green
  set(6, 8, 0); set(8, 6, 2);   // 4-7 red/blue
  set(5, 6, 1); set(6, 5, 2);   // 3-4 green/blue
  set(7, 2, 2);                 // 5 -> r3 blue, unidirected
  set(8, 1, 1);                 // 7 -> r2 green, unidirected
  set(7, 9, 0); set(9, 7, 2);   // 5-9 red/blue
  set(8, 9, 0); set(9, 8, 1);   // 7-9 red/green
  set(9, 0, 0);                 // 9 -> r1 red, unidirected
  return w;
}

Fixture sun(int k) {
  require(k >= 3, errc::bad_parameters, "sun needs k >= 3");
  const int n = 2 * k;
  std::vector<std::vector<Vertex>> nbrs(n);
  std::vector<Vertex> outer;
  for (int i = 0; i < k; ++i) {
    int w = i, wn = (i + 1) % k, wp = (i + k - 1) % k;
    nbrs[w] = {wp, k + wp, k + w, wn};  // clockwise: prev cycle, p_{i-1}, p_i, next cycle
    nbrs[k + i] = {w, wn};
    outer.push_back(w);
    outer.push_back(k + i);
  }
  Fixture f;
  f.name = "sun" + std::to_string(k);
  f.g = build_plane_graph(n, nbrs, outer);
  f.roots = {0, 1, 2};
  return f;
}

Fixture random_triangulation(int n, uint64_t seed) {
  require(n >= 4, errc::bad_parameters, "triangulation needs n >= 4");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

  // rotation lists as circular maps dart -> next clockwise dart; darts are
  // pairs (2e, 2e+1); faces tracked as dart triples (d_ab, d_bc, d_ca)
  std::vector<Vertex> heads;
  std::vector<Dart> cw;  // next clockwise dart at the tail
  auto new_edge = [&](Vertex u, Vertex v) {
    heads.push_back(v);
    heads.push_back(u);
    cw.push_back(-1);
    cw.push_back(-1);
    return int(heads.size()) - 2;
  };
  // K4: outer triangle 0,1,2 clockwise, center 3
  Dart d01 = new_edge(0, 1), d12 = new_edge(1, 2), d20 = new_edge(2, 0);
  Dart d03 = new_edge(0, 3), d13 = new_edge(1, 3), d23 = new_edge(2, 3);
  auto link = [&](std::vector<Dart> order) {  // clockwise rotation at one vertex
    for (size_t i = 0; i < order.size(); ++i) cw[order[i]] = order[(i + 1) % order.size()];
  };
  link({d01, d03, twin(d20)});
  link({d12, d13, twin(d01)});
  link({d20, d23, twin(d12)});
  link({twin(d03), twin(d13), twin(d23)});
  struct Tri {
    Dart a, b, c;  // face orbit darts, counterclockwise in the drawing
  };
  std::vector<Tri> tris{{twin(d01), d03, twin(d13)},
                        {twin(d12), d13, twin(d23)},
                        {twin(d20), d23, twin(d03)}};

  for (Vertex x = 4; x < n; ++x) {
    size_t pick = rng() % tris.size();
    Tri t = tris[pick];
    Vertex a = heads[twin(t.a)], b = heads[t.a], c = heads[t.b];
    Dart xa = new_edge(x, a), xb = new_edge(x, b), xc = new_edge(x, c);
    // rotation at x: faces are counterclockwise, so clockwise order is a, c, b
    link({xa, xc, xb});
    // insert x immediately clockwise-before the face dart at each corner
    auto insert_before = [&](Dart nd, Dart face_dart) {
      Dart p = face_dart;
      while (cw[p] != face_dart) p = cw[p];
      cw[p] = nd;
      cw[nd] = face_dart;
    };
    insert_before(twin(xa), t.a);
    insert_before(twin(xb), t.b);
    insert_before(twin(xc), t.c);
    tris[pick] = {t.a, twin(xb), xa};
    tris.push_back({t.b, twin(xc), xb});
    tris.push_back({t.c, twin(xa), xc});
  }

  PlaneGraph g;
  g.n = n;
  g.heads = heads;
  g.rotation.assign(n, {});
  std::vector<char> placed(heads.size(), 0);
  for (Dart d0 = 0; d0 < int(heads.size()); ++d0) {
    if (placed[d0]) continue;
    Vertex v = heads[twin(d0)];
    Dart d = d0;
    do {
      placed[d] = 1;
      g.rotation[v].push_back(d);
      d = cw[d];
    } while (d != d0);
  }
  g.finalize();
  g.outer_face = g.left_face(*g.find_dart(0, 1));
  require(g.face_darts(g.outer_face).size() == 3, errc::internal_error,
          "outer face of the grown triangulation must stay a triangle");

  Fixture f;
  f.name = "rt" + std::to_string(n) + "s" + std::to_string(seed);
  f.g = std::move(g);
  f.roots = {0, 1, 2};
  return f;
}

}  // namespace gen

std::vector<Fixture> corpus(CorpusProfile profile) {
  std::vector<Fixture> out;
  if (profile == CorpusProfile::small) {
    out.push_back(gen::k4());
    out.push_back(gen::octahedron());
    out.push_back(gen::cube());
    out.push_back(gen::icosahedron());
    out.push_back(gen::dodecahedron());
    out.push_back(gen::worked_example());
    for (int k = 4; k <= 8; ++k) out.push_back(gen::wheel(k));
    for (int k = 3; k <= 8; ++k) out.push_back(gen::prism(k));
    for (int n = 5; n <= 14; ++n)
      for (uint64_t seed : {1, 2}) out.push_back(gen::random_triangulation(n, seed));
  } else if (profile == CorpusProfile::medium) {
    const int sizes[] = {16, 20, 24, 28, 32, 38, 45, 52, 60, 70, 80, 95, 110, 130,
                         150, 170, 200, 230, 260, 300, 330, 360, 390, 420, 450, 470, 485, 500};
    int idx = 0;
    for (int n : sizes)
      for (uint64_t s = 1; s <= 7; ++s) out.push_back(gen::random_triangulation(n, s + 13 * idx++));
  } else {
    for (int n : {1250, 2500, 5000, 10000, 20000})
      out.push_back(gen::random_triangulation(n, 1));
  }
  return out;
}

std::vector<Fixture> negative_corpus() {
  std::vector<Fixture> out;
  for (int k = 4; k <= 7; ++k) out.push_back(gen::sun(k));
  return out;
}

}  // namespace cotree4
