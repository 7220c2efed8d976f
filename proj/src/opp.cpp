#include "cotree4/opp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cotree4 {

namespace {

constexpr int64_t kGap = int64_t(1) << 40;

struct PathSkeleton {
  std::vector<std::vector<Vertex>> paths;
  std::vector<int> path_of;
};

// maximal j-(j+1)-colored paths, each oriented along its j-direction
PathSkeleton maximal_two_colored_paths(const Suspension& s, const SchnyderWood& w, int j) {
  const PlaneGraph& g = s.g;
  const int jn = color_next(j);
  auto is_path_edge = [&](Edge e) {
    int c0 = w.dart_color[2 * e], c1 = w.dart_color[2 * e + 1];
    return c0 >= 0 && c1 >= 0 && ((c0 == j && c1 == jn) || (c0 == jn && c1 == j));
  };
  std::vector<std::vector<Dart>> inc(g.n);
  for (Edge e = 0; e < g.edge_count(); ++e)
    if (is_path_edge(e)) {
      inc[g.tail(2 * e)].push_back(2 * e);
      inc[g.tail(2 * e + 1)].push_back(2 * e + 1);
    }
  PathSkeleton out;
  out.path_of.assign(g.n, -1);
  auto start_path = [&](Vertex v) {
    int id = int(out.paths.size());
    out.paths.emplace_back();
    std::vector<Vertex>& p = out.paths.back();
    p.push_back(v);
    out.path_of[v] = id;
    Vertex cur = v;
    while (true) {
      Dart fwd = -1;
      for (Dart d : inc[cur])
        if (w.dart_color[d] == j && out.path_of[g.head(d)] == -1) fwd = d;
      if (fwd == -1) break;
      cur = g.head(fwd);
      out.path_of[cur] = id;
      p.push_back(cur);
    }
  };
  for (Vertex v = 0; v < g.n; ++v) {
    require(inc[v].size() <= 2, errc::invalid_wood, "three two-colored path edges at a vertex");
    if (out.path_of[v] != -1 || inc[v].empty()) continue;
    // v starts a path iff its unique incident path edge leaves it j-colored
    if (inc[v].size() == 1 && w.dart_color[inc[v][0]] == j) start_path(v);
  }
  for (Vertex v = 0; v < g.n; ++v)
    if (out.path_of[v] == -1 && inc[v].empty()) start_path(v);  // singleton
  for (Vertex v = 0; v < g.n; ++v)
    require(out.path_of[v] != -1, errc::invalid_wood, "two-colored cycle in the wood");
  return out;
}

}  // namespace

OrderedPathPartition compatible_opp(const Suspension& s, const SchnyderWood& w, int j) {
  require(j >= 0 && j < 3, errc::bad_parameters, "color");
  require_valid_wood(s, w);
  const PlaneGraph& g = s.g;
  const Vertex rj = s.roots[j], rj1 = s.roots[(j + 1) % 3], rj2 = s.roots[(j + 2) % 3];

  PathSkeleton sk = maximal_two_colored_paths(s, w, j);
  const int np = int(sk.paths.size());

  // reachability arcs between paths: j- and (j+1)-darts reversed, (j+2)-darts
  // forward; every arc points from an earlier to a later path
  std::vector<std::vector<int>> succ(np);
  std::vector<int> indeg(np, 0);
  for (Dart d = 0; d < g.dart_count(); ++d) {
    int c = w.dart_color[d];
    if (c < 0) continue;
    Vertex from = g.tail(d), to = g.head(d);
    if (c == j || c == (j + 1) % 3)
      std::swap(from, to);
    else if (c != (j + 2) % 3)
      continue;
    int a = sk.path_of[from], b = sk.path_of[to];
    if (a == b) continue;
    succ[a].push_back(b);
    ++indeg[b];
  }

  const int p0 = sk.path_of[rj];
  require(sk.path_of[rj1] == p0, errc::invalid_wood, "base pair not joined by a two-colored path");
  require(sk.paths[p0].front() == rj1 && sk.paths[p0].back() == rj, errc::invalid_wood,
          "initial path is not oriented from r_{j+1} to r_j");
  require(indeg[p0] == 0, errc::invalid_wood, "initial path has an order predecessor");
  require(sk.paths[sk.path_of[rj2]].size() == 1, errc::invalid_wood,
          "r_{j+2} is not a singleton path");

  OrderedPathPartition opp;
  opp.j = j;
  opp.path_of.assign(g.n, -1);
  opp.cover_edge.assign(g.edge_count(), -1);
  opp.cover_pos.assign(g.edge_count(), -1);
  opp.cover_vertex.assign(g.n, -1);

  // attachment targets, fixed by the wood
  std::vector<Vertex> v0_target(np, -1), vk1_target(np, -1);
  std::vector<Edge> left_edge(np, -1), right_edge(np, -1);
  for (int p = 0; p < np; ++p) {
    if (p == p0) continue;
    Dart dl = outgoing_dart(s, w, sk.paths[p].front(), (j + 1) % 3);
    Dart dr = outgoing_dart(s, w, sk.paths[p].back(), j);
    require(dl >= 0 && dr >= 0, errc::invalid_wood, "path endpoint misses an outgoing edge");
    v0_target[p] = g.head(dl);
    left_edge[p] = edge_of(dl);
    vk1_target[p] = g.head(dr);
    right_edge[p] = edge_of(dr);
  }

  // contour as a linked list with sparse positions
  std::vector<Vertex> nxt(g.n, -1);
  std::vector<Edge> edge_to_next(g.n, -1);
  std::vector<char> on_contour(g.n, 0);
  std::vector<int64_t> pos(g.n, 0);
  // ready paths keyed by (attachment position, smallest vertex id)
  std::vector<Vertex> min_vertex(np);
  for (int p = 0; p < np; ++p)
    min_vertex[p] = *std::min_element(sk.paths[p].begin(), sk.paths[p].end());
  std::vector<int> path_by_min(g.n, -1);
  for (int p = 0; p < np; ++p) path_by_min[min_vertex[p]] = p;
  std::set<std::pair<int64_t, Vertex>> ready;
  std::vector<char> in_ready(np, 0);

  auto renumber = [&]() {
    int64_t at = 0;
    for (Vertex v = rj1;; v = nxt[v]) {
      pos[v] = at;
      at += kGap;
      if (v == rj) break;
    }
    std::set<std::pair<int64_t, Vertex>> rebuilt;
    for (int p = 0; p < np; ++p)
      if (in_ready[p]) rebuilt.insert({pos[v0_target[p]], min_vertex[p]});
    ready.swap(rebuilt);
  };

  auto place = [&](int p) {
    int idx = int(opp.paths.size());
    OppPath path;
    path.vertices = sk.paths[p];
    for (size_t t = 0; t + 1 < path.vertices.size(); ++t)
      path.edges.push_back(edge_of(*g.find_dart(path.vertices[t], path.vertices[t + 1])));
    for (Vertex v : path.vertices) opp.path_of[v] = idx;
    if (idx == 0) {
      int64_t at = 0;
      Vertex prev = -1;
      for (Vertex v : path.vertices) {
        on_contour[v] = 1;
        pos[v] = at;
        at += kGap;
        if (prev != -1) {
          nxt[prev] = v;
          edge_to_next[prev] = edge_of(*g.find_dart(prev, v));
        }
        prev = v;
      }
    } else {
      path.left = v0_target[p];
      path.right = vk1_target[p];
      path.left_edge = left_edge[p];
      path.right_edge = right_edge[p];
      require(on_contour[path.left] && on_contour[path.right], errc::invalid_wood,
              "attachment vertex left the contour");
      require(pos[path.left] < pos[path.right], errc::invalid_wood,
              "left attachment is not left of the right attachment");
      for (Vertex v = path.left; v != path.right;) {
        Vertex u = nxt[v];
        opp.cover_edge[edge_to_next[v]] = idx;
        opp.cover_pos[edge_to_next[v]] = pos[v];
        if (v != path.left) {
          opp.cover_vertex[v] = idx;
          on_contour[v] = 0;
        }
        v = u;
      }
      const int k = int(path.vertices.size());
      if (pos[path.right] - pos[path.left] <= k) {
        renumber();
        require(pos[path.right] - pos[path.left] > k, errc::internal_error, "contour overflow");
      }
      int64_t gap = (pos[path.right] - pos[path.left]) / (k + 1);
      Vertex prev = path.left;
      int64_t at = pos[path.left];
      for (int t = 0; t < k; ++t) {
        Vertex v = path.vertices[t];
        nxt[prev] = v;
        edge_to_next[prev] = t == 0 ? path.left_edge : edge_of(*g.find_dart(prev, v));
        on_contour[v] = 1;
        pos[v] = (at += gap);
        prev = v;
      }
      nxt[prev] = path.right;
      edge_to_next[prev] = path.right_edge;
    }
    opp.paths.push_back(std::move(path));
  };

  place(p0);
  int placed = 1;
  for (int b : succ[p0])
    if (--indeg[b] == 0) {
      ready.insert({pos[v0_target[b]], min_vertex[b]});
      in_ready[b] = 1;
    }
  while (!ready.empty()) {
    int p = path_by_min[ready.begin()->second];
    ready.erase(ready.begin());
    in_ready[p] = 0;
    place(p);
    ++placed;
    for (int b : succ[p])
      if (--indeg[b] == 0) {
        require(on_contour[v0_target[b]], errc::invalid_wood, "ready path lost its attachment");
        ready.insert({pos[v0_target[b]], min_vertex[b]});
        in_ready[b] = 1;
      }
  }
  require(placed == np, errc::cycle_in_order_graph, "reachability order contains a cycle");
  require(opp.paths.back().vertices == std::vector<Vertex>{rj2}, errc::invalid_wood,
          "order does not end with the singleton r_{j+2}");
  return opp;
}

std::vector<Vertex> contour_of(const Suspension& s, int j, const std::vector<char>& in_vi) {
  const PlaneGraph& g = s.g;
  const Vertex rj = s.roots[j], rj1 = s.roots[(j + 1) % 3];
  auto alive_dart = [&](Dart d) { return in_vi[g.tail(d)] && in_vi[g.head(d)]; };
  Dart d0 = s.root_out[j];
  require(alive_dart(d0), errc::internal_error, "initial path not contained in the vertex set");
  std::vector<Vertex> seq;
  bool capture = false;
  Dart d = d0;
  int guard = 0;
  do {
    if (g.tail(d) == rj1) capture = true;
    if (capture) seq.push_back(g.tail(d));
    Dart nd = twin(d);
    do {
      nd = g.cw_next(nd);
    } while (!alive_dart(nd));
    d = nd;
    require(++guard <= 2 * g.dart_count(), errc::internal_error, "contour walk diverged");
  } while (d != d0);
  seq.push_back(rj);
  return seq;
}

namespace {

std::vector<OppViolation> check_partition(const Suspension& s, const SchnyderWood& w, int j,
                                          const std::vector<std::vector<Vertex>>& paths) {
  const PlaneGraph& g = s.g;
  const Vertex rj = s.roots[j], rj1 = s.roots[(j + 1) % 3], rj2 = s.roots[(j + 2) % 3];
  std::vector<OppViolation> out;

  std::vector<int> path_of(g.n, -1);
  for (int i = 0; i < int(paths.size()); ++i)
    for (Vertex v : paths[i]) {
      if (v < 0 || v >= g.n || path_of[v] != -1) {
        out.push_back({0, i, "paths are not a partition of the vertex set"});
        return out;
      }
      path_of[v] = i;
    }
  for (Vertex v = 0; v < g.n; ++v)
    if (path_of[v] == -1) {
      out.push_back({0, -1, "vertex " + std::to_string(v) + " is not covered"});
      return out;
    }

  // condition 1: the clockwise outer path of the base pair first, the
  // singleton r_{j+2} last
  {
    std::vector<Vertex> bottom{rj};
    const auto& orbit = g.face_darts(g.outer_face);
    Dart d = s.root_out[j];
    while (true) {
      bottom.push_back(g.head(d));
      if (g.head(d) == rj1) break;
      size_t i = 0;
      while (orbit[i] != d) ++i;
      d = orbit[(i + 1) % orbit.size()];
    }
    std::set<Vertex> expect(bottom.begin(), bottom.end());
    std::set<Vertex> got(paths[0].begin(), paths[0].end());
    if (expect != got)
      out.push_back({1, 0, "initial path is not the clockwise outer path of the base pair"});
    if (paths.back() != std::vector<Vertex>{rj2})
      out.push_back({1, int(paths.size()) - 1, "final path is not the singleton r_{j+2}"});
  }

  for (int i = 0; i < int(paths.size()); ++i) {
    const auto& p = paths[i];
    bool ok = true;
    for (size_t a = 0; a < p.size() && ok; ++a)
      for (size_t b = a + 1; b < p.size() && ok; ++b)
        if (g.adjacent(p[a], p[b]) != (b == a + 1)) ok = false;
    if (!ok) out.push_back({5, i, "class is not an induced path in the given order"});
  }

  // conditions 2-4 against contours recomputed from scratch
  std::vector<char> in_vi(g.n, 0);
  for (int i = 0; i < int(paths.size()); ++i) {
    for (Vertex v : paths[i]) in_vi[v] = 1;
    std::vector<Vertex> c;
    try {
      c = contour_of(s, j, in_vi);
    } catch (const Error&) {
      out.push_back({3, i, "contour of V_" + std::to_string(i) + " is not traceable"});
      return out;
    }
    std::set<Vertex> seen(c.begin(), c.end());
    if (seen.size() != c.size())
      out.push_back({3, i, "contour of V_" + std::to_string(i) + " is not a path"});
    if (i + 1 < int(paths.size())) {
      for (Vertex v : paths[i]) {
        bool has_up = false;
        for (Vertex u : g.neighbors(v))
          if (!in_vi[u]) has_up = true;
        if (!has_up) {
          out.push_back({2, i, "vertex " + std::to_string(v) + " has no neighbor above V_" +
                                   std::to_string(i)});
          break;
        }
      }
      std::set<Vertex> next_path(paths[i + 1].begin(), paths[i + 1].end());
      for (Vertex v : c) {
        int cnt = 0;
        for (Vertex u : g.neighbors(v))
          if (next_path.count(u)) ++cnt;
        if (cnt > 1) {
          out.push_back({4, i, "contour vertex " + std::to_string(v) +
                                   " has several neighbors in the next path"});
          break;
        }
      }
    }
  }

  // linear extension of the reachability order
  for (Dart d = 0; d < g.dart_count(); ++d) {
    int c = w.dart_color[d];
    if (c < 0) continue;
    Vertex from = g.tail(d), to = g.head(d);
    if (c == j || c == (j + 1) % 3)
      std::swap(from, to);
    else if (c != (j + 2) % 3)
      continue;
    if (path_of[from] != path_of[to] && path_of[from] > path_of[to]) {
      out.push_back({6, path_of[from], "order is not a linear extension of reachability"});
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<OppViolation> check_opp(const Suspension& s, const SchnyderWood& w,
                                    const OrderedPathPartition& opp) {
  std::vector<std::vector<Vertex>> paths;
  for (const auto& p : opp.paths) paths.push_back(p.vertices);
  return check_partition(s, w, opp.j, paths);
}

std::vector<OppViolation> check_opp_raw(const Suspension& s, const SchnyderWood& w, int j,
                                        const std::vector<std::vector<Vertex>>& paths) {
  return check_partition(s, w, j, paths);
}

PathExtension extension(const Suspension& s, const SchnyderWood& w,
                        const OrderedPathPartition& opp, int i) {
  const PlaneGraph& g = s.g;
  require(i >= 1 && i < opp.size(), errc::bad_parameters, "path index");
  std::vector<char> in_vi(g.n, 0);
  for (int q = 0; q < i; ++q)
    for (Vertex v : opp.paths[q].vertices) in_vi[v] = 1;
  std::vector<Vertex> contour = contour_of(s, opp.j, in_vi);

  std::set<Vertex> in_path(opp.paths[i].vertices.begin(), opp.paths[i].vertices.end());
  PathExtension ext{-1, -1, -1, -1};
  for (Vertex v : contour) {
    bool adj = false;
    for (Vertex u : g.neighbors(v))
      if (in_path.count(u)) adj = true;
    if (!adj) continue;
    if (ext.left == -1) ext.left = v;
    ext.right = v;
  }
  require(ext.left != -1, errc::missing_neighbor, "path has no neighbor on the contour");
  require(ext.left != ext.right, errc::missing_neighbor, "left and right neighbors coincide");

  Vertex v1 = opp.paths[i].vertices.front(), vk = opp.paths[i].vertices.back();
  auto dl = g.find_dart(ext.left, v1);
  auto dr = g.find_dart(vk, ext.right);
  require(dl.has_value() && dr.has_value(), errc::missing_neighbor, "extension edges missing");
  ext.left_edge = edge_of(*dl);
  ext.right_edge = edge_of(*dr);
  require(w.dart_color[twin(*dl)] == (opp.j + 1) % 3, errc::invalid_wood,
          "left attachment edge is not (j+1)-colored outgoing at v_1");
  require(w.dart_color[*dr] == opp.j, errc::invalid_wood,
          "right attachment edge is not j-colored outgoing at v_k");
  return ext;
}

std::vector<std::string> check_path_properties(const Suspension& s, const SchnyderWood& w,
                                               const OrderedPathPartition& opp) {
  const PlaneGraph& g = s.g;
  std::vector<std::string> out;
  std::vector<char> in_vi(g.n, 0);
  for (Vertex v : opp.paths[0].vertices) in_vi[v] = 1;
  std::vector<Vertex> contour = contour_of(s, opp.j, in_vi);  // C_{i-1}

  for (int i = 1; i < opp.size(); ++i) {
    const OppPath& p = opp.paths[i];
    auto fail = [&](const std::string& msg) {
      out.push_back("path " + std::to_string(i) + ": " + msg);
    };

    PathExtension ext;
    try {
      ext = extension(s, w, opp, i);
    } catch (const Error& e) {
      fail(e.what());
      continue;
    }
    if (ext.left != p.left || ext.right != p.right || ext.left_edge != p.left_edge ||
        ext.right_edge != p.right_edge)
      fail("stored extension differs from the recomputed one");

    std::vector<int> contour_pos(g.n, -1);
    for (int t = 0; t < int(contour.size()); ++t) contour_pos[contour[t]] = t;
    int lo = contour_pos[p.left], hi = contour_pos[p.right];
    if (lo == -1 || hi == -1 || lo >= hi) fail("attachments not ordered on the contour");

    for (Vertex x : p.vertices)
      for (Dart d : g.rotation[x]) {
        Vertex u = g.head(d);
        if (!in_vi[u]) continue;
        // (a): below-neighbors lie on C_{i-1} between the attachments
        int up = contour_pos[u];
        if (up < lo || up > hi) fail("below-neighbor outside the attachment interval");
        Edge e = edge_of(d);
        if (e == p.left_edge || e == p.right_edge) continue;
        // (d): every other below-edge is unidirected (j+2) toward the path
        if (!(w.dart_color[twin(d)] == (opp.j + 2) % 3 && w.dart_color[d] < 0))
          fail("below-edge is not unidirected (j+2)-colored toward the path");
        if (u == p.left || u == p.right) fail("interior below-edge ends at an attachment");
      }

    for (Vertex v : p.vertices) in_vi[v] = 1;
    contour = contour_of(s, opp.j, in_vi);
    for (Vertex v : p.vertices)
      if (std::find(contour.begin(), contour.end(), v) == contour.end())
        fail("path vertex missing from its own contour");
  }
  return out;
}

std::vector<std::string> check_interior_red_rule(const Suspension& s, const SchnyderWood& w,
                                         const OrderedPathPartition& opp) {
  const PlaneGraph& g = s.g;
  require(is_minimal(s, w), errc::not_minimal_wood, "the rule holds for minimal woods only");
  std::vector<std::string> out;
  for (int i = 1; i < opp.size(); ++i) {
    const OppPath& p = opp.paths[i];
    const Vertex vk = p.vertices.back();
    for (Vertex x : p.vertices)
      for (Dart d : g.rotation[x]) {
        Vertex u = g.head(d);
        if (opp.path_of[u] >= i) continue;
        Edge e = edge_of(d);
        if (e == p.left_edge || e == p.right_edge) continue;
        auto fail = [&](const std::string& msg) {
          out.push_back("path " + std::to_string(i) + " edge " + std::to_string(x) + "-" +
                        std::to_string(u) + ": " + msg);
        };
        if (x != vk) fail("interior below-edge not at the last path vertex");
        if (!(w.dart_color[twin(d)] == (opp.j + 2) % 3 && w.dart_color[d] < 0))
          fail("interior below-edge not unidirected (j+2)-colored incoming");
        if (u == p.left || u == p.right) fail("interior below-edge hits an attachment vertex");
      }
  }
  return out;
}

}  // namespace cotree4
