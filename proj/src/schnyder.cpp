#include <algorithm>
#include <map>
#include <set>

#include "cotree4/schnyder.hpp"

namespace cotree4 {

namespace {

// Rotation of v as slot list; roots get a virtual slot (dart = -1) for the
// half-edge, placed immediately before the outer-orbit dart leaving the root.
struct Slots {
  std::vector<Dart> darts;  // -1 marks the half-edge slot
};

Slots slots_at(const Suspension& s, Vertex v) {
  Slots out;
  int root_idx = -1;
  for (int i = 0; i < 3; ++i)
    if (s.roots[i] == v) root_idx = i;
  for (Dart d : s.g.rotation[v]) {
    if (root_idx >= 0 && d == s.root_out[root_idx]) out.darts.push_back(-1);
    out.darts.push_back(d);
  }
  return out;
}

int cw_dist(int from, int to, int len) { return ((to - from) % len + len) % len; }

}  // namespace

std::vector<WoodViolation> check_wood(const Suspension& s, const SchnyderWood& w) {
  const PlaneGraph& g = s.g;
  std::vector<WoodViolation> out;
  if (int(w.dart_color.size()) != g.dart_count()) {
    out.push_back({0, -1, -1, {}, "label vector does not cover the edge set"});
    return out;
  }

  // condition 1: every edge oriented, bidirected edges carry distinct colors
  for (Edge e = 0; e < g.edge_count(); ++e) {
    int c0 = w.dart_color[2 * e], c1 = w.dart_color[2 * e + 1];
    for (int c : {c0, c1})
      if (c < -1 || c > 2) {
        out.push_back({1, -1, -1, {e}, "color out of range"});
        return out;
      }
    if (c0 < 0 && c1 < 0)
      out.push_back({1, g.tail(2 * e), -1, {e}, "edge carries no direction"});
    else if (c0 >= 0 && c1 >= 0 && c0 == c1)
      out.push_back({1, g.tail(2 * e), -1, {e}, "bidirected edge with equal colors"});
  }

  // condition 3, with condition 2 entering through the virtual half-edge slots
  for (Vertex v = 0; v < g.n; ++v) {
    Slots sl = slots_at(s, v);
    const int len = int(sl.darts.size());
    int root_idx = -1;
    for (int i = 0; i < 3; ++i)
      if (s.roots[i] == v) root_idx = i;

    int out_pos[3] = {-1, -1, -1};
    bool bad = false;
    for (int p = 0; p < len; ++p) {
      Dart d = sl.darts[p];
      int c = d < 0 ? root_idx : w.dart_color[d];
      if (c < 0) continue;
      if (out_pos[c] != -1) {
        out.push_back({3, v, -1, {d < 0 ? -1 : edge_of(d)},
                       std::string("two outgoing ") + color_name(c) + "-colored edges"});
        bad = true;
      } else {
        out_pos[c] = p;
      }
    }
    for (int c = 0; c < 3; ++c)
      if (out_pos[c] == -1) {
        out.push_back({3, v, -1, {}, std::string("no outgoing ") + color_name(c) + "-colored edge"});
        bad = true;
      }
    if (bad) continue;
    if (cw_dist(out_pos[0], out_pos[1], len) > cw_dist(out_pos[0], out_pos[2], len))
      out.push_back({3, v, -1, {}, "outgoing edges not in clockwise color order"});
    for (int p = 0; p < len; ++p) {
      Dart d = sl.darts[p];
      if (d < 0) continue;
      int cin = w.dart_color[twin(d)];
      if (cin < 0) continue;
      int lo = out_pos[color_next(cin)], hi = out_pos[color_prev(cin)];
      if (cw_dist(lo, p, len) > cw_dist(lo, hi, len))
        out.push_back({3, v, -1, {edge_of(d)},
                       std::string("incoming ") + color_name(cin) + " edge outside its sector"});
    }
  }

  // condition 4: no one-colored directed cycle on an inner face boundary
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (f == g.outer_face) continue;
    for (int c = 0; c < 3; ++c) {
      bool fwd = true, bwd = true;
      for (Dart d : g.face_darts(f)) {
        fwd = fwd && w.dart_color[d] == c;
        bwd = bwd && w.dart_color[twin(d)] == c;
      }
      if (fwd || bwd)
        out.push_back({4, -1, f, {}, std::string(color_name(c)) + "-colored directed face cycle"});
    }
  }
  return out;
}

void require_valid_wood(const Suspension& s, const SchnyderWood& w) {
  auto v = check_wood(s, w);
  if (!v.empty())
    raise(errc::invalid_wood, v.front().message +
                                  (v.front().vertex >= 0
                                       ? " at vertex " + std::to_string(v.front().vertex)
                                       : std::string()));
}

Dart outgoing_dart(const Suspension& s, const SchnyderWood& w, Vertex v, int c) {
  for (Dart d : s.g.rotation[v])
    if (w.dart_color[d] == c) return d;
  for (int i = 0; i < 3; ++i)
    if (s.roots[i] == v && i == c) return -1;  // the half-edge
  raise(errc::invalid_wood,
        "vertex " + std::to_string(v) + " has no outgoing " + color_name(c) + " edge");
}

std::vector<Dart> trees(const Suspension& s, const SchnyderWood& w, int color) {
  const PlaneGraph& g = s.g;
  require(color >= 0 && color < 3, errc::bad_parameters, "color");
  std::vector<Dart> arcs;
  std::vector<Dart> parent(g.n, -2);
  for (Dart d = 0; d < g.dart_count(); ++d)
    if (w.dart_color[d] == color) {
      arcs.push_back(d);
      Vertex v = g.tail(d);
      require(parent[v] == -2, errc::invalid_wood, "two outgoing arcs of one color");
      parent[v] = d;
    }
  require(int(arcs.size()) == g.n - 1, errc::invalid_wood, "T_i must have n-1 arcs");
  require(parent[s.roots[color]] == -2, errc::invalid_wood, "root has an outgoing tree arc");
  for (Vertex v = 0; v < g.n; ++v) {
    Vertex x = v;
    int steps = 0;
    while (x != s.roots[color]) {
      require(parent[x] != -2 && steps++ <= g.n, errc::invalid_wood,
              "T_" + std::to_string(color + 1) + " is not a tree oriented to its root");
      x = g.head(parent[x]);
    }
  }
  return arcs;
}

bool tree_union_acyclic(const Suspension& s, const SchnyderWood& w, int color) {
  const PlaneGraph& g = s.g;
  // arcs: T_color forward, the other two trees reversed. A bidirected edge
  // whose colors are the two reversed trees contributes both directions of
  // one edge; walking it back and forth is not a cycle, so the test looks for
  // a directed cycle through distinct edges: either two antiparallel arcs
  // from distinct edges, or an arc u->v whose head reaches u again without
  // the direct back-arc.
  std::map<std::pair<Vertex, Vertex>, std::set<Edge>> arcs;
  for (Dart d = 0; d < g.dart_count(); ++d) {
    int c = w.dart_color[d];
    if (c < 0) continue;
    Vertex from = g.tail(d), to = g.head(d);
    if (c != color) std::swap(from, to);
    arcs[{from, to}].insert(edge_of(d));
  }
  for (const auto& [uv, edges] : arcs) {
    auto back = arcs.find({uv.second, uv.first});
    if (back == arcs.end()) continue;
    if (edges.size() > 1 || back->second.size() > 1 || *edges.begin() != *back->second.begin())
      return false;  // genuine two-cycle through parallel edges
  }
  std::vector<std::vector<Vertex>> adj(g.n);
  for (const auto& [uv, edges] : arcs) adj[uv.first].push_back(uv.second);
  for (const auto& [uv, edges] : arcs) {
    // does uv.second reach uv.first without the direct back-arc?
    std::vector<char> vis(g.n, 0);
    std::vector<Vertex> stack{uv.second};
    vis[uv.second] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x]) {
        if (x == uv.second && y == uv.first) continue;
        if (y == uv.first) return false;
        if (!vis[y]) {
          vis[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Seed wood construction: canonical-ordering style peeling. A step removes an
// induced path from the current upper boundary; replaying the steps bottom-up
// determines all edge labels.

namespace {

struct PeelStep {
  std::vector<Vertex> path;      // left (blue-root side) to right
  Vertex left = -1, right = -1;  // flanking contour vertices
  std::vector<Vertex> covered;   // vertices reappearing on the contour
};

// Steps arrive in peel order (top-down) and are replayed bottom-up.
SchnyderWood assign_labels(const Suspension& s, std::vector<PeelStep> steps) {
  const PlaneGraph& g = s.g;
  SchnyderWood w;
  w.dart_color.assign(g.dart_count(), -1);
  std::reverse(steps.begin(), steps.end());

  auto set_color = [&](Dart d, int c) {
    require(w.dart_color[d] == -1, errc::internal_error, "conflicting label assignment");
    w.dart_color[d] = c;
  };
  auto dart = [&](Vertex u, Vertex v) {
    auto d = g.find_dart(u, v);
    require(d.has_value(), errc::internal_error, "peel step references a non-edge");
    return *d;
  };
  auto orbit_next = [&](Dart d) {
    const auto& orbit = g.face_darts(g.outer_face);
    for (size_t i = 0; i < orbit.size(); ++i)
      if (orbit[i] == d) return orbit[(i + 1) % orbit.size()];
    raise(errc::internal_error, "dart not on outer orbit");
  };

  // bottom path: green toward the green root, blue toward the blue root
  for (Dart d = s.root_out[1];; d = orbit_next(d)) {
    set_color(twin(d), 1);
    set_color(d, 2);
    if (g.head(d) == s.roots[2]) break;
  }

  for (const PeelStep& st : steps) {
    const auto& p = st.path;
    for (size_t t = 0; t + 1 < p.size(); ++t) {
      set_color(dart(p[t], p[t + 1]), 1);  // green rightward
      set_color(dart(p[t + 1], p[t]), 2);  // blue leftward
    }
    set_color(dart(p.front(), st.left), 2);
    set_color(dart(p.back(), st.right), 1);
    std::set<Vertex> in_path(p.begin(), p.end());
    for (Vertex x : st.covered) {
      Dart red = -1;
      for (Dart d : g.rotation[x])
        if (in_path.count(g.head(d))) {
          require(red == -1, errc::internal_error, "covered vertex with two path neighbors");
          red = d;
        }
      if (red == -1) {
        // no edge into the covering path: the red out-edge goes to an earlier
        // path; candidates are the edges labeled green or blue toward x, in
        // clockwise order from the blue out-edge greens come first
        Dart blue_out = -1;
        for (Dart d : g.rotation[x])
          if (w.dart_color[d] == 2) blue_out = d;
        require(blue_out >= 0, errc::internal_error, "covered vertex has no blue out-edge");
        const auto& rot = g.rotation[x];
        const int len = int(rot.size());
        int best_green = -1, best_green_dist = -1;
        int best_blue = -1, best_blue_dist = len + 1;
        for (Dart d : rot) {
          if (w.dart_color[d] >= 0) continue;
          int cin = w.dart_color[twin(d)];
          if (cin != 1 && cin != 2) continue;
          int dist = cw_dist(g.rot_pos[blue_out], g.rot_pos[d], len);
          if (cin == 1 && dist > best_green_dist) {
            best_green = d;
            best_green_dist = dist;
          }
          if (cin == 2 && dist < best_blue_dist) {
            best_blue = d;
            best_blue_dist = dist;
          }
        }
        red = best_green >= 0 ? best_green : best_blue;
        require(red >= 0, errc::internal_error, "covered vertex has no red candidate");
      }
      set_color(red, 0);
    }
  }

  // red edges along the final contour, pointing toward the red root
  {
    int start_idx = -1;
    const auto& orbit = g.face_darts(g.outer_face);
    for (size_t i = 0; i < orbit.size(); ++i)
      if (g.tail(orbit[i]) == s.roots[2]) start_idx = int(i);
    require(start_idx >= 0, errc::internal_error, "blue root not on outer orbit");
    bool before_red_root = true;
    for (size_t t = 0;; ++t) {
      Dart d = orbit[(start_idx + t) % orbit.size()];
      if (g.tail(d) == s.roots[0]) before_red_root = false;
      if (before_red_root)
        set_color(d, 0);  // up the left arc
      else
        set_color(twin(d), 0);  // up the right arc
      if (g.head(d) == s.roots[1]) break;
    }
  }
  return w;
}

// --- fast path: plane triangulations ---------------------------------------

bool is_triangulation(const PlaneGraph& g) {
  if (g.n < 4) return false;
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (g.face_darts(f).size() != 3) return false;
  return true;
}

std::vector<PeelStep> peel_triangulation(const Suspension& s) {
  const PlaneGraph& g = s.g;
  const int n = g.n;
  std::vector<char> alive(n, 1), on_cycle(n, 0);
  std::vector<int> outer_nbrs(n, 0);
  std::vector<Vertex> nxt(n, -1), prv(n, -1);
  std::vector<int64_t> pos(n, 0);

  require(g.face_darts(g.outer_face).size() == 3, errc::internal_error,
          "triangulation outer face is not a triangle");
  for (Dart d : g.face_darts(g.outer_face)) {
    nxt[g.tail(d)] = g.head(d);
    prv[g.head(d)] = g.tail(d);
    on_cycle[g.tail(d)] = 1;
  }
  const int64_t kSpan = int64_t(1) << 60;
  pos[s.roots[2]] = 0;
  pos[s.roots[0]] = kSpan;
  pos[s.roots[1]] = 2 * kSpan;
  for (Vertex v = 0; v < n; ++v)
    if (on_cycle[v])
      for (Vertex u : g.neighbors(v))
        if (on_cycle[u]) ++outer_nbrs[v];

  auto eligible = [&](Vertex v) {
    return alive[v] && on_cycle[v] && v != s.roots[1] && v != s.roots[2] && outer_nbrs[v] == 2;
  };
  std::set<std::pair<int64_t, Vertex>> ready;
  std::vector<Vertex> has_key(n, 0);
  auto refresh = [&](Vertex v) {
    if (has_key[v]) {
      ready.erase({pos[v], v});
      has_key[v] = 0;
    }
    if (eligible(v)) {
      ready.insert({pos[v], v});
      has_key[v] = 1;
    }
  };
  for (Vertex v = 0; v < n; ++v) refresh(v);

  std::vector<PeelStep> steps;
  int remaining = n;
  while (remaining > 2) {
    require(!ready.empty(), errc::internal_error, "triangulation peeling stalled");
    Vertex v = std::prev(ready.end())->second;  // rightmost eligible
    Vertex l = prv[v], r = nxt[v];

    // interior neighbors between l and r, counterclockwise from the dart
    // toward l (the sector below v)
    std::vector<Vertex> mids;
    {
      Dart d = g.cw_prev(*g.find_dart(v, l));
      while (g.head(d) != r) {
        mids.push_back(g.head(d));
        d = g.cw_prev(d);
      }
    }
    steps.push_back({{v}, l, r, mids});

    if (has_key[v]) {
      ready.erase({pos[v], v});
      has_key[v] = 0;
    }
    for (Vertex u : g.neighbors(v))
      if (alive[u] && on_cycle[u]) --outer_nbrs[u];
    alive[v] = 0;
    on_cycle[v] = 0;
    --remaining;

    // splice mids into the cycle between l and r
    Vertex prev = l;
    for (Vertex m : mids) {
      nxt[prev] = m;
      prv[m] = prev;
      prev = m;
    }
    nxt[prev] = r;
    prv[r] = prev;

    std::set<Vertex> affected{l, r};
    if (!mids.empty()) {
      int64_t lo = pos[l], hi = pos[r];
      if (hi - lo <= int64_t(mids.size())) {
        int64_t step = kSpan / (remaining + 1);
        int64_t at = 0;
        Vertex x = s.roots[2];
        do {
          pos[x] = at;
          at += step;
          x = nxt[x];
        } while (x != s.roots[2]);
        std::set<std::pair<int64_t, Vertex>> rebuilt;
        for (Vertex u = 0; u < n; ++u)
          if (has_key[u]) rebuilt.insert({pos[u], u});
        ready.swap(rebuilt);
        lo = pos[l];
        hi = pos[r];
      }
      int64_t gap = (hi - lo) / (int64_t(mids.size()) + 1);
      int64_t at = lo;
      for (Vertex m : mids) {
        pos[m] = (at += gap);
        on_cycle[m] = 1;
        affected.insert(m);
      }
      for (Vertex m : mids)
        for (Vertex u : g.neighbors(m))
          if (alive[u] && on_cycle[u]) affected.insert(u);
      for (Vertex u : affected) {
        outer_nbrs[u] = 0;
        for (Vertex x : g.neighbors(u))
          if (alive[x] && on_cycle[x]) ++outer_nbrs[u];
      }
    }
    for (Vertex u : affected) refresh(u);
  }
  return steps;  // peel order
}

// --- general path: searching peeling, desk scale ---------------------------

struct GeneralPeeler {
  const Suspension& s;
  const PlaneGraph& g;
  std::vector<Vertex> bottom;
  std::vector<char> is_bottom;

  explicit GeneralPeeler(const Suspension& susp) : s(susp), g(susp.g) {
    is_bottom.assign(g.n, 0);
    bottom.push_back(s.roots[1]);
    is_bottom[s.roots[1]] = 1;
    const auto& orbit = g.face_darts(g.outer_face);
    Dart d = s.root_out[1];
    while (true) {
      bottom.push_back(g.head(d));
      is_bottom[g.head(d)] = 1;
      if (g.head(d) == s.roots[2]) break;
      size_t i = 0;
      while (orbit[i] != d) ++i;
      d = orbit[(i + 1) % orbit.size()];
    }
  }

  std::vector<Dart> outer_walk(const std::vector<char>& alive) const {
    auto alive_dart = [&](Dart d) { return alive[g.tail(d)] && alive[g.head(d)]; };
    Dart d0 = s.root_out[1];
    std::vector<Dart> walk;
    Dart d = d0;
    do {
      walk.push_back(d);
      Dart nd = twin(d);
      do {
        nd = g.cw_next(nd);
      } while (!alive_dart(nd));
      d = nd;
      require(walk.size() <= size_t(g.dart_count()), errc::internal_error, "outer walk diverged");
    } while (d != d0);
    return walk;
  }

  std::optional<std::vector<Vertex>> contour(const std::vector<char>& alive) const {
    auto walk = outer_walk(alive);
    std::vector<Vertex> seq;
    bool in_contour = false;
    for (Dart d : walk) {
      if (g.tail(d) == s.roots[2]) in_contour = true;
      if (in_contour) seq.push_back(g.tail(d));
    }
    seq.push_back(s.roots[1]);
    if (seq.front() != s.roots[2] || seq.back() != s.roots[1]) return std::nullopt;
    std::set<Vertex> seen(seq.begin(), seq.end());
    if (seen.size() != seq.size()) return std::nullopt;
    return seq;
  }

  bool valid_removal(std::vector<char>& alive, const std::vector<Vertex>& contour_now, int i,
                     int j, PeelStep& step, bool first) const {
    std::vector<Vertex> path(contour_now.begin() + i, contour_now.begin() + j + 1);
    std::set<Vertex> in_path(path.begin(), path.end());
    if (first) {
      if (path.size() != 1 || path[0] != s.roots[0]) return false;
    } else {
      if (in_path.count(s.roots[0])) return false;
      for (Vertex v : path) {
        bool has_up = false;
        for (Vertex u : g.neighbors(v))
          if (!alive[u]) has_up = true;
        if (!has_up) return false;
      }
    }
    for (size_t a = 0; a < path.size(); ++a)
      for (size_t b = a + 1; b < path.size(); ++b)
        if (g.adjacent(path[a], path[b]) != (b == a + 1)) return false;

    for (Vertex v : path) alive[v] = 0;
    bool ok = true;
    {
      int count = 0, total = 0;
      Vertex start = -1;
      for (Vertex v = 0; v < g.n; ++v)
        if (alive[v]) {
          ++total;
          start = v;
        }
      std::vector<Vertex> stack{start};
      std::vector<char> vis(g.n, 0);
      vis[start] = 1;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++count;
        for (Vertex u : g.neighbors(v))
          if (alive[u] && !vis[u]) {
            vis[u] = 1;
            stack.push_back(u);
          }
      }
      ok = count == total;
    }
    std::optional<std::vector<Vertex>> after;
    if (ok) {
      after = contour(alive);
      ok = after.has_value();
    }
    if (ok) {
      for (Vertex v : *after) {
        int cnt = 0;
        for (Vertex u : g.neighbors(v))
          if (in_path.count(u)) ++cnt;
        if (cnt > 1) ok = false;
      }
    }
    if (ok) {
      step.path = path;
      step.left = contour_now[i - 1];
      step.right = contour_now[j + 1];
      step.covered.clear();
      std::set<Vertex> old_contour(contour_now.begin(), contour_now.end());
      bool inside = false;
      for (Vertex v : *after) {
        if (v == step.right) inside = false;
        if (inside) {
          if (old_contour.count(v)) ok = false;  // span may expose fresh vertices only
          step.covered.push_back(v);
        }
        if (v == step.left) inside = true;
      }
    }
    for (Vertex v : path) alive[v] = 1;
    return ok;
  }

  bool search(std::vector<char>& alive, int alive_count, std::vector<PeelStep>& steps,
              std::set<std::vector<char>>& dead, bool first) const {
    if (alive_count == int(bottom.size())) {
      for (Vertex v = 0; v < g.n; ++v)
        if (alive[v] != is_bottom[v]) return false;
      return true;
    }
    if (dead.count(alive)) return false;
    auto c = contour(alive);
    if (!c) return false;
    const auto& seq = *c;
    for (int i = 1; i + 1 < int(seq.size()); ++i) {
      if (is_bottom[seq[i]]) continue;
      for (int j = i; j + 1 < int(seq.size()); ++j) {
        if (is_bottom[seq[j]]) break;
        PeelStep step;
        if (!valid_removal(alive, seq, i, j, step, first)) continue;
        for (Vertex v : step.path) alive[v] = 0;
        steps.push_back(step);
        if (search(alive, alive_count - int(step.path.size()), steps, dead, false)) return true;
        steps.pop_back();
        for (Vertex v : step.path) alive[v] = 1;
      }
    }
    dead.insert(alive);
    return false;
  }
};

std::vector<PeelStep> peel_general(const Suspension& s) {
  GeneralPeeler peeler(s);
  std::vector<char> alive(s.g.n, 1);
  std::vector<PeelStep> steps;
  std::set<std::vector<char>> dead;
  require(peeler.search(alive, s.g.n, steps, dead, true), errc::internal_error,
          "no canonical path ordering exists; input not sigma-internally 3-connected?");
  return steps;  // peel order
}

}  // namespace

SchnyderWood compute_wood(const Suspension& s) {
  std::vector<PeelStep> steps =
      is_triangulation(s.g) ? peel_triangulation(s) : peel_general(s);
  SchnyderWood w = assign_labels(s, std::move(steps));
  require_valid_wood(s, w);
  return w;
}

}  // namespace cotree4
