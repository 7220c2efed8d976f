#include <algorithm>
#include <deque>

#include "cotree4/schnyder.hpp"

namespace cotree4 {

namespace {

Dart dual_dart_with_tail(const PlaneGraph& dg, Edge k, Vertex tail_dv) {
  if (dg.tail(2 * k) == tail_dv) return 2 * k;
  require(dg.tail(2 * k + 1) == tail_dv, errc::internal_error, "dual dart tail mismatch");
  return 2 * k + 1;
}

}  // namespace

DualWood dual_wood(const Suspension& s, const SchnyderWood& w) {
  require_valid_wood(s, w);
  const PlaneGraph& g = s.g;
  const int m = g.edge_count();

  DualWood out{suspended_dual(s), {}};
  const PlaneGraph& dg = out.sd.susp.g;
  out.wood.dart_color.assign(dg.dart_count(), -1);

  for (Edge k = 0; k < m; ++k) {
    int c0 = w.dart_color[2 * k], c1 = w.dart_color[2 * k + 1];
    if (c0 >= 0 && c1 >= 0) {
      // bidirected i-(i+1)-colored edge: its dual is unidirected (i-1)-colored
      // and points to the right of the i-colored direction
      Dart idir = c1 == color_next(c0) ? 2 * k : 2 * k + 1;
      int i = w.dart_color[idir];
      require(w.dart_color[twin(idir)] == color_next(i), errc::invalid_wood,
              "bidirected edge colors are not consecutive");
      Vertex from = out.sd.left_dual_vertex(g, idir);
      out.wood.dart_color[dual_dart_with_tail(dg, k, from)] = color_prev(i);
    } else {
      // unidirected (i-1)-colored edge: dual bidirected i-(i+1) such that the
      // primal edge points right of the i-colored direction
      Dart d = c0 >= 0 ? 2 * k : 2 * k + 1;
      int c = w.dart_color[d];
      Vertex right = out.sd.right_dual_vertex(g, d);
      Vertex left = out.sd.left_dual_vertex(g, d);
      out.wood.dart_color[dual_dart_with_tail(dg, k, right)] = color_next(c);
      out.wood.dart_color[dual_dart_with_tail(dg, k, left)] = color_prev(c);
    }
  }
  // duals of the root half-edges: the b-triangle. The half-edge at root i is
  // i-colored with b[(i+1)%3] on its left and b[(i+2)%3] on its right.
  for (int i = 0; i < 3; ++i) {
    Edge e = m + (i + 1) % 3;
    out.wood.dart_color[dual_dart_with_tail(dg, e, out.sd.b[(i + 2) % 3])] = color_next(i);
    out.wood.dart_color[dual_dart_with_tail(dg, e, out.sd.b[(i + 1) % 3])] = color_prev(i);
  }
  require_valid_wood(out.sd.susp, out.wood);
  return out;
}

Completion build_completion(const Suspension& s, const SchnyderWood& w) {
  Completion c;
  c.primal = &s;
  DualWood dw = dual_wood(s, w);  // validates both woods
  c.sd = std::move(dw.sd);

  const PlaneGraph& g = s.g;
  const PlaneGraph& dg = c.sd.susp.g;
  const int m = g.edge_count();
  c.n_primal = g.n;
  c.n_dual = dg.n;
  c.z_base = g.n + dg.n;
  c.stub_base = c.z_base + m + 3;
  const int N = c.stub_base + 6;

  auto zvert = [&](Edge k) { return c.z_base + k; };           // crossing of primal edge k
  auto zhalf = [&](int i) { return c.z_base + m + i; };        // crossing of half-edge at root i
  auto dvert = [&](Vertex dv) { return c.n_primal + dv; };
  auto dual_edge_crossing = [&](Edge k) { return k < m ? zvert(k) : zhalf(((k - m) + 2) % 3); };

  std::vector<std::vector<Vertex>> nb(N);
  for (Vertex v = 0; v < g.n; ++v) {
    int root_idx = -1;
    for (int i = 0; i < 3; ++i)
      if (s.roots[i] == v) root_idx = i;
    for (Dart d : g.rotation[v]) {
      if (root_idx >= 0 && d == s.root_out[root_idx]) nb[v].push_back(zhalf(root_idx));
      nb[v].push_back(zvert(edge_of(d)));
    }
  }
  for (Vertex dv = 0; dv < dg.n; ++dv) {
    int b_idx = -1;
    for (int i = 0; i < 3; ++i)
      if (c.sd.b[i] == dv) b_idx = i;
    for (Dart d : dg.rotation[dv]) {
      if (b_idx >= 0 && d == c.sd.susp.root_out[b_idx]) nb[dvert(dv)].push_back(c.stub_base + 3 + b_idx);
      nb[dvert(dv)].push_back(dual_edge_crossing(edge_of(d)));
    }
  }
  for (Edge k = 0; k < m; ++k) {
    Dart d = 2 * k;  // primal dart u -> w
    Vertex u = g.tail(d), wv = g.head(d);
    Vertex fr = dvert(c.sd.right_dual_vertex(g, d));
    Vertex fl = dvert(c.sd.left_dual_vertex(g, d));
    nb[zvert(k)] = {wv, fr, u, fl};
  }
  for (int i = 0; i < 3; ++i)
    nb[zhalf(i)] = {c.stub_base + i, dvert(c.sd.b[(i + 2) % 3]), s.roots[i],
                    dvert(c.sd.b[(i + 1) % 3])};
  for (int i = 0; i < 3; ++i) {
    nb[c.stub_base + i] = {zhalf(i)};
    nb[c.stub_base + 3 + i] = {dvert(c.sd.b[i])};
  }

  c.g = assemble_plane_graph(N, nb);
  // the outer face carries the six half-edge stubs
  c.g.outer_face = c.g.left_face(*c.g.find_dart(c.stub_base, zhalf(0)));
  for (int i = 0; i < 6; ++i)
    require(c.g.tail(c.g.rotation[c.stub_base + i][0]) == c.stub_base + i &&
                c.g.face_of_dart[c.g.rotation[c.stub_base + i][0]] == c.g.outer_face,
            errc::internal_error, "stub not on the completion outer face");

  // segment maps
  c.primal_seg.assign(g.dart_count(), -1);
  c.dual_seg.assign(dg.dart_count(), -1);
  for (Edge k = 0; k < m; ++k) {
    Vertex z = zvert(k);
    c.primal_seg[2 * k] = edge_of(*c.g.find_dart(g.tail(2 * k), z));
    c.primal_seg[2 * k + 1] = edge_of(*c.g.find_dart(g.tail(2 * k + 1), z));
    c.dual_seg[2 * k] = edge_of(*c.g.find_dart(dvert(dg.tail(2 * k)), z));
    c.dual_seg[2 * k + 1] = edge_of(*c.g.find_dart(dvert(dg.tail(2 * k + 1)), z));
  }
  for (int j = 0; j < 3; ++j) {
    Edge k = m + j;
    Vertex z = dual_edge_crossing(k);
    c.dual_seg[2 * k] = edge_of(*c.g.find_dart(dvert(dg.tail(2 * k)), z));
    c.dual_seg[2 * k + 1] = edge_of(*c.g.find_dart(dvert(dg.tail(2 * k + 1)), z));
  }
  for (int i = 0; i < 3; ++i) {
    c.half_seg[i] = edge_of(*c.g.find_dart(s.roots[i], zhalf(i)));
    c.half_stub[i] = edge_of(*c.g.find_dart(c.stub_base + i, zhalf(i)));
    c.b_stub[i] = edge_of(*c.g.find_dart(c.stub_base + 3 + i, dvert(c.sd.b[i])));
  }

  // arcs from the two woods
  c.arc.assign(c.g.edge_count(), -1);
  c.color.assign(c.g.edge_count(), -1);
  auto set_arc = [&](Edge e, Vertex from, int col) {
    Dart d = 2 * e;
    if (c.g.tail(d) != from) d = twin(d);
    require(c.g.tail(d) == from, errc::internal_error, "arc endpoint mismatch");
    require(c.arc[e] == -1, errc::internal_error, "arc set twice");
    c.arc[e] = d;
    c.color[e] = col;
  };
  auto lay_edge = [&](Vertex end0, Vertex end1, Vertex z, Edge seg0, Edge seg1, int col_from_0,
                      int col_from_1) {
    // col_from_x: color of the direction leaving endpoint x, or -1
    if (col_from_0 >= 0 && col_from_1 >= 0) {
      set_arc(seg0, end0, col_from_0);
      set_arc(seg1, end1, col_from_1);
    } else if (col_from_0 >= 0) {
      set_arc(seg0, end0, col_from_0);
      set_arc(seg1, z, col_from_0);
    } else {
      set_arc(seg1, end1, col_from_1);
      set_arc(seg0, z, col_from_1);
    }
  };
  for (Edge k = 0; k < m; ++k)
    lay_edge(g.tail(2 * k), g.tail(2 * k + 1), zvert(k), c.primal_seg[2 * k],
             c.primal_seg[2 * k + 1], w.dart_color[2 * k], w.dart_color[2 * k + 1]);
  for (Edge k = 0; k < m + 3; ++k)
    lay_edge(dvert(dg.tail(2 * k)), dvert(dg.tail(2 * k + 1)), dual_edge_crossing(k),
             c.dual_seg[2 * k], c.dual_seg[2 * k + 1], dw.wood.dart_color[2 * k],
             dw.wood.dart_color[2 * k + 1]);
  for (int i = 0; i < 3; ++i) {
    set_arc(c.half_seg[i], s.roots[i], i);
    set_arc(c.half_stub[i], zhalf(i), i);
    set_arc(c.b_stub[i], dvert(c.sd.b[i]), i);
  }
  for (Edge e = 0; e < c.g.edge_count(); ++e)
    require(c.arc[e] >= 0, errc::internal_error, "completion edge left unoriented");
  return c;
}

SchnyderWood project_primal_wood(const Completion& c) {
  const PlaneGraph& g = c.primal->g;
  SchnyderWood w;
  w.dart_color.assign(g.dart_count(), -1);
  for (Edge k = 0; k < g.edge_count(); ++k) {
    Vertex z = c.crossing_of_edge(k);
    Edge e0 = c.primal_seg[2 * k], e1 = c.primal_seg[2 * k + 1];
    bool out0 = c.g.tail(c.arc[e0]) != z;  // direction leaves the tail of dart 2k
    bool out1 = c.g.tail(c.arc[e1]) != z;
    if (out0 && out1) {
      w.dart_color[2 * k] = c.color[e0];
      w.dart_color[2 * k + 1] = c.color[e1];
    } else if (out0) {
      require(c.color[e0] == c.color[e1], errc::internal_error, "split unidirected edge colors");
      w.dart_color[2 * k] = c.color[e0];
    } else {
      require(out1 && c.color[e0] == c.color[e1], errc::internal_error,
              "crossing with no outgoing primal segment");
      w.dart_color[2 * k + 1] = c.color[e1];
    }
  }
  return w;
}

std::vector<std::string> check_crossing_vertices(const Completion& c) {
  std::vector<std::string> out;
  for (Vertex z = c.z_base; z < c.stub_base; ++z) {
    const auto& rot = c.g.rotation[z];
    std::vector<int> out_pos;
    for (int p = 0; p < int(rot.size()); ++p)
      if (c.g.tail(c.arc[edge_of(rot[p])]) == z) out_pos.push_back(p);
    if (rot.size() != 4 || out_pos.size() != 1) {
      out.push_back("crossing " + std::to_string(z) + " lacks the 1-out/3-in pattern");
      continue;
    }
    // incoming colors must read red, green, blue counterclockwise
    std::vector<int> ccw_in;
    for (int t = 1; t < 4; ++t) {
      int p = (out_pos[0] - t % 4 + 4) % 4;
      ccw_in.push_back(c.color[edge_of(rot[p])]);
    }
    bool ok = false;
    for (int r = 0; r < 3; ++r)
      if (ccw_in[r % 3] == 0 && ccw_in[(r + 1) % 3] == 1 && ccw_in[(r + 2) % 3] == 2) ok = true;
    if (!ok) out.push_back("crossing " + std::to_string(z) + " incoming colors not rgb ccw");
  }
  return out;
}

namespace {

// Faces that cannot reach the outer face by left-to-right arc crossings; a
// nonempty result certifies a clockwise cycle around any of its components.
std::vector<char> non_reaching_faces(const Completion& c) {
  const PlaneGraph& g = c.g;
  std::vector<std::vector<FaceId>> rev(g.face_count());
  for (Edge e = 0; e < g.edge_count(); ++e) {
    Dart a = c.arc[e];
    rev[g.left_face(twin(a))].push_back(g.left_face(a));
  }
  std::vector<char> reach(g.face_count(), 0);
  std::deque<FaceId> q{g.outer_face};
  reach[g.outer_face] = 1;
  while (!q.empty()) {
    FaceId f = q.front();
    q.pop_front();
    for (FaceId p : rev[f])
      if (!reach[p]) {
        reach[p] = 1;
        q.push_back(p);
      }
  }
  for (auto& r : reach) r = !r;
  return reach;  // now marks the non-reaching set
}

}  // namespace

std::optional<std::vector<Dart>> find_clockwise_cycle(const Completion& c) {
  const PlaneGraph& g = c.g;
  std::vector<char> in_s = non_reaching_faces(c);
  FaceId seed = -1;
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (in_s[f]) seed = f;
  if (seed < 0) return std::nullopt;

  // K: one component of S; X: the component of the complement containing the
  // outer face. Interface arcs have K on the right and X on the left.
  std::vector<char> in_k(g.face_count(), 0);
  {
    std::deque<FaceId> q{seed};
    in_k[seed] = 1;
    while (!q.empty()) {
      FaceId f = q.front();
      q.pop_front();
      for (Dart d : g.face_darts(f)) {
        FaceId o = g.left_face(twin(d));
        if (in_s[o] && !in_k[o]) {
          in_k[o] = 1;
          q.push_back(o);
        }
      }
    }
  }
  std::vector<char> in_x(g.face_count(), 0);
  {
    std::deque<FaceId> q{g.outer_face};
    in_x[g.outer_face] = 1;
    while (!q.empty()) {
      FaceId f = q.front();
      q.pop_front();
      for (Dart d : g.face_darts(f)) {
        FaceId o = g.left_face(twin(d));
        if (!in_k[o] && !in_x[o]) {
          in_x[o] = 1;
          q.push_back(o);
        }
      }
    }
  }
  std::vector<std::vector<Dart>> boundary_out(g.n);
  Dart start = -1;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    Dart a = c.arc[e];
    if (in_k[g.left_face(twin(a))] && in_x[g.left_face(a)]) {
      boundary_out[g.tail(a)].push_back(a);
      start = a;
    }
  }
  require(start >= 0, errc::internal_error, "clockwise region without boundary arcs");
  std::vector<Dart> walk;
  std::vector<int> seen_at(g.n, -1);
  Dart d = start;
  while (seen_at[g.tail(d)] < 0) {
    seen_at[g.tail(d)] = int(walk.size());
    walk.push_back(d);
    require(!boundary_out[g.head(d)].empty(), errc::internal_error, "boundary walk dead end");
    d = boundary_out[g.head(d)].front();
  }
  std::vector<Dart> cycle(walk.begin() + seen_at[g.tail(d)], walk.end());
  require(cycle_is_clockwise(c, cycle), errc::internal_error,
          "extracted boundary cycle is not clockwise");
  return cycle;
}

bool cycle_is_clockwise(const Completion& c, const std::vector<Dart>& cycle) {
  const PlaneGraph& g = c.g;
  require(!cycle.empty(), errc::bad_parameters, "empty cycle");
  std::vector<char> on_cycle_edge(g.edge_count(), 0);
  for (size_t i = 0; i < cycle.size(); ++i) {
    require(g.head(cycle[i]) == g.tail(cycle[(i + 1) % cycle.size()]), errc::bad_parameters,
            "darts do not chain into a cycle");
    on_cycle_edge[edge_of(cycle[i])] = 1;
  }
  // grow the left region; the cycle is clockwise iff the outer face is in it
  std::vector<char> left(g.face_count(), 0);
  std::deque<FaceId> q;
  for (Dart d : cycle)
    if (!left[g.left_face(d)]) {
      left[g.left_face(d)] = 1;
      q.push_back(g.left_face(d));
    }
  while (!q.empty()) {
    FaceId f = q.front();
    q.pop_front();
    if (f == g.outer_face) return true;
    for (Dart d : g.face_darts(f)) {
      if (on_cycle_edge[edge_of(d)]) continue;
      FaceId o = g.left_face(twin(d));
      if (!left[o]) {
        left[o] = 1;
        q.push_back(o);
      }
    }
  }
  return false;
}

namespace {

struct FlipQueue {
  std::deque<FaceId> q;
  std::vector<char> queued;
  explicit FlipQueue(int faces) : queued(faces, 0) {}
  void push(FaceId f) {
    if (!queued[f]) {
      queued[f] = 1;
      q.push_back(f);
    }
  }
  FaceId pop() {
    FaceId f = q.front();
    q.pop_front();
    queued[f] = 0;
    return f;
  }
};

// Reverses a clockwise directed cycle: arcs on the cycle flip and shift color
// by +1, arcs strictly inside shift by -1.
void flip_cycle(Completion& c, const std::vector<Dart>& cycle, FlipQueue& queue) {
  const PlaneGraph& g = c.g;
  std::vector<char> on_cycle(g.edge_count(), 0);
  for (Dart d : cycle) {
    Edge e = edge_of(d);
    require(c.arc[e] == d, errc::internal_error, "flip cycle does not follow the arcs");
    on_cycle[e] = 1;
  }
  // interior faces: right side of the traversal
  std::vector<char> inside(g.face_count(), 0);
  std::deque<FaceId> grow;
  for (Dart d : cycle) {
    FaceId f = g.left_face(twin(d));
    if (!inside[f]) {
      inside[f] = 1;
      grow.push_back(f);
    }
  }
  while (!grow.empty()) {
    FaceId f = grow.front();
    grow.pop_front();
    require(f != g.outer_face, errc::internal_error, "flip interior contains the outer face");
    for (Dart d : g.face_darts(f)) {
      if (on_cycle[edge_of(d)]) continue;
      FaceId o = g.left_face(twin(d));
      if (!inside[o]) {
        inside[o] = 1;
        grow.push_back(o);
      }
    }
  }
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (inside[f])
      for (Dart d : g.face_darts(f)) {
        Edge e = edge_of(d);
        if (on_cycle[e] || !inside[g.left_face(twin(d))]) continue;
        if (c.arc[e] == d) c.color[e] = color_prev(c.color[e]);  // shift once per edge
      }
  for (Dart d : cycle) {
    Edge e = edge_of(d);
    c.arc[e] = twin(d);
    c.color[e] = color_next(c.color[e]);
  }
  for (Dart d : cycle) {
    queue.push(g.left_face(d));
    queue.push(g.left_face(twin(d)));
  }
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (inside[f]) queue.push(f);
}

// A face is a flippable clockwise cycle when every boundary arc runs against
// the face orbit (the orbit walks counterclockwise around inner faces).
bool face_is_clockwise(const Completion& c, FaceId f) {
  for (Dart d : c.g.face_darts(f))
    if (c.arc[edge_of(d)] != twin(d)) return false;
  return true;
}

std::vector<Dart> face_cycle(const Completion& c, FaceId f) {
  const auto& orbit = c.g.face_darts(f);
  std::vector<Dart> cycle;
  for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) cycle.push_back(twin(*it));
  return cycle;
}

}  // namespace

namespace {

SchnyderWood descend(const Suspension& s, const SchnyderWood& w, bool face_flips) {
  Completion c = build_completion(s, w);
  const bool validate_each_flip = s.g.n <= 64;
  const long long cap = 4LL * s.g.edge_count() * s.g.n + 64;
  long long flips = 0;

  FlipQueue queue(c.g.face_count());
  if (face_flips)
    for (FaceId f = 0; f < c.g.face_count(); ++f)
      if (f != c.g.outer_face) queue.push(f);

  while (true) {
    while (!queue.q.empty()) {
      FaceId f = queue.pop();
      if (f == c.g.outer_face || !face_is_clockwise(c, f)) continue;
      flip_cycle(c, face_cycle(c, f), queue);
      ++flips;
      require(flips <= cap, errc::flip_did_not_converge,
              "flip budget exceeded: " + std::to_string(flips));
      if (validate_each_flip) require_valid_wood(s, project_primal_wood(c));
    }
    auto cycle = find_clockwise_cycle(c);
    if (!cycle) break;
    flip_cycle(c, *cycle, queue);
    if (!face_flips) {
      queue.q.clear();
      std::fill(queue.queued.begin(), queue.queued.end(), 0);
    }
    ++flips;
    require(flips <= cap, errc::flip_did_not_converge,
            "flip budget exceeded: " + std::to_string(flips));
    if (validate_each_flip) require_valid_wood(s, project_primal_wood(c));
  }

  SchnyderWood out = project_primal_wood(c);
  require_valid_wood(s, out);
  return out;
}

}  // namespace

SchnyderWood minimize(const Suspension& s, const SchnyderWood& w) { return descend(s, w, true); }

SchnyderWood minimize_by_cycles(const Suspension& s, const SchnyderWood& w) {
  return descend(s, w, false);
}

bool is_minimal(const Suspension& s, const SchnyderWood& w) {
  Completion c = build_completion(s, w);
  return !find_clockwise_cycle(c).has_value();
}

}  // namespace cotree4
