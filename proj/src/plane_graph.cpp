#include "cotree4/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cotree4 {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::non_simple: return "NonSimple";
    case errc::disconnected: return "Disconnected";
    case errc::not_genus_zero: return "NotGenusZero";
    case errc::inconsistent_rotation: return "InconsistentRotation";
    case errc::outer_face_mismatch: return "OuterFaceMismatch";
    case errc::roots_not_on_outer_face: return "RootsNotOnOuterFace";
    case errc::roots_not_clockwise: return "RootsNotClockwise";
    case errc::not_internally_3_connected: return "NotInternally3Connected";
    case errc::invalid_wood: return "InvalidWood";
    case errc::flip_did_not_converge: return "FlipDidNotConverge";
    case errc::cycle_in_order_graph: return "CycleInOrderGraph";
    case errc::missing_neighbor: return "MissingNeighbor";
    case errc::not_minimal_wood: return "NotMinimalWood";
    case errc::no_covering_path: return "NoCoveringPath";
    case errc::case_exhaustion: return "CaseExhaustion";
    case errc::postcondition_failure: return "PostconditionFailure";
    case errc::too_many_trees: return "TooManyTrees";
    case errc::bad_parameters: return "BadParameters";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

void raise(errc c, const std::string& what) { throw Error(c, what); }

const char* color_name(int c) {
  switch (c) {
    case 0: return "red";
    case 1: return "green";
    case 2: return "blue";
  }
  return "?";
}

void PlaneGraph::finalize() {
  const int nd = dart_count();
  require(nd % 2 == 0, errc::internal_error, "odd dart count");
  require(n > 0, errc::bad_parameters, "empty graph");

  tails.assign(nd, -1);
  rot_pos.assign(nd, -1);
  require(int(rotation.size()) == n, errc::internal_error, "rotation size");
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < int(rotation[v].size()); ++i) {
      Dart d = rotation[v][i];
      require(d >= 0 && d < nd, errc::internal_error, "dart id out of range");
      require(tails[d] == -1, errc::inconsistent_rotation, "dart appears in two rotations");
      tails[d] = v;
      rot_pos[d] = i;
    }
  }
  for (Dart d = 0; d < nd; ++d) {
    require(tails[d] >= 0, errc::inconsistent_rotation, "dart missing from rotations");
    require(heads[d] == tails[twin(d)], errc::inconsistent_rotation, "twin head/tail mismatch");
  }

  for (Edge e = 0; e < edge_count(); ++e)
    require(tails[2 * e] != heads[2 * e], errc::non_simple, "loop edge");
  if (!allow_parallel) {
    for (Vertex v = 0; v < n; ++v) {
      std::set<Vertex> seen;
      for (Dart d : rotation[v])
        require(seen.insert(heads[d]).second, errc::non_simple, "parallel edge at vertex " + std::to_string(v));
    }
  }

  // connectivity
  {
    std::vector<char> vis(n, 0);
    std::vector<Vertex> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : rotation[v])
        if (!vis[heads[d]]) {
          vis[heads[d]] = 1;
          ++cnt;
          stack.push_back(heads[d]);
        }
    }
    require(cnt == n, errc::disconnected, "graph is not connected");
  }

  // face orbits of d -> cw_next(twin(d))
  face_of_dart.assign(nd, -1);
  faces.clear();
  for (Dart d0 = 0; d0 < nd; ++d0) {
    if (face_of_dart[d0] >= 0) continue;
    FaceId f = int(faces.size());
    faces.emplace_back();
    Dart d = d0;
    do {
      face_of_dart[d] = f;
      faces[f].push_back(d);
      d = face_next(d);
    } while (d != d0);
  }

  require(n - edge_count() + face_count() == 2, errc::not_genus_zero,
          "V - E + F = " + std::to_string(n - edge_count() + face_count()));
}

std::optional<Dart> PlaneGraph::find_dart(Vertex u, Vertex v) const {
  for (Dart d : rotation[u])
    if (heads[d] == v) return d;
  return std::nullopt;
}

std::vector<Vertex> PlaneGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(rotation[v].size());
  for (Dart d : rotation[v]) out.push_back(heads[d]);
  return out;
}

std::vector<Vertex> PlaneGraph::face_tails(FaceId f) const {
  std::vector<Vertex> out;
  out.reserve(faces[f].size());
  for (Dart d : faces[f]) out.push_back(tails[d]);
  return out;
}

namespace {

bool cyclically_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  const int k = int(a.size());
  for (int s = 0; s < k; ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = a[(s + i) % k] == b[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace

PlaneGraph assemble_plane_graph(int n, const std::vector<std::vector<Vertex>>& neighbors) {
  require(n >= 1, errc::bad_parameters, "need at least one vertex");
  require(int(neighbors.size()) == n, errc::parse_error, "neighbor list count != n");

  PlaneGraph g;
  g.n = n;
  g.rotation.assign(n, {});
  std::map<std::pair<Vertex, Vertex>, Dart> dart_by_pair;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex u : neighbors[v]) {
      require(u >= 0 && u < n, errc::parse_error, "neighbor id out of range");
      require(u != v, errc::non_simple, "loop at vertex " + std::to_string(v));
      require(seen.insert(u).second, errc::inconsistent_rotation,
              "neighbor " + std::to_string(u) + " duplicated in the rotation of vertex " +
                  std::to_string(v));
      auto it = dart_by_pair.find({u, v});
      Dart d;
      if (it != dart_by_pair.end() && g.heads[twin(it->second)] == -1) {
        d = twin(it->second);
        g.heads[d] = u;
      } else {
        d = int(g.heads.size());
        g.heads.push_back(u);
        g.heads.push_back(-1);
        dart_by_pair[{v, u}] = d;
      }
      g.rotation[v].push_back(d);
    }
  }
  for (Dart d = 0; d < g.dart_count(); ++d)
    require(g.heads[d] != -1, errc::inconsistent_rotation,
            "edge listed on one side only (dart to " + std::to_string(g.heads[twin(d)]) + ")");
  g.finalize();
  return g;
}

PlaneGraph build_plane_graph(int n, const std::vector<std::vector<Vertex>>& neighbors,
                             const std::vector<Vertex>& outer) {
  PlaneGraph g = assemble_plane_graph(n, neighbors);

  // locate the designated outer face
  g.outer_face = -1;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (cyclically_equal(g.face_tails(f), outer)) {
      g.outer_face = f;
      break;
    }
  }
  require(g.outer_face >= 0, errc::outer_face_mismatch, "no face matches the given outer boundary");
  return g;
}

namespace {

void check_root_triple(const PlaneGraph& g, const std::array<Vertex, 3>& roots) {
  require(roots[0] != roots[1] && roots[1] != roots[2] && roots[0] != roots[2],
          errc::roots_not_on_outer_face, "roots must be distinct");
  std::vector<Vertex> walk = g.outer_boundary();
  for (Vertex r : roots)
    require(std::find(walk.begin(), walk.end(), r) != walk.end(), errc::roots_not_on_outer_face,
            "root " + std::to_string(r) + " not on the outer face");
  // clockwise order: some occurrence of r1, then r2, then r3 within one turn
  const int k = int(walk.size());
  bool ok = false;
  for (int s = 0; s < k && !ok; ++s) {
    if (walk[s] != roots[0]) continue;
    int i = 1;
    for (int t = 1; t < k && i < 3; ++t)
      if (walk[(s + t) % k] == roots[i]) ++i;
    ok = i == 3;
  }
  require(ok, errc::roots_not_clockwise, "roots are not in clockwise order on the outer face");
}

// articulation-vertex sweep with timestamped marks so repeated calls avoid
// refilling the work arrays
struct BiconnectivityScratch {
  std::vector<int> disc, low, parent, stamp, child_idx;
  std::vector<Vertex> stack;
  int epoch = 0;

  bool connected_and_biconnected_without(const std::vector<std::vector<Vertex>>& adj, int skip) {
    const int n = int(adj.size());
    if (int(disc.size()) < n) {
      disc.assign(n, 0);
      low.assign(n, 0);
      parent.assign(n, 0);
      child_idx.assign(n, 0);
      stamp.assign(n, 0);
    }
    ++epoch;
    int root = skip == 0 ? 1 : 0;
    int timer = 0, visited = 0, root_children = 0;
    bool has_articulation = false;
    stack.clear();
    stack.push_back(root);
    stamp[root] = epoch;
    disc[root] = low[root] = timer++;
    parent[root] = -1;
    child_idx[root] = 0;
    ++visited;
    while (!stack.empty()) {
      Vertex v = stack.back();
      if (child_idx[v] < int(adj[v].size())) {
        Vertex u = adj[v][child_idx[v]++];
        if (u == skip) continue;
        if (stamp[u] != epoch) {
          stamp[u] = epoch;
          parent[u] = v;
          disc[u] = low[u] = timer++;
          child_idx[u] = 0;
          ++visited;
          if (v == root) ++root_children;
          stack.push_back(u);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) has_articulation = true;
        }
      }
    }
    if (visited != n - 1) return false;  // disconnected
    return !has_articulation && root_children <= 1;
  }
};

}  // namespace

bool is_sigma_internally_3_connected(const PlaneGraph& g, const std::array<Vertex, 3>& roots) {
  check_root_triple(g, roots);
  if (g.n < 3) return false;
  // G plus an apex joined to the three roots; 3-connected iff removing any
  // single vertex leaves a biconnected graph.
  const int apex = g.n;
  std::vector<std::vector<Vertex>> adj(g.n + 1);
  for (Vertex v = 0; v < g.n; ++v) adj[v] = g.neighbors(v);
  for (Vertex r : roots) {
    adj[r].push_back(apex);
    adj[apex].push_back(r);
  }
  BiconnectivityScratch scratch;
  for (int x = 0; x <= g.n; ++x)
    if (!scratch.connected_and_biconnected_without(adj, x)) return false;
  return true;
}

Suspension suspend_unchecked(const PlaneGraph& g, const std::array<Vertex, 3>& roots) {
  check_root_triple(g, roots);
  Suspension s;
  s.g = g;
  s.roots = roots;
  for (int i = 0; i < 3; ++i) {
    Dart out = -1;
    for (Dart d : g.face_darts(g.outer_face))
      if (g.tail(d) == roots[i]) {
        require(out == -1, errc::roots_not_on_outer_face,
                "root visited twice by the outer boundary");
        out = d;
      }
    s.root_out[i] = out;
  }
  return s;
}

Suspension suspend(const PlaneGraph& g, const std::array<Vertex, 3>& roots) {
  require(is_sigma_internally_3_connected(g, roots), errc::not_internally_3_connected,
          "graph is not sigma-internally 3-connected for the given roots");
  return suspend_unchecked(g, roots);
}

DualMap dual(const PlaneGraph& g) {
  DualMap dm;
  PlaneGraph& d = dm.dual;
  d.n = g.face_count();
  d.allow_parallel = true;
  d.heads.assign(g.dart_count(), -1);
  d.rotation.assign(d.n, {});
  for (Dart x = 0; x < g.dart_count(); ++x) d.heads[x] = g.left_face(twin(x));
  for (FaceId f = 0; f < g.face_count(); ++f) {
    const auto& orbit = g.face_darts(f);
    d.rotation[f].assign(orbit.rbegin(), orbit.rend());
  }
  d.finalize();
  require(d.face_count() == g.n, errc::internal_error, "dual face count != primal vertex count");

  dm.dual_face_of_vertex.assign(g.n, -1);
  for (Vertex v = 0; v < g.n; ++v)
    dm.dual_face_of_vertex[v] = d.face_of_dart[twin(g.rotation[v][0])];
  // cosmetic: designate the dual face of the first outer-boundary vertex
  d.outer_face = dm.dual_face_of_vertex[g.outer_boundary().front()];
  return dm;
}

Vertex SuspendedDual::left_dual_vertex(const PlaneGraph& g, Dart d) const {
  FaceId f = g.left_face(d);
  if (f == g.outer_face) {
    Vertex bv = outer_side_b[edge_of(d)];
    require(bv >= 0, errc::internal_error, "outer-side b vertex missing");
    return bv;
  }
  return dual_vertex_of_face[f];
}

SuspendedDual suspended_dual(const Suspension& s) {
  const PlaneGraph& g = s.g;
  const int m = g.edge_count();
  SuspendedDual sd;

  sd.dual_vertex_of_face.assign(g.face_count(), -1);
  int ndual = 0;
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (f != g.outer_face) sd.dual_vertex_of_face[f] = ndual++;
  for (int i = 0; i < 3; ++i) sd.b[i] = ndual++;
  sd.face_of_dual_vertex.assign(ndual, -1);
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (f != g.outer_face) sd.face_of_dual_vertex[sd.dual_vertex_of_face[f]] = f;

  // Assign outer-boundary edges to b vertices: b[j] faces the clockwise arc
  // from roots[(j+1)%3] to roots[(j+2)%3].
  sd.outer_side_b.assign(m, -1);
  {
    const auto& orbit = g.face_darts(g.outer_face);
    const int k = int(orbit.size());
    int start = -1;
    for (int i = 0; i < k; ++i)
      if (orbit[i] == s.root_out[1]) start = i;
    require(start >= 0, errc::internal_error, "root_out dart not on outer orbit");
    int j = 0;  // arc owner: b[0] from roots[1] to roots[2]
    for (int t = 0; t < k; ++t) {
      Dart d = orbit[(start + t) % k];
      if (t > 0) {
        if (d == s.root_out[2]) j = 1;
        if (d == s.root_out[0]) j = 2;
      }
      sd.outer_side_b[edge_of(d)] = sd.b[j];
    }
  }

  PlaneGraph dg;
  dg.n = ndual;
  dg.allow_parallel = true;
  dg.heads.assign(2 * (m + 3), -1);
  dg.rotation.assign(ndual, {});
  // duals of primal edges: dual dart d has tail left_dual_vertex(d)
  for (Dart d = 0; d < 2 * m; ++d) dg.heads[d] = sd.left_dual_vertex(g, twin(d));
  // b-triangle: edge m+j joins b[j] -> b[(j+1)%3]
  for (int j = 0; j < 3; ++j) {
    dg.heads[2 * (m + j)] = sd.b[(j + 1) % 3];
    dg.heads[2 * (m + j) + 1] = sd.b[j];
  }
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (f == g.outer_face) continue;
    const auto& orbit = g.face_darts(f);
    auto& rot = dg.rotation[sd.dual_vertex_of_face[f]];
    rot.assign(orbit.rbegin(), orbit.rend());
  }
  // rotation at b[i]: [to b[i+1], arc duals from the roots[(i+2)%3] end back
  // to the roots[(i+1)%3] end, to b[i-1]]
  {
    const auto& orbit = g.face_darts(g.outer_face);
    const int k = int(orbit.size());
    for (int i = 0; i < 3; ++i) {
      auto& rot = dg.rotation[sd.b[i]];
      rot.push_back(2 * (m + i));                    // toward b[i+1]
      int start = -1;
      for (int t = 0; t < k; ++t)
        if (orbit[t] == s.root_out[(i + 1) % 3]) start = t;
      std::vector<Dart> arc;
      for (int t = start;; t = (t + 1) % k) {
        Dart d = orbit[t % k];
        if (t != start && d == s.root_out[(i + 2) % 3]) break;
        arc.push_back(d);
      }
      rot.insert(rot.end(), arc.rbegin(), arc.rend());
      rot.push_back(2 * (m + (i + 2) % 3) + 1);      // toward b[i-1]
    }
  }
  dg.finalize();

  // outer face of the suspended dual is left of the b[0] -> b[1] dart
  dg.outer_face = dg.face_of_dart[2 * m];
  {
    auto boundary = dg.face_tails(dg.outer_face);
    require(boundary.size() == 3, errc::internal_error, "suspended dual outer face is not the b-triangle");
  }
  sd.susp = suspend_unchecked(dg, {sd.b[0], sd.b[1], sd.b[2]});
  return sd;
}

namespace {

bool extend_isomorphism(const PlaneGraph& a, const PlaneGraph& b, std::vector<int>& map_ab,
                        std::vector<int>& map_ba, std::vector<Vertex>& order, size_t idx) {
  if (idx == order.size()) return true;
  Vertex va = order[idx];
  auto na = a.neighbors(va);
  for (Vertex vb = 0; vb < b.n; ++vb) {
    if (map_ba[vb] != -1 || b.degree(vb) != a.degree(va)) continue;
    bool ok = true;
    for (Vertex u : na) {
      if (map_ab[u] != -1 && !b.adjacent(vb, map_ab[u])) ok = false;
      if (!ok) break;
    }
    if (!ok) continue;
    map_ab[va] = vb;
    map_ba[vb] = va;
    if (extend_isomorphism(a, b, map_ab, map_ba, order, idx + 1)) return true;
    map_ab[va] = -1;
    map_ba[vb] = -1;
  }
  return false;
}

}  // namespace

bool isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (Vertex v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // BFS order keeps candidate sets constrained by already-mapped neighbors
  std::vector<Vertex> order;
  {
    Vertex start = 0;
    for (Vertex v = 0; v < a.n; ++v)
      if (a.degree(v) > a.degree(start)) start = v;
    std::vector<char> vis(a.n, 0);
    order.push_back(start);
    vis[start] = 1;
    for (size_t i = 0; i < order.size(); ++i)
      for (Vertex u : a.neighbors(order[i]))
        if (!vis[u]) {
          vis[u] = 1;
          order.push_back(u);
        }
  }
  std::vector<int> map_ab(a.n, -1), map_ba(b.n, -1);
  return extend_isomorphism(a, b, map_ab, map_ba, order, 0);
}

}  // namespace cotree4
