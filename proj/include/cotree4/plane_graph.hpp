#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cotree4/base.hpp"

namespace cotree4 {

using Vertex = int;
using Dart = int;  // darts 2k and 2k+1 are the two darts of edge k
using Edge = int;
using FaceId = int;

inline Dart twin(Dart d) { return d ^ 1; }
inline Edge edge_of(Dart d) { return d >> 1; }

/// Combinatorial plane embedding given as a rotation system with *clockwise*
/// neighbor order at every vertex. Faces are the orbits of
/// d -> cw_next(twin(d)); with this convention the face of a dart lies to its
/// left and the orbit of the outer face walks the outer boundary clockwise.
struct PlaneGraph {
  int n = 0;
  std::vector<Vertex> heads;                // per dart
  std::vector<std::vector<Dart>> rotation;  // per vertex, outgoing darts, clockwise
  bool allow_parallel = false;              // duals may carry multi-edges

  // derived by finalize()
  std::vector<Vertex> tails;
  std::vector<int> rot_pos;  // index of dart within rotation[tail(dart)]
  std::vector<FaceId> face_of_dart;
  std::vector<std::vector<Dart>> faces;
  FaceId outer_face = -1;

  int edge_count() const { return int(heads.size()) / 2; }
  int dart_count() const { return int(heads.size()); }
  int face_count() const { return int(faces.size()); }
  int inner_face_count() const { return face_count() - 1; }
  Vertex head(Dart d) const { return heads[d]; }
  Vertex tail(Dart d) const { return tails[d]; }
  int degree(Vertex v) const { return int(rotation[v].size()); }

  Dart cw_next(Dart d) const {
    const auto& rot = rotation[tails[d]];
    int p = rot_pos[d] + 1;
    return rot[p == int(rot.size()) ? 0 : p];
  }
  Dart cw_prev(Dart d) const {
    const auto& rot = rotation[tails[d]];
    int p = rot_pos[d];
    return rot[p == 0 ? rot.size() - 1 : p - 1];
  }
  Dart face_next(Dart d) const { return cw_next(twin(d)); }
  FaceId left_face(Dart d) const { return face_of_dart[d]; }
  FaceId right_face(Dart d) const { return face_of_dart[twin(d)]; }
  const std::vector<Dart>& face_darts(FaceId f) const { return faces[f]; }

  std::optional<Dart> find_dart(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return find_dart(u, v).has_value(); }
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Tails of the face orbit, i.e. the boundary vertex walk.
  std::vector<Vertex> face_tails(FaceId f) const;
  std::vector<Vertex> outer_boundary() const { return face_tails(outer_face); }
  bool dart_on_face(Dart d, FaceId f) const { return face_of_dart[d] == f; }

  /// Computes derived data and checks all structural invariants (twin
  /// involution, rotation partition, simplicity, connectivity, genus 0).
  void finalize();
};

/// Builds a simple connected plane graph from per-vertex clockwise neighbor
/// lists. `outer` is the expected clockwise boundary walk of the designated
/// outer face (vertices may repeat when the graph is not 2-connected).
PlaneGraph build_plane_graph(int n, const std::vector<std::vector<Vertex>>& neighbors,
                             const std::vector<Vertex>& outer);

/// Same pairing and validation, but leaves the outer face undesignated.
PlaneGraph assemble_plane_graph(int n, const std::vector<std::vector<Vertex>>& neighbors);

/// A suspension: three roots in clockwise order on the outer face, each
/// carrying an implicit half-edge into the outer face. The half-edge of root i
/// sits immediately before root_out[i] in the clockwise rotation at the root.
struct Suspension {
  PlaneGraph g;
  std::array<Vertex, 3> roots;
  std::array<Dart, 3> root_out;  // outer-orbit dart leaving each root
};

/// True iff g plus an apex vertex joined to the three root half-edges is
/// 3-connected. Throws RootsNotOnOuterFace / RootsNotClockwise when the root
/// triple itself is malformed.
bool is_sigma_internally_3_connected(const PlaneGraph& g, const std::array<Vertex, 3>& roots);

Suspension suspend(const PlaneGraph& g, const std::array<Vertex, 3>& roots);

/// Suspension without the connectivity predicate; used where the class
/// membership is known by construction (generated corpora) or asserted by the
/// caller already.
Suspension suspend_unchecked(const PlaneGraph& g, const std::array<Vertex, 3>& roots);

/// Planar dual. Dual vertex ids equal primal face ids, dual edge k is the dual
/// of primal edge k, and dual dart d has tail left_face(d). The dual is
/// multigraph-tolerant.
struct DualMap {
  PlaneGraph dual;
  /// Dual face corresponding to a primal vertex.
  std::vector<FaceId> dual_face_of_vertex;
};

DualMap dual(const PlaneGraph& g);

/// The suspended dual: inner faces keep one dual vertex each and the outer
/// face vertex is replaced by the triangle b1, b2, b3 (roots of the dual
/// suspension). Edges 0..m-1 are the duals of the primal edges; edges
/// m..m+2 are the b-triangle: edge m+j joins b[j] and b[(j+1)%3] and crosses
/// the half-edge at root (j+2)%3.
struct SuspendedDual {
  Suspension susp;
  std::array<Vertex, 3> b;
  std::vector<Vertex> dual_vertex_of_face;  // -1 for the primal outer face
  std::vector<FaceId> face_of_dual_vertex;  // -1 for the b vertices
  std::vector<Vertex> outer_side_b;         // per primal edge: b vertex of its outer side, -1 if inner

  /// Dual vertex left/right of a directed primal dart (outer side resolved to
  /// the arc's b vertex).
  Vertex left_dual_vertex(const PlaneGraph& g, Dart d) const;
  Vertex right_dual_vertex(const PlaneGraph& g, Dart d) const { return left_dual_vertex(g, twin(d)); }
};

SuspendedDual suspended_dual(const Suspension& s);

/// Certifiable helper: true iff `a` and `b` are isomorphic (desk scale,
/// backtracking on degree-refined candidates).
bool isomorphic(const PlaneGraph& a, const PlaneGraph& b);

}  // namespace cotree4
