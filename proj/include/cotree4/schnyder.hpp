#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotree4/plane_graph.hpp"

namespace cotree4 {

/// Edge orientation/coloring of a suspension. dart_color[d] is the color
/// (0 red, 1 green, 2 blue) of the direction tail(d) -> head(d), or -1 when
/// the edge carries no direction that way. Unidirected edges color exactly one
/// dart, bidirected edges both (with distinct colors). The three root
/// half-edges are implicit: the half-edge at root i is always unidirected,
/// outgoing and i-colored.
struct SchnyderWood {
  std::vector<int> dart_color;

  bool bidirected(Edge e) const { return dart_color[2 * e] >= 0 && dart_color[2 * e + 1] >= 0; }
  bool unidirected(Edge e) const {
    return (dart_color[2 * e] >= 0) != (dart_color[2 * e + 1] >= 0);
  }
  /// For unidirected edges: the dart carrying the single direction.
  Dart direction(Edge e) const { return dart_color[2 * e] >= 0 ? 2 * e : 2 * e + 1; }
};

struct WoodViolation {
  int condition;  // 1..4 per the Schnyder wood definition, 0 = coverage
  Vertex vertex = -1;
  FaceId face = -1;
  std::vector<Edge> edges;
  std::string message;
};

std::vector<WoodViolation> check_wood(const Suspension& s, const SchnyderWood& w);
void require_valid_wood(const Suspension& s, const SchnyderWood& w);

/// Outgoing dart of color c at v, or -1 when the outgoing edge of that color
/// is the root half-edge (only possible at root c).
Dart outgoing_dart(const Suspension& s, const SchnyderWood& w, Vertex v, int c);

/// Constructs some valid Schnyder wood of the suspension by canonical-ordering
/// style peeling (fast path for triangulations, searching path peeling
/// otherwise). The result is validated before it is returned.
SchnyderWood compute_wood(const Suspension& s);

/// Directed tree of one color: arcs as darts, all oriented toward root i.
/// Validates the spanning-tree property.
std::vector<Dart> trees(const Suspension& s, const SchnyderWood& w, int color);

/// True iff T_i + reversed T_{i-1} + reversed T_{i+1} is acyclic.
bool tree_union_acyclic(const Suspension& s, const SchnyderWood& w, int color);

struct DualWood {
  SuspendedDual sd;
  SchnyderWood wood;  // labels on sd.susp (edges 0..m-1 dual, m..m+2 b-triangle)
};

/// The dual Schnyder wood on the suspended dual.
DualWood dual_wood(const Suspension& s, const SchnyderWood& w);

/// The completion: superposition of the suspension and its suspended dual with
/// every crossing edge pair subdivided by a crossing vertex, plus six outer
/// half-edge stubs. Carries one directed colored arc per completion edge.
struct Completion {
  const Suspension* primal = nullptr;
  SuspendedDual sd;
  PlaneGraph g;
  int n_primal = 0;
  int n_dual = 0;
  int z_base = 0;     // crossing of edge k at z_base + k; half-edge crossings at z_base + m + i
  int stub_base = 0;  // primal stubs, then dual stubs

  std::vector<Dart> arc;   // per completion edge: dart carrying its direction
  std::vector<int> color;  // per completion edge

  std::vector<Edge> primal_seg;  // per primal dart d: completion edge (tail(d), z_edge(d))
  std::vector<Edge> dual_seg;    // per dual dart (suspended dual ids)
  std::array<Edge, 3> half_seg;  // (root i, z_h(i))
  std::array<Edge, 3> half_stub;
  std::array<Edge, 3> b_stub;

  int crossing_of_edge(Edge k) const { return z_base + k; }
  int crossing_of_half_edge(int i) const { return z_base + primal->g.edge_count() + i; }
  bool is_crossing(Vertex v) const { return v >= z_base && v < stub_base; }
  Vertex dual_vertex(int dv) const { return n_primal + dv; }
};

Completion build_completion(const Suspension& s, const SchnyderWood& w);

/// Projects the completion arcs back to a wood on the primal suspension.
SchnyderWood project_primal_wood(const Completion& c);

/// A directed cycle of the completion that is clockwise (encloses its interior
/// to the right of traversal), or nullopt when none exists. Returned as the
/// dart sequence of the cycle.
std::optional<std::vector<Dart>> find_clockwise_cycle(const Completion& c);

/// Orientation test used for validation: true iff the directed cycle (as
/// completion darts) has the outer face strictly on its left region.
bool cycle_is_clockwise(const Completion& c, const std::vector<Dart>& cycle);

/// Lattice descent: reverses clockwise inner face boundaries of the completion
/// (general clockwise cycles as a fallback) until no clockwise directed cycle
/// remains. Re-validates per flip at desk scale and always on return.
SchnyderWood minimize(const Suspension& s, const SchnyderWood& w);

/// Descent by general clockwise cycles only, never by the face fast path.
/// Reaches the same unique minimum; kept as a cross-check of the cycle
/// reversal machinery on cycles with non-empty interiors.
SchnyderWood minimize_by_cycles(const Suspension& s, const SchnyderWood& w);

bool is_minimal(const Suspension& s, const SchnyderWood& w);

/// Crossing-vertex degree pattern: every crossing vertex has one outgoing and
/// three incoming arcs colored red, green, blue in counterclockwise order.
/// Returns human-readable violations.
std::vector<std::string> check_crossing_vertices(const Completion& c);

}  // namespace cotree4
