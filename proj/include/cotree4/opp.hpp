#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cotree4/schnyder.hpp"

namespace cotree4 {

struct OppPath {
  std::vector<Vertex> vertices;  // v_1..v_k with the first edge outgoing j-colored at v_1
  std::vector<Edge> edges;       // the k-1 path edges
  Vertex left = -1, right = -1;  // v_0 and v_{k+1} (unset for P_0)
  Edge left_edge = -1, right_edge = -1;

  /// Edges of the extension: v_0v_1, the path edges, v_kv_{k+1}.
  std::vector<Edge> extension_edges() const {
    std::vector<Edge> out{left_edge};
    out.insert(out.end(), edges.begin(), edges.end());
    out.push_back(right_edge);
    return out;
  }
};

/// Ordered path partition compatible with a wood: the inclusion-maximal
/// j-(j+1)-colored paths, ordered by a linear extension of reachability in
/// T_j^-1 + T_{j+1}^-1 + T_{j+2}. Cover data is recorded while the contour is
/// spliced path by path.
struct OrderedPathPartition {
  int j = 1;
  std::vector<OppPath> paths;
  std::vector<int> path_of;        // vertex -> path index
  std::vector<int> cover_edge;     // edge -> covering path index (-1: never covered)
  std::vector<int64_t> cover_pos;  // edge -> contour position at cover time
  std::vector<int> cover_vertex;   // vertex -> covering path index (-1: never covered)

  int size() const { return int(paths.size()); }
};

OrderedPathPartition compatible_opp(const Suspension& s, const SchnyderWood& w, int j);

struct OppViolation {
  int condition;  // 1..4 per the definition; 0 structural, 5 inducedness, 6 order
  int path = -1;
  std::string message;
};

/// Validates the partition against the definition from scratch: conditions
/// (1)-(4), inducedness, and the linear-extension property.
std::vector<OppViolation> check_opp(const Suspension& s, const SchnyderWood& w,
                                    const OrderedPathPartition& opp);

/// Same checks on a bare ordered vertex partition (for adversarial inputs).
std::vector<OppViolation> check_opp_raw(const Suspension& s, const SchnyderWood& w, int j,
                                        const std::vector<std::vector<Vertex>>& paths);

struct PathExtension {
  Vertex left, right;
  Edge left_edge, right_edge;
};

/// Re-derives the left/right neighbors of path i on the recomputed contour
/// C_{i-1} and validates the attachment color conditions.
PathExtension extension(const Suspension& s, const SchnyderWood& w,
                        const OrderedPathPartition& opp, int i);

/// Per-path structural properties of compatible partitions: below-neighbors
/// stay between the attachments, attachment edges exist and carry the right
/// colors, interior below-edges point into the path, and every path lies on
/// its own contour. Empty result means all hold.
std::vector<std::string> check_path_properties(const Suspension& s, const SchnyderWood& w,
                                               const OrderedPathPartition& opp);

/// For minimal woods only: every edge from P_i into V_{i-1} other than the two
/// extension edges is unidirected, (j+2)-colored and incoming at the last path
/// vertex, and avoids the two attachment vertices. Throws NotMinimalWood when
/// the wood is not minimal.
std::vector<std::string> check_interior_red_rule(const Suspension& s, const SchnyderWood& w,
                                         const OrderedPathPartition& opp);

/// Clockwise boundary walk of G[V_i] from r_{j+1} to r_j, recomputed from
/// scratch; the raw walk may repeat vertices (the checker flags that).
std::vector<Vertex> contour_of(const Suspension& s, int j, const std::vector<char>& in_vi);

}  // namespace cotree4
