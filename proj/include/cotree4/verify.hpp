#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cotree4/cotree.hpp"
#include "cotree4/plane_graph.hpp"

namespace cotree4 {

enum class CertKind {
  spanning_tree,
  co_tree_duality,
  degree_bound,
  root_degrees,
  family_bound,
  oracle,
};

const char* cert_kind_name(CertKind k);

struct Certificate {
  CertKind kind;
  bool pass = false;
  std::string detail;
  std::vector<int> witness;  // offending edges/vertices; non-empty on failure
};

Certificate is_spanning_tree(const PlaneGraph& g, const std::vector<Edge>& edges);

/// Duals of the non-tree edges; throws NotATree-style errors when the input
/// fails is_spanning_tree. The result is a spanning tree of the dual.
std::vector<Edge> co_tree_of(const PlaneGraph& g, const DualMap& dm,
                             const std::vector<Edge>& tree_edges);

/// Cut-cycle duality at desk scale: pass iff (edge_set is a cycle of g)
/// is equivalent to (its dual set is a minimal cut of g*).
Certificate check_cut_cycle(const PlaneGraph& g, const DualMap& dm,
                            const std::vector<Edge>& edge_set);

/// Root degrees of the returned pair: r1 a leaf, all outer edges except the
/// outgoing green edge of r1 in the tree, deg(r3) = 2, deg(r2) <= 3, and the
/// outer-face dual vertex a co-tree leaf.
Certificate check_root_degrees(const Suspension& s, const SchnyderWood& minimal_wood,
                               const TreePair& pair);

/// Multigraph by explicit edge list, the oracle's working representation.
struct EdgeListGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

EdgeListGraph edge_list_of(const PlaneGraph& g);

/// Exact spanning tree count (matrix-tree, fraction-free elimination).
long long count_spanning_trees(const EdgeListGraph& g);

/// Enumerates every spanning tree by deletion-contraction with an explicit
/// stack; calls leaf(chosen) once per tree. Throws TooManyTrees beyond limit.
long long enumerate_spanning_trees(const EdgeListGraph& g, long long limit,
                                   const std::function<void(const std::vector<char>&)>& leaf);

struct OracleResult {
  long long tree_count = 0;
  int best = 0;  // min over spanning trees of max(maxdeg T, maxdeg co-tree)
  std::vector<Edge> witness_tree;
  bool has_33_pair = false;  // a (<=3, <=3) pair exists (reported, never asserted)
};

/// Exhaustive optimum of max(tree degree, co-tree degree) over all spanning
/// trees of a plane graph.
OracleResult oracle_best_pair(const PlaneGraph& g, long long max_trees);

/// Exhaustive minimum of the max degree over all spanning trees of an
/// arbitrary multigraph (used for the dual family bound).
int oracle_min_max_degree(const EdgeListGraph& g, long long max_trees);

}  // namespace cotree4
