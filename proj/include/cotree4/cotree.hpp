#pragma once

#include <map>
#include <string>
#include <vector>

#include "cotree4/opp.hpp"

namespace cotree4 {

/// Spanning subgraph of the bidirected wood edges. On a suspended dual this
/// includes the three b-triangle edges, which are bidirected by construction.
struct CandidateGraph {
  std::vector<char> in_h;  // per edge
  int max_degree = 0;
};

CandidateGraph candidate(const Suspension& s, const SchnyderWood& w);

/// Path indices that are the index-maximal subpath of some cycle of H: the
/// full extension lies in H and the attachments are connected in H below the
/// path. The final path always qualifies (outer face boundary).
std::vector<int> index_maximal_subpaths(const Suspension& s, const CandidateGraph& h,
                                        const OrderedPathPartition& opp);

/// For every index-maximal path except the last: the smallest-index path that
/// covers an edge of its extension.
std::map<int, int> minimal_covering_paths(const OrderedPathPartition& opp,
                                          const std::vector<int>& pmax);

enum class DeletionCase { outer_face, case1, case21, case22 };
const char* deletion_case_name(DeletionCase c);

struct DeletionEntry {
  Edge edge;
  DeletionCase dcase;
  int covering_path;  // the path being processed (-1 for the outer rule)
  int target_path;    // the index-maximal path whose extension lost the edge
};

struct DeletionSet {
  std::vector<char> in_d;  // per edge
  std::vector<DeletionEntry> entries;
};

DeletionSet select_deletions(const Suspension& s, const SchnyderWood& w,
                             const OrderedPathPartition& opp, const CandidateGraph& h,
                             const std::vector<int>& pmax, const std::map<int, int>& covering);

struct TreePair {
  std::vector<char> in_tree;     // per primal edge
  std::vector<char> in_co_tree;  // per dual edge (primal ids under the bijection)
  int tree_max_degree = 0;
  int co_tree_max_degree = 0;
};

struct PipelineResult {
  SchnyderWood wood;  // minimal primal wood
  DualWood dw;        // its dual (minimal as well, asserted)
  OrderedPathPartition opp, dual_opp;
  CandidateGraph h, dual_h;
  DeletionSet d, d_prime;  // d_prime lives on suspended-dual edge ids
  TreePair pair;
};

/// The full pipeline: seed wood, minimize, both ordered path partitions, both
/// deletion sets, and the verified tree/co-tree pair. Every postcondition is
/// checked before returning.
PipelineResult run_pipeline(const Suspension& s);

TreePair build_tree_pair(const Suspension& s);

}  // namespace cotree4
