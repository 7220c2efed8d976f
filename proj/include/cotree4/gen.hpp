#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cotree4/plane_graph.hpp"
#include "cotree4/schnyder.hpp"

namespace cotree4 {

struct Fixture {
  std::string name;
  PlaneGraph g;
  std::array<Vertex, 3> roots;
};

namespace gen {

Fixture k4();
Fixture tetrahedron();  // alias of k4
Fixture cube();
Fixture octahedron();
Fixture dodecahedron();
Fixture icosahedron();
Fixture wheel(int k);
Fixture prism(int k);
Fixture worked_example();
/// The Schnyder wood drawn in the figure; valid but not lattice-minimal.
SchnyderWood worked_example_wood(const Suspension& s);

/// Sun graphs: internally 3-connected but short of the suspension class; a
/// k-cycle w_0..w_{k-1}
/// with outer vertices p_i joined to w_i and w_{i+1}. Vertices 0..k-1 are the
/// cycle, k..2k-1 the outer ring. No valid root triple exists; roots are
/// returned as {0,1,2} for the negative tests.
Fixture sun(int k);

/// Random maximal planar graph grown by repeated vertex insertion into a
/// uniformly chosen inner face, starting from K4. Deterministic per seed.
Fixture random_triangulation(int n, uint64_t seed);

/// Roots for a plain 3-connected input: the outer face keeps its designation
/// and the roots are the lexicographically smallest clockwise-consecutive
/// vertex triple on its boundary.
std::array<Vertex, 3> default_roots(const PlaneGraph& g);

}  // namespace gen

enum class CorpusProfile { small, medium, bench };

std::vector<Fixture> corpus(CorpusProfile profile);
/// The negative bucket: generated members that fail the sigma-internal
/// 3-connectivity predicate for every clockwise root triple.
std::vector<Fixture> negative_corpus();

}  // namespace cotree4
