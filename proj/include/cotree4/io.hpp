#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cotree4/plane_graph.hpp"
#include "cotree4/schnyder.hpp"

namespace cotree4 {

struct GraphInput {
  PlaneGraph g;
  std::optional<std::array<Vertex, 3>> roots;
};

/// Embedded-graph text format:
///   planar <n>
///   outer <v0> <v1> ...
///   <v>: <u1> <u2> ... <uk>     (clockwise neighbor order, one line per vertex)
///   roots <r1> <r2> <r3>        (optional)
GraphInput read_graph(std::istream& in);
GraphInput read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const PlaneGraph& g,
                 const std::optional<std::array<Vertex, 3>>& roots);

/// Wood serialization: one line per edge, `u v uni <toward> <color>` or
/// `u v bi <color_toward_u> <color_toward_v>`; colors are red/green/blue.
void write_wood(std::ostream& out, const Suspension& s, const SchnyderWood& w);
SchnyderWood read_wood(std::istream& in, const Suspension& s);
SchnyderWood read_wood_file(const std::string& path, const Suspension& s);

}  // namespace cotree4
