#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotree4 {

enum class errc {
  parse_error,
  non_simple,
  disconnected,
  not_genus_zero,
  inconsistent_rotation,
  outer_face_mismatch,
  roots_not_on_outer_face,
  roots_not_clockwise,
  not_internally_3_connected,
  invalid_wood,
  flip_did_not_converge,
  cycle_in_order_graph,
  missing_neighbor,
  not_minimal_wood,
  no_covering_path,
  case_exhaustion,
  postcondition_failure,
  too_many_trees,
  bad_parameters,
  internal_error,
};

const char* errc_name(errc c);

struct Error : std::runtime_error {
  errc code;
  Error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] void raise(errc c, const std::string& what);

inline void require(bool ok, errc c, const std::string& what) {
  if (!ok) raise(c, what);
}

// Union-find with union by size.
struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

// Colors are 0 = red, 1 = green, 2 = blue with cyclic arithmetic.
inline int color_next(int c) { return (c + 1) % 3; }
inline int color_prev(int c) { return (c + 2) % 3; }
const char* color_name(int c);

}  // namespace cotree4
