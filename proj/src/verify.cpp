#include "cotree4/verify.hpp"

#include <algorithm>
#include <set>

namespace cotree4 {

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::spanning_tree: return "SpanningTree";
    case CertKind::co_tree_duality: return "CoTreeDuality";
    case CertKind::degree_bound: return "DegreeBound";
    case CertKind::root_degrees: return "RootDegrees";
    case CertKind::family_bound: return "FamilyBound";
    case CertKind::oracle: return "Oracle";
  }
  return "?";
}

Certificate is_spanning_tree(const PlaneGraph& g, const std::vector<Edge>& edges) {
  Certificate c{CertKind::spanning_tree, false, "", {}};
  if (int(edges.size()) != g.n - 1) {
    c.detail = "edge count " + std::to_string(edges.size()) + " != n-1";
    c.witness.push_back(int(edges.size()));
    return c;
  }
  Dsu dsu(g.n);
  for (Edge e : edges) {
    if (e < 0 || e >= g.edge_count()) {
      c.detail = "edge id out of range";
      c.witness.push_back(e);
      return c;
    }
    if (!dsu.unite(g.tail(2 * e), g.head(2 * e))) {
      c.detail = "cycle through edge " + std::to_string(g.tail(2 * e)) + "-" +
                 std::to_string(g.head(2 * e));
      c.witness.push_back(e);
      return c;
    }
  }
  c.pass = true;
  return c;
}

std::vector<Edge> co_tree_of(const PlaneGraph& g, const DualMap& dm,
                             const std::vector<Edge>& tree_edges) {
  Certificate pre = is_spanning_tree(g, tree_edges);
  require(pre.pass, errc::bad_parameters, "co_tree_of needs a spanning tree: " + pre.detail);
  std::vector<char> in_tree(g.edge_count(), 0);
  for (Edge e : tree_edges) in_tree[e] = 1;
  std::vector<Edge> co;
  for (Edge e = 0; e < g.edge_count(); ++e)
    if (!in_tree[e]) co.push_back(e);
  Certificate post = is_spanning_tree(dm.dual, co);
  require(post.pass, errc::postcondition_failure, "co-tree is not a dual spanning tree");
  return co;
}

Certificate check_cut_cycle(const PlaneGraph& g, const DualMap& dm,
                            const std::vector<Edge>& edge_set) {
  Certificate c{CertKind::co_tree_duality, false, "", {}};
  std::vector<char> in_set(g.edge_count(), 0);
  for (Edge e : edge_set) in_set[e] = 1;

  // is the set a single cycle of g?
  bool is_cycle = !edge_set.empty();
  {
    std::vector<int> deg(g.n, 0);
    Dsu dsu(g.n);
    int closures = 0;
    for (Edge e : edge_set) {
      ++deg[g.tail(2 * e)];
      ++deg[g.head(2 * e)];
      if (!dsu.unite(g.tail(2 * e), g.head(2 * e))) ++closures;
    }
    for (Vertex v = 0; v < g.n; ++v)
      if (deg[v] != 0 && deg[v] != 2) is_cycle = false;
    if (closures != 1) is_cycle = false;
  }

  // is the dual set a minimal cut of g*?
  bool is_min_cut;
  {
    const PlaneGraph& du = dm.dual;
    Dsu dsu(du.n);
    for (Edge e = 0; e < du.edge_count(); ++e)
      if (!in_set[e]) dsu.unite(du.tail(2 * e), du.head(2 * e));
    std::set<int> comps;
    for (Vertex v = 0; v < du.n; ++v) comps.insert(dsu.find(v));
    is_min_cut = comps.size() == 2 && !edge_set.empty();
    if (is_min_cut)  // minimality: every set edge must join the two sides
      for (Edge e : edge_set)
        if (dsu.find(du.tail(2 * e)) == dsu.find(du.head(2 * e))) is_min_cut = false;
  }

  c.pass = is_cycle == is_min_cut;
  if (!c.pass) {
    c.detail = std::string("cycle=") + (is_cycle ? "yes" : "no") + " but minimal-cut=" +
               (is_min_cut ? "yes" : "no");
    c.witness = edge_set;
  } else {
    c.detail = is_cycle ? "cycle and minimal dual cut" : "neither cycle nor minimal dual cut";
  }
  return c;
}

Certificate check_root_degrees(const Suspension& s, const SchnyderWood& minimal_wood,
                               const TreePair& pair) {
  const PlaneGraph& g = s.g;
  Certificate c{CertKind::root_degrees, true, "", {}};
  auto fail = [&](const std::string& msg, int witness) {
    c.pass = false;
    c.detail += (c.detail.empty() ? "" : "; ") + msg;
    c.witness.push_back(witness);
  };

  std::vector<int> deg(g.n, 0);
  for (Edge e = 0; e < g.edge_count(); ++e)
    if (pair.in_tree[e]) {
      ++deg[g.tail(2 * e)];
      ++deg[g.head(2 * e)];
    }
  if (deg[s.roots[0]] != 1) fail("r1 is not a leaf", s.roots[0]);
  if (deg[s.roots[2]] != 2) fail("deg(r3) != 2", s.roots[2]);
  if (deg[s.roots[1]] > 3) fail("deg(r2) > 3", s.roots[1]);

  Dart green_out = outgoing_dart(s, minimal_wood, s.roots[0], 1);
  require(green_out >= 0, errc::internal_error, "r1 has no outgoing green edge");
  for (Dart d : g.face_darts(g.outer_face)) {
    Edge e = edge_of(d);
    bool expect_in_tree = e != edge_of(green_out);
    if (pair.in_tree[e] != char(expect_in_tree))
      fail(expect_in_tree ? "outer edge missing from the tree"
                          : "outgoing green edge of r1 is in the tree",
           e);
  }

  int outer_co_degree = 0;
  for (Edge e = 0; e < g.edge_count(); ++e)
    if (pair.in_co_tree[e] &&
        (g.left_face(2 * e) == g.outer_face || g.left_face(2 * e + 1) == g.outer_face))
      ++outer_co_degree;
  if (outer_co_degree != 1) fail("outer-face dual vertex is not a co-tree leaf", g.outer_face);
  return c;
}

EdgeListGraph edge_list_of(const PlaneGraph& g) {
  EdgeListGraph out;
  out.n = g.n;
  for (Edge e = 0; e < g.edge_count(); ++e) out.edges.push_back({g.tail(2 * e), g.head(2 * e)});
  return out;
}

long long count_spanning_trees(const EdgeListGraph& g) {
  // matrix-tree with Bareiss fraction-free elimination over __int128
  const int n = g.n;
  require(n >= 1, errc::bad_parameters, "empty graph");
  if (n == 1) return 1;
  std::vector<std::vector<__int128>> a(n - 1, std::vector<__int128>(n - 1, 0));
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    if (u < n - 1) ++a[u][u];
    if (v < n - 1) ++a[v][v];
    if (u < n - 1 && v < n - 1) {
      --a[u][v];
      --a[v][u];
    }
  }
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n - 1; ++r)
        if (a[r][k] != 0) p = r;
      if (p == -1) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n - 1; ++i)
      for (int jj = k + 1; jj < n - 1; ++jj)
        a[i][jj] = (a[i][jj] * a[k][k] - a[i][k] * a[k][jj]) / prev;
    prev = a[k][k];
  }
  __int128 det = sign * a[n - 2][n - 2];
  require(det >= 0 && det <= __int128(4e18), errc::internal_error, "tree count overflow");
  return (long long)(det);
}

long long enumerate_spanning_trees(const EdgeListGraph& g, long long limit,
                                   const std::function<void(const std::vector<char>&)>& leaf) {
  const int n = g.n;
  const int m = int(g.edges.size());
  std::vector<char> chosen(m, 0);

  // union-find with rollback
  std::vector<int> parent(n), rank_(n, 0);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::vector<int> trail;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    trail.push_back(b);
    return true;
  };
  auto rollback_to = [&](size_t mark) {
    while (trail.size() > mark) {
      int b = trail.back();
      trail.pop_back();
      int a = parent[b];
      parent[b] = b;
      // rank stays inflated, which keeps the structure valid
      (void)a;
    }
  };

  // can u and v still be connected using undecided edges (> idx) on top of
  // the current contraction? probe with temporary unions, then roll back
  auto reconnectable = [&](int idx, int u, int v) {
    size_t snapshot = trail.size();
    for (int e = idx + 1; e < m; ++e) unite(g.edges[e].first, g.edges[e].second);
    bool ok = find(u) == find(v);
    rollback_to(snapshot);
    return ok;
  };

  long long count = 0;
  // explicit stack; every frame rolls back exactly its own union
  struct Frame {
    int idx, taken, stage;
    size_t entry = 0;
  };
  std::vector<Frame> stack{{0, 0, 0, 0}};
  while (!stack.empty()) {
    const int idx = stack.back().idx, taken = stack.back().taken;
    const int stage = stack.back().stage;
    if (stage == 0) {
      stack.back().entry = trail.size();
      if (idx == m) {
        if (taken == n - 1) {
          require(++count <= limit, errc::too_many_trees,
                  "spanning tree count exceeds the enumeration limit");
          leaf(chosen);
        }
        stack.pop_back();
        continue;
      }
      if (taken + (m - idx) < n - 1) {  // cannot finish
        stack.pop_back();
        continue;
      }
      auto [u, v] = g.edges[idx];
      if (u == v || find(u) == find(v)) {
        stack.back().stage = 2;  // forced exclusion
        chosen[idx] = 0;
        stack.push_back({idx + 1, taken, 0, 0});
      } else {
        stack.back().stage = 1;
        unite(u, v);
        chosen[idx] = 1;
        stack.push_back({idx + 1, taken + 1, 0, 0});
      }
      continue;
    }
    if (stage == 1) {  // include subtree done, try exclusion
      rollback_to(stack.back().entry);
      stack.back().stage = 2;
      chosen[idx] = 0;
      auto [u, v] = g.edges[idx];
      if (reconnectable(idx, u, v)) {
        stack.push_back({idx + 1, taken, 0, 0});
        continue;
      }
    }
    rollback_to(stack.back().entry);
    stack.pop_back();
  }
  return count;
}

OracleResult oracle_best_pair(const PlaneGraph& g, long long max_trees) {
  EdgeListGraph el = edge_list_of(g);
  long long tau = count_spanning_trees(el);
  require(tau <= max_trees, errc::too_many_trees,
          "instance has " + std::to_string(tau) + " spanning trees, over the limit");

  OracleResult out;
  out.best = g.n + g.face_count();
  std::vector<int> vdeg(g.n), fdeg(g.face_count());
  long long seen = enumerate_spanning_trees(el, max_trees, [&](const std::vector<char>& chosen) {
    std::fill(vdeg.begin(), vdeg.end(), 0);
    std::fill(fdeg.begin(), fdeg.end(), 0);
    for (Edge e = 0; e < g.edge_count(); ++e)
      if (chosen[e]) {
        ++vdeg[g.tail(2 * e)];
        ++vdeg[g.head(2 * e)];
      } else {
        ++fdeg[g.left_face(2 * e)];
        ++fdeg[g.left_face(2 * e + 1)];
      }
    int score = std::max(*std::max_element(vdeg.begin(), vdeg.end()),
                         *std::max_element(fdeg.begin(), fdeg.end()));
    if (score < out.best) {
      out.best = score;
      out.witness_tree.clear();
      for (Edge e = 0; e < g.edge_count(); ++e)
        if (chosen[e]) out.witness_tree.push_back(e);
    }
  });
  require(seen == tau, errc::internal_error,
          "enumeration found " + std::to_string(seen) + " trees, matrix-tree says " +
              std::to_string(tau));
  out.tree_count = tau;
  out.has_33_pair = out.best <= 3;
  return out;
}

int oracle_min_max_degree(const EdgeListGraph& g, long long max_trees) {
  long long tau = count_spanning_trees(g);
  require(tau <= max_trees, errc::too_many_trees,
          "instance has " + std::to_string(tau) + " spanning trees, over the limit");
  int best = g.n;
  std::vector<int> deg(g.n);
  long long seen = enumerate_spanning_trees(g, max_trees, [&](const std::vector<char>& chosen) {
    std::fill(deg.begin(), deg.end(), 0);
    for (int e = 0; e < int(chosen.size()); ++e)
      if (chosen[e]) {
        ++deg[g.edges[e].first];
        ++deg[g.edges[e].second];
      }
    best = std::min(best, *std::max_element(deg.begin(), deg.end()));
  });
  require(seen == tau, errc::internal_error, "enumeration disagrees with matrix-tree");
  return best;
}

}  // namespace cotree4
