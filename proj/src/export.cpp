#include "cotree4/export.hpp"

#include <cmath>
#include <ostream>
#include <vector>

namespace cotree4 {

void write_dot(std::ostream& out, const Suspension& s, const SchnyderWood& w,
               const TreePair* pair) {
  const PlaneGraph& g = s.g;
  out << "digraph wood {\n  node [shape=circle];\n";
  for (int i = 0; i < 3; ++i)
    out << "  " << s.roots[i] << " [label=\"r" << i + 1 << "\", style=filled];\n";
  for (Dart d = 0; d < g.dart_count(); ++d) {
    int c = w.dart_color[d];
    if (c < 0) continue;
    out << "  " << g.tail(d) << " -> " << g.head(d) << " [color=" << color_name(c);
    if (pair && pair->in_tree[edge_of(d)]) out << ", penwidth=2.5";
    out << "];\n";
  }
  out << "}\n";
}

namespace {

struct Layout {
  std::vector<double> x, y;
};

// barycentric relaxation with the outer boundary pinned on a regular polygon
Layout tutte_layout(const PlaneGraph& g) {
  Layout l;
  l.x.assign(g.n, 0.0);
  l.y.assign(g.n, 0.0);
  auto outer = g.outer_boundary();
  std::vector<char> fixed(g.n, 0);
  const double pi = 3.14159265358979323846;
  for (size_t i = 0; i < outer.size(); ++i) {
    // clockwise boundary walk; clockwise placement on screen (y grows down)
    double a = 2 * pi * double(i) / double(outer.size());
    l.x[outer[i]] = std::cos(a);
    l.y[outer[i]] = std::sin(a);
    fixed[outer[i]] = 1;
  }
  for (int round = 0; round < 400 * g.n; ++round) {
    double moved = 0;
    for (Vertex v = 0; v < g.n; ++v) {
      if (fixed[v]) continue;
      double sx = 0, sy = 0;
      for (Dart d : g.rotation[v]) {
        sx += l.x[g.head(d)];
        sy += l.y[g.head(d)];
      }
      sx /= g.degree(v);
      sy /= g.degree(v);
      moved = std::max({moved, std::abs(sx - l.x[v]), std::abs(sy - l.y[v])});
      l.x[v] = sx;
      l.y[v] = sy;
    }
    if (moved < 1e-9) break;
  }
  return l;
}

}  // namespace

void write_svg(std::ostream& out, const Suspension& s, const SchnyderWood* w,
               const TreePair* pair) {
  const PlaneGraph& g = s.g;
  Layout l = tutte_layout(g);
  const double scale = 360, cx = 400, cy = 400;
  auto px = [&](Vertex v) { return cx + scale * l.x[v]; };
  auto py = [&](Vertex v) { return cy + scale * l.y[v]; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  for (Edge e = 0; e < g.edge_count(); ++e) {
    Vertex a = g.tail(2 * e), b = g.head(2 * e);
    std::string color = "#888888";
    double width = 1.2;
    if (w) {
      int c = w->dart_color[2 * e] >= 0 ? w->dart_color[2 * e] : w->dart_color[2 * e + 1];
      color = c == 0 ? "#cc2222" : c == 1 ? "#118833" : "#2244cc";
    }
    if (pair && pair->in_tree[e]) width = 4.0;
    out << "<line x1=\"" << px(a) << "\" y1=\"" << py(a) << "\" x2=\"" << px(b) << "\" y2=\""
        << py(b) << "\" stroke=\"" << color << "\" stroke-width=\"" << width << "\"/>\n";
  }

  if (pair) {
    // dual overlay: face centroids, co-tree edges dashed
    std::vector<double> fx(g.face_count(), 0), fy(g.face_count(), 0);
    for (FaceId f = 0; f < g.face_count(); ++f) {
      for (Dart d : g.face_darts(f)) {
        fx[f] += px(g.tail(d));
        fy[f] += py(g.tail(d));
      }
      fx[f] /= double(g.face_darts(f).size());
      fy[f] /= double(g.face_darts(f).size());
    }
    fx[g.outer_face] = cx;
    fy[g.outer_face] = cy - scale - 25;
    for (Edge e = 0; e < g.edge_count(); ++e) {
      if (!pair->in_co_tree[e]) continue;
      FaceId fa = g.left_face(2 * e), fb = g.left_face(2 * e + 1);
      out << "<line x1=\"" << fx[fa] << "\" y1=\"" << fy[fa] << "\" x2=\"" << fx[fb] << "\" y2=\""
          << fy[fb] << "\" stroke=\"#aa22aa\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
    }
    for (FaceId f = 0; f < g.face_count(); ++f)
      out << "<rect x=\"" << fx[f] - 3 << "\" y=\"" << fy[f] - 3
          << "\" width=\"6\" height=\"6\" fill=\"#aa22aa\"/>\n";
  }

  for (Vertex v = 0; v < g.n; ++v) {
    bool is_root = v == s.roots[0] || v == s.roots[1] || v == s.roots[2];
    out << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"" << (is_root ? 7 : 4)
        << "\" fill=\"" << (is_root ? "black" : "#444444") << "\"/>\n";
    out << "<text x=\"" << px(v) + 6 << "\" y=\"" << py(v) - 6 << "\" font-size=\"11\">" << v
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace cotree4
