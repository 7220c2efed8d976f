#include "cotree4/io.hpp"

#include <fstream>
#include <sstream>

namespace cotree4 {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& t, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(t, &pos);
    require(pos == t.size(), errc::parse_error, std::string("bad ") + what + ": " + t);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    raise(errc::parse_error, std::string("bad ") + what + ": " + t);
  }
}

int parse_color(const std::string& t) {
  for (int c = 0; c < 3; ++c)
    if (t == color_name(c)) return c;
  if (t == "1" || t == "2" || t == "3") return parse_int(t, "color") - 1;
  raise(errc::parse_error, "bad color: " + t);
}

}  // namespace

GraphInput read_graph(std::istream& in) {
  int n = -1;
  std::vector<Vertex> outer;
  std::optional<std::array<Vertex, 3>> roots;
  std::vector<std::vector<Vertex>> nbrs;
  std::vector<char> seen;

  std::string line;
  while (std::getline(in, line)) {
    auto tok = tokenize(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "planar") {
      require(tok.size() == 2 && n < 0, errc::parse_error, "bad planar line");
      n = parse_int(tok[1], "vertex count");
      require(n >= 1, errc::parse_error, "vertex count must be positive");
      nbrs.assign(n, {});
      seen.assign(n, 0);
    } else if (tok[0] == "outer") {
      require(n >= 0, errc::parse_error, "outer before planar");
      for (size_t i = 1; i < tok.size(); ++i) outer.push_back(parse_int(tok[i], "outer vertex"));
    } else if (tok[0] == "roots") {
      require(tok.size() == 4, errc::parse_error, "roots line needs three vertices");
      roots = {{parse_int(tok[1], "root"), parse_int(tok[2], "root"), parse_int(tok[3], "root")}};
    } else {
      require(n >= 0, errc::parse_error, "vertex line before planar");
      require(tok[0].back() == ':', errc::parse_error, "expected '<v>:' line, got: " + line);
      int v = parse_int(tok[0].substr(0, tok[0].size() - 1), "vertex id");
      require(v >= 0 && v < n, errc::parse_error, "vertex id out of range");
      require(!seen[v], errc::parse_error, "duplicate vertex line " + std::to_string(v));
      seen[v] = 1;
      for (size_t i = 1; i < tok.size(); ++i) nbrs[v].push_back(parse_int(tok[i], "neighbor"));
    }
  }
  require(n >= 0, errc::parse_error, "missing planar line");
  require(!outer.empty(), errc::parse_error, "missing outer line");
  for (int v = 0; v < n; ++v)
    require(seen[v], errc::parse_error, "missing neighbor line for vertex " + std::to_string(v));

  GraphInput gi;
  gi.g = build_plane_graph(n, nbrs, outer);
  gi.roots = roots;
  return gi;
}

GraphInput read_graph_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const PlaneGraph& g,
                 const std::optional<std::array<Vertex, 3>>& roots) {
  out << "planar " << g.n << "\n";
  out << "outer";
  for (Vertex v : g.outer_boundary()) out << ' ' << v;
  out << "\n";
  for (Vertex v = 0; v < g.n; ++v) {
    out << v << ':';
    for (Dart d : g.rotation[v]) out << ' ' << g.head(d);
    out << "\n";
  }
  if (roots) out << "roots " << (*roots)[0] << ' ' << (*roots)[1] << ' ' << (*roots)[2] << "\n";
}

void write_wood(std::ostream& out, const Suspension& s, const SchnyderWood& w) {
  const PlaneGraph& g = s.g;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    Vertex u = g.tail(2 * e), v = g.head(2 * e);
    out << u << ' ' << v << ' ';
    int cu = w.dart_color[2 * e + 1];  // direction toward u
    int cv = w.dart_color[2 * e];      // direction toward v
    if (cu >= 0 && cv >= 0)
      out << "bi " << color_name(cu) << ' ' << color_name(cv) << "\n";
    else if (cv >= 0)
      out << "uni " << v << ' ' << color_name(cv) << "\n";
    else
      out << "uni " << u << ' ' << color_name(cu) << "\n";
  }
}

SchnyderWood read_wood(std::istream& in, const Suspension& s) {
  const PlaneGraph& g = s.g;
  SchnyderWood w;
  w.dart_color.assign(g.dart_count(), -1);
  std::string line;
  while (std::getline(in, line)) {
    auto tok = tokenize(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    require(tok.size() >= 4, errc::parse_error, "bad wood line: " + line);
    Vertex u = parse_int(tok[0], "vertex"), v = parse_int(tok[1], "vertex");
    auto d = g.find_dart(u, v);
    require(d.has_value(), errc::parse_error,
            "no edge " + std::to_string(u) + "-" + std::to_string(v));
    if (tok[2] == "uni") {
      require(tok.size() == 5, errc::parse_error, "bad uni line: " + line);
      Vertex toward = parse_int(tok[3], "vertex");
      int c = parse_color(tok[4]);
      require(toward == u || toward == v, errc::parse_error, "uni target not an endpoint");
      w.dart_color[toward == v ? *d : twin(*d)] = c;
    } else if (tok[2] == "bi") {
      require(tok.size() == 5, errc::parse_error, "bad bi line: " + line);
      w.dart_color[twin(*d)] = parse_color(tok[3]);  // toward u
      w.dart_color[*d] = parse_color(tok[4]);        // toward v
    } else {
      raise(errc::parse_error, "bad wood label: " + tok[2]);
    }
  }
  return w;
}

SchnyderWood read_wood_file(const std::string& path, const Suspension& s) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open " + path);
  return read_wood(in, s);
}

}  // namespace cotree4
