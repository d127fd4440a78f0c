#include "hullfn/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace hullfn {

using nlohmann::json;

BodyFile parse_body_file(std::string_view text, bool strict) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GeometryError(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GeometryError(ErrorCode::SchemaError, "top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw GeometryError(ErrorCode::SchemaError, "\"dim\" must be an integer");
  }
  const int dim = doc["dim"].get<int>();
  if (dim != 2 && dim != 3) throw GeometryError(ErrorCode::SchemaError, "\"dim\" must be 2 or 3");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw GeometryError(ErrorCode::SchemaError, "\"vertices\" must be an array");
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw GeometryError(ErrorCode::SchemaError, "\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  std::vector<std::vector<double>> pts;
  for (const json& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(dim)) {
      throw GeometryError(ErrorCode::SchemaError, "each vertex must have exactly dim coordinates");
    }
    std::vector<double> c;
    for (const json& x : v) {
      if (!x.is_number()) throw GeometryError(ErrorCode::SchemaError, "coordinates must be numbers");
      c.push_back(x.get<double>());
    }
    pts.push_back(std::move(c));
  }
  Body body = hull(pts);
  if (strict) {
    const auto verts = body.vertex_coordinates();
    for (const auto& p : pts) {
      if (std::find(verts.begin(), verts.end(), p) == verts.end()) {
        throw GeometryError(ErrorCode::NonConvexInput, "input point is not an extreme point");
      }
    }
    if (verts.size() != pts.size()) {
      throw GeometryError(ErrorCode::NonConvexInput, "duplicate input points");
    }
  }
  return {std::move(body), std::move(name)};
}

Body parse_body(std::string_view text, bool strict) { return parse_body_file(text, strict).body; }

std::string serialize_body(const Body& body, std::string_view name) {
  json doc;
  doc["dim"] = body.dim();
  doc["vertices"] = body.vertex_coordinates();
  if (!name.empty()) doc["name"] = std::string(name);
  return doc.dump() + "\n";
}

std::string to_off(const Body& body) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  const auto verts = body.vertex_coordinates();
  if (body.is_polygon()) {
    out << "OFF\n" << verts.size() << " 1 0\n";
    for (const auto& v : verts) out << v[0] << ' ' << v[1] << " 0\n";
    out << verts.size();
    for (std::size_t i = 0; i < verts.size(); ++i) out << ' ' << i;
    out << '\n';
  } else {
    const Polytope3& p = body.polytope();
    out << "OFF\n" << verts.size() << ' ' << p.facets().size() << ' ' << p.edge_count() << '\n';
    for (const auto& v : verts) out << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
    for (const Facet& f : p.facets()) {
      out << f.loop.size();
      for (std::size_t i : f.loop) out << ' ' << i;
      out << '\n';
    }
  }
  return out.str();
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string svg_points(const std::vector<Vec2>& pts) {
  std::string s;
  for (const Vec2& p : pts) {
    if (!s.empty()) s += ' ';
    s += format_number(p.x) + ',' + format_number(-p.y);
  }
  return s;
}

}  // namespace

std::string to_svg(const SvgScene& scene) {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  auto include = [&](const std::vector<Vec2>& pts) {
    for (const Vec2& p : pts) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, -p.y);
      hi_y = std::max(hi_y, -p.y);
    }
  };
  if (scene.base) include(scene.base->vertices());
  for (const Polygon& c : scene.level_curves) include(c.vertices());
  for (const auto& e : scene.extensions) include(e);
  if (!(lo_x <= hi_x)) {
    lo_x = lo_y = -1.0;
    hi_x = hi_y = 1.0;
  }
  const double w = hi_x - lo_x;
  const double h = hi_y - lo_y;
  const double margin = 0.05 * std::max(w, h);
  const double stroke = 0.004 * std::max(w, h);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(lo_x - margin) << ' '
      << format_number(lo_y - margin) << ' ' << format_number(w + 2 * margin) << ' '
      << format_number(h + 2 * margin) << "\">\n";
  if (scene.base) {
    out << "  <polygon points=\"" << svg_points(scene.base->vertices())
        << "\" fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"" << format_number(stroke) << "\"/>\n";
  }
  for (const Polygon& c : scene.level_curves) {
    out << "  <polygon points=\"" << svg_points(c.vertices())
        << "\" fill=\"none\" stroke=\"#d94801\" stroke-width=\"" << format_number(stroke) << "\"/>\n";
  }
  for (const auto& e : scene.extensions) {
    out << "  <polygon points=\"" << svg_points(e) << "\" fill=\"none\" stroke=\"#238b45\" stroke-width=\""
        << format_number(stroke) << "\" stroke-dasharray=\"" << format_number(4 * stroke) << "\"/>\n";
    for (const Vec2& p : e) {
      out << "  <circle cx=\"" << format_number(p.x) << "\" cy=\"" << format_number(-p.y) << "\" r=\""
          << format_number(2.5 * stroke) << "\" fill=\"#238b45\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace hullfn
