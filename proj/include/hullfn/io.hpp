#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hullfn/geometry.hpp"

namespace hullfn {

struct BodyFile {
  Body body;
  std::string name;
};

/// Parses {"dim": 2|3, "vertices": [[...], ...], "name": "..."?} and hulls
/// the vertices. In strict mode every input point must be a hull vertex.
/// Throws SchemaError, DegenerateInput or NonConvexInput.
BodyFile parse_body_file(std::string_view json_text, bool strict = false);
Body parse_body(std::string_view json_text, bool strict = false);

/// Canonical JSON with shortest round-trip number formatting.
std::string serialize_body(const Body& body, std::string_view name = {});

/// ASCII OFF; a polygon becomes a single face in the z = 0 plane.
std::string to_off(const Body& body);

struct SvgScene {
  /// Drawn filled.
  std::optional<Polygon> base;
  /// Drawn as stroked outlines.
  std::vector<Polygon> level_curves;
  /// Closed polylines, possibly self-intersecting; their vertices are marked.
  std::vector<std::vector<Vec2>> extensions;
};

/// viewBox fitted to everything drawn plus a 5% margin; y points up.
std::string to_svg(const SvgScene& scene);

/// Twelve significant digits.
std::string format_number(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace hullfn
