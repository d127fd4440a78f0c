#include "hullfn/shapes.hpp"

#include <numbers>
#include <vector>

namespace hullfn {

Polygon axis_square(double half) {
  return Polygon({{-half, -half}, {half, -half}, {half, half}, {-half, half}});
}

Polygon regular_polygon(int m, double circumradius, double phase) {
  if (m < 3) throw GeometryError(ErrorCode::InvalidArgument, "regular polygon needs m >= 3");
  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double a = phase + 2.0 * std::numbers::pi * k / m;
    v.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  return Polygon(std::move(v));
}

Polygon reuleaux_polygon(int samples) {
  if (samples < 6 || samples % 3 != 0) {
    throw GeometryError(ErrorCode::InvalidArgument, "samples must be a multiple of 3, at least 6");
  }
  const int per_arc = samples / 3;
  const double width = std::sqrt(3.0);
  std::vector<Vec2> v;
  for (int k = 0; k < 3; ++k) {
    // Arc centred at corner k runs from corner k + 1 to corner k + 2.
    const double theta = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 3.0;
    const Vec2 centre{std::cos(theta), std::sin(theta)};
    for (int s = 0; s < per_arc; ++s) {
      const double a = theta + std::numbers::pi + (std::numbers::pi / 6.0) * (2.0 * s / per_arc - 1.0);
      v.push_back(centre + width * Vec2{std::cos(a), std::sin(a)});
    }
  }
  return convex_hull(v);
}

Polytope3 axis_cube(double half) {
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i) {
    pts.push_back({(i & 1) ? half : -half, (i & 2) ? half : -half, (i & 4) ? half : -half});
  }
  return convex_hull(pts);
}

Polytope3 regular_tetrahedron() {
  const std::vector<Vec3> pts{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  return convex_hull(pts);
}

}  // namespace hullfn
