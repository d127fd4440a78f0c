#include "hullfn/directions.hpp"

#include <cmath>
#include <numbers>

namespace hullfn {

std::vector<Vec2> circle_directions(int n) {
  std::vector<Vec2> dirs;
  dirs.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    dirs.push_back({std::cos(a), std::sin(a)});
  }
  return dirs;
}

std::vector<Vec3> fibonacci_sphere(int n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * k;
    dirs.push_back(normalized(Vec3{r * std::cos(phi), r * std::sin(phi), z}));
  }
  return dirs;
}

}  // namespace hullfn
