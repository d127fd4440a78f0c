#pragma once

#include <vector>

#include "hullfn/geometry.hpp"

namespace hullfn {

/// n unit vectors at angles 2 pi k / n.
std::vector<Vec2> circle_directions(int n);
/// n near-uniform unit vectors on the sphere (Fibonacci lattice).
std::vector<Vec3> fibonacci_sphere(int n);

}  // namespace hullfn
