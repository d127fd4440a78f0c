#pragma once

#include "hullfn/geometry.hpp"

namespace hullfn {

/// The square [-half, half]^2.
Polygon axis_square(double half = 1.0);
/// Regular m-gon with vertex k at angle phase + 2 pi k / m.
Polygon regular_polygon(int m, double circumradius = 1.0, double phase = 0.0);
/// Polygonal Reuleaux triangle of unit circumradius with `samples` vertices
/// (a multiple of 3), all on the three circular arcs.
Polygon reuleaux_polygon(int samples);

/// The cube [-half, half]^3.
Polytope3 axis_cube(double half = 1.0);
/// Regular tetrahedron (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1).
Polytope3 regular_tetrahedron();

}  // namespace hullfn
