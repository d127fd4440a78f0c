#include "hullfn/random_bodies.hpp"

#include <algorithm>
#include <numbers>
#include <vector>

namespace hullfn {

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  // SplitMix64 finaliser over (seed, index).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Vec2 Rng::on_circle() {
  const double a = uniform(0.0, 2.0 * std::numbers::pi);
  return {std::cos(a), std::sin(a)};
}

Vec3 Rng::on_sphere() {
  for (;;) {
    const Vec3 p{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    const double r2 = dot(p, p);
    if (r2 <= 1.0 && r2 > 1e-4) return p / std::sqrt(r2);
  }
}

Polygon random_polygon(Rng& rng, int m) {
  if (m < 3) throw GeometryError(ErrorCode::InvalidArgument, "random polygon needs m >= 3");
  const double min_gap = 0.15 * 2.0 * std::numbers::pi / m;
  for (;;) {
    std::vector<double> angles;
    for (int i = 0; i < m; ++i) angles.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
    std::sort(angles.begin(), angles.end());
    bool ok = angles.front() + 2.0 * std::numbers::pi - angles.back() >= min_gap;
    for (int i = 1; i < m && ok; ++i) ok = angles[i] - angles[i - 1] >= min_gap;
    if (!ok) continue;
    // Linear map with singular values in a bounded range.
    const double a = rng.uniform(0.6, 1.4);
    const double d = rng.uniform(0.6, 1.4);
    const double b = rng.uniform(-0.4, 0.4);
    const double c = rng.uniform(-0.4, 0.4);
    if (a * d - b * c < 0.3) continue;
    const Vec2 shift{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
    std::vector<Vec2> pts;
    for (double t : angles) {
      const Vec2 p{std::cos(t), std::sin(t)};
      pts.push_back(Vec2{a * p.x + b * p.y, c * p.x + d * p.y} + shift);
    }
    Polygon poly = convex_hull(pts);
    if (static_cast<int>(poly.size()) != m) continue;
    bool margin = true;
    for (std::size_t i = 0; i < poly.size(); ++i) margin = margin && poly.offset(i) > 0.1;
    if (margin) return poly;
  }
}

Polytope3 random_polytope(Rng& rng, int n) {
  if (n < 4) throw GeometryError(ErrorCode::InvalidArgument, "random polytope needs n >= 4");
  for (;;) {
    std::vector<Vec3> pts;
    for (int i = 0; i < n; ++i) pts.push_back(rng.on_sphere());
    try {
      Polytope3 p = convex_hull(pts);
      bool margin = p.vertices().size() == static_cast<std::size_t>(n);
      for (const Facet& f : p.facets()) margin = margin && f.offset >= 0.1;
      if (margin) return p;
    } catch (const GeometryError&) {
      // Near-degenerate draw; redraw.
    }
  }
}

}  // namespace hullfn
