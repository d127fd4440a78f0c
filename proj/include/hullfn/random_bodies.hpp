#pragma once

#include <cstdint>
#include <random>

#include "hullfn/geometry.hpp"

namespace hullfn {

/// Seeded generator whose output depends only on the seed: the engine is
/// fully specified by the standard and no std:: distributions are used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for item `index` of a run seeded with `seed`.
  static Rng derive(std::uint64_t seed, std::uint64_t index);

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);
  Vec2 on_circle();
  Vec3 on_sphere();

 private:
  std::mt19937_64 engine_;
};

/// Convex m-gon: m points on the unit circle with angular gaps of at least
/// 0.15 * (2 pi / m), mapped by a random well-conditioned linear map. The
/// origin is interior with margin.
Polygon random_polygon(Rng& rng, int m);

/// Hull of n points uniform on the unit sphere, redrawn until every facet
/// offset is at least 0.1 (origin well inside).
Polytope3 random_polytope(Rng& rng, int n);

}  // namespace hullfn
