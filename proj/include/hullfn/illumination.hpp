#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hullfn/geometry.hpp"

namespace hullfn {

/// Homothety defects below this count as exact homothety.
inline constexpr double kHomothetyTolerance = 1e-6;

struct HomothetyReport {
  bool is_homothet = false;
  /// mu in h_Q(u) ~ mu h_P(u) + <c, u>.
  double ratio = 0.0;
  std::vector<double> translation;
  /// Fixed point x0 of x -> mu x + c; absent for a pure translation.
  std::optional<std::vector<double>> center;
  /// max_u |h_Q(u) - mu h_P(u) - <c, u>| / diam(Q).
  double defect = 0.0;
};

/// Level set {x : G_{0,P}(x) <= level}; its vertices lie on level exactly.
template <class Shape>
struct LevelSet {
  Shape body;
  double level = 0.0;
  double delta = 0.0;
  /// Candidate points dropped as duplicates of another candidate, which
  /// happens where three or more facet hyperplanes meet on the level set.
  std::size_t coincident_candidates = 0;
};

/// G_{0,P} restricted to the line origin + s * direction: a convex piecewise
/// linear function of s with breakpoints where the line crosses facet
/// hyperplanes.
class LineRestriction {
 public:
  template <class K, class V>
  LineRestriction(const K& p, const V& origin, const V& direction) : base_(volume(p)) {
    for (std::size_t i = 0; i < facet_count(p); ++i) {
      terms_.push_back({facet_measure(p, i) / K::kDim,
                        dot(facet_normal(p, i), origin) - facet_offset(p, i),
                        dot(facet_normal(p, i), direction)});
    }
  }

  double value(double s) const;
  /// Solutions of value(s) = level in increasing order (zero, one or two).
  std::vector<double> roots(double level) const;

 private:
  struct Term {
    double weight;
    double intercept;
    double slope;
  };
  double base_;
  std::vector<Term> terms_;
};

/// Unique tau > 0 with G_{0,P}(tau u) = level. Requires o in int P.
double ray_level_solve(const Polygon& p, const Vec2& u, double level);
double ray_level_solve(const Polytope3& p, const Vec3& u, double level);

/// P^delta from the level-set solutions on every sideline.
LevelSet<Polygon> illumination_body(const Polygon& p, double delta);
/// P^delta from the level-set solutions on every line H_i n H_j of two facet
/// planes.
LevelSet<Polytope3> illumination_body(const Polytope3& p, double delta);

/// Least-squares (mu, c) over a fixed direction set (720 angles in the plane,
/// 1024 Fibonacci points in space), sup-norm defect.
HomothetyReport homothety_fit(const Polygon& p, const Polygon& q);
HomothetyReport homothety_fit(const Polytope3& p, const Polytope3& q);
HomothetyReport homothety_fit(const Body& p, const Body& q);

/// Same fit for arbitrary support functions.
HomothetyReport homothety_fit_support(std::span<const Vec2> dirs,
                                      const std::function<double(const Vec2&)>& h_p,
                                      const std::function<double(const Vec2&)>& h_q,
                                      double diam_q);
HomothetyReport homothety_fit_support(std::span<const Vec3> dirs,
                                      const std::function<double(const Vec3&)>& h_p,
                                      const std::function<double(const Vec3&)>& h_q,
                                      double diam_q);

}  // namespace hullfn
