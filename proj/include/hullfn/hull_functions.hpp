#pragma once

#include <span>
#include <vector>

#include "hullfn/geometry.hpp"

namespace hullfn {

struct HullFunctionValue {
  double value = 0.0;
  /// Facets whose hyperplane strictly separates t from the body.
  std::vector<std::size_t> active_facets;
};

/// G_K(t) = vol conv(K u (K + t)), computed from the hull of both vertex sets.
double chf(const Polygon& k, const Vec2& t);
double chf(const Polytope3& k, const Vec3& t);
double chf(const Body& k, std::span<const double> t);

/// G_{K,lambda}(t) = vol conv(K u (lambda K + t)) for 0 <= lambda < 1.
/// For lambda > 0 the origin must be interior to K.
double homothetic_chf(const Polygon& k, double lambda, const Vec2& t);
double homothetic_chf(const Polytope3& k, double lambda, const Vec3& t);
double homothetic_chf(const Body& k, double lambda, std::span<const double> t);

/// G_{0,P}(t) in closed form: vol(P) + (1/n) sum over facets F seen from t of
/// area(F) * (<n_F, t> - b_F).
HullFunctionValue g0_closed_form(const Polygon& p, const Vec2& t);
HullFunctionValue g0_closed_form(const Polytope3& p, const Vec3& t);
HullFunctionValue g0_closed_form(const Body& p, std::span<const double> t);

/// (G_{K,lambda}(t) - lambda^n vol K) / (1 - lambda^n), which equals
/// G_{0,K}(t / (1 - lambda)).
double lambda_reduce(const Polygon& k, double lambda, const Vec2& t);
double lambda_reduce(const Polytope3& k, double lambda, const Vec3& t);
double lambda_reduce(const Body& k, double lambda, std::span<const double> t);

}  // namespace hullfn
