#include "hullfn/hull_functions.hpp"

#include <algorithm>
#include <cmath>

namespace hullfn {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw GeometryError(ErrorCode::LambdaOutOfRange, "lambda must lie in [0, 1)");
  }
}

template <class K, class V>
double hull_volume_with(const K& k, double lambda, const V& t) {
  std::vector<V> pts(vertices_of(k).begin(), vertices_of(k).end());
  if (lambda == 0.0) {
    pts.push_back(t);
  } else {
    for (const V& v : vertices_of(k)) pts.push_back(lambda * v + t);
  }
  return volume(convex_hull(std::span<const V>(pts)));
}

template <class K, class V>
double chf_impl(const K& k, const V& t) {
  return hull_volume_with(k, 1.0, t);
}

template <class K, class V>
double homothetic_impl(const K& k, double lambda, const V& t) {
  check_lambda(lambda);
  if (lambda > 0.0 && !origin_interior(k)) {
    throw GeometryError(ErrorCode::OriginNotInterior, "homothetic hull function needs o in int K");
  }
  return hull_volume_with(k, lambda, t);
}

template <class K, class V>
HullFunctionValue g0_impl(const K& p, const V& t) {
  constexpr int n = K::kDim;
  const double slack = kEps * p.diameter();
  HullFunctionValue out;
  double excess = 0.0;
  for (std::size_t i = 0; i < facet_count(p); ++i) {
    const double h = dot(facet_normal(p, i), t) - facet_offset(p, i);
    // Continuous in t: facets with h <= 0 contribute nothing either way.
    if (h > 0.0) excess += facet_measure(p, i) * h;
    if (h > slack) out.active_facets.push_back(i);
  }
  out.value = volume(p) + excess / n;
  return out;
}

template <class K, class V>
double lambda_reduce_impl(const K& k, double lambda, const V& t) {
  const double ln = std::pow(lambda, K::kDim);
  return (homothetic_impl(k, lambda, t) - ln * volume(k)) / (1.0 - ln);
}

template <class F>
auto dispatch(const Body& k, std::span<const double> t, F&& f) {
  if (k.is_polygon()) return f(k.polygon(), to_vec2(t));
  return f(k.polytope(), to_vec3(t));
}

}  // namespace

double chf(const Polygon& k, const Vec2& t) { return chf_impl(k, t); }
double chf(const Polytope3& k, const Vec3& t) { return chf_impl(k, t); }
double chf(const Body& k, std::span<const double> t) {
  return dispatch(k, t, [](const auto& s, const auto& v) { return chf(s, v); });
}

double homothetic_chf(const Polygon& k, double lambda, const Vec2& t) {
  return homothetic_impl(k, lambda, t);
}
double homothetic_chf(const Polytope3& k, double lambda, const Vec3& t) {
  return homothetic_impl(k, lambda, t);
}
double homothetic_chf(const Body& k, double lambda, std::span<const double> t) {
  return dispatch(k, t, [lambda](const auto& s, const auto& v) { return homothetic_chf(s, lambda, v); });
}

HullFunctionValue g0_closed_form(const Polygon& p, const Vec2& t) { return g0_impl(p, t); }
HullFunctionValue g0_closed_form(const Polytope3& p, const Vec3& t) { return g0_impl(p, t); }
HullFunctionValue g0_closed_form(const Body& p, std::span<const double> t) {
  return dispatch(p, t, [](const auto& s, const auto& v) { return g0_closed_form(s, v); });
}

double lambda_reduce(const Polygon& k, double lambda, const Vec2& t) {
  return lambda_reduce_impl(k, lambda, t);
}
double lambda_reduce(const Polytope3& k, double lambda, const Vec3& t) {
  return lambda_reduce_impl(k, lambda, t);
}
double lambda_reduce(const Body& k, double lambda, std::span<const double> t) {
  return dispatch(k, t, [lambda](const auto& s, const auto& v) { return lambda_reduce(s, lambda, v); });
}

}  // namespace hullfn
