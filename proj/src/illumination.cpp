#include "hullfn/illumination.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "hullfn/directions.hpp"

namespace hullfn {

double LineRestriction::value(double s) const {
  double sum = 0.0;
  for (const Term& t : terms_) sum += t.weight * std::max(0.0, t.intercept + t.slope * s);
  return base_ + sum;
}

std::vector<double> LineRestriction::roots(double level) const {
  std::vector<double> breaks;
  for (const Term& t : terms_) {
    if (t.slope != 0.0) breaks.push_back(-t.intercept / t.slope);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // Each piece between consecutive breakpoints is linear; solve it directly.
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> found;
  const std::size_t pieces = breaks.size() + 1;
  for (std::size_t k = 0; k < pieces; ++k) {
    const double lo = k == 0 ? -inf : breaks[k - 1];
    const double hi = k == breaks.size() ? inf : breaks[k];
    double probe;
    if (breaks.empty()) {
      probe = 0.0;
    } else if (k == 0) {
      probe = hi - 1.0;
    } else if (k == breaks.size()) {
      probe = lo + 1.0;
    } else {
      probe = 0.5 * (lo + hi);
    }
    double intercept = base_;
    double slope = 0.0;
    for (const Term& t : terms_) {
      if (t.intercept + t.slope * probe > 0.0) {
        intercept += t.weight * t.intercept;
        slope += t.weight * t.slope;
      }
    }
    if (slope == 0.0) continue;
    const double s = (level - intercept) / slope;
    const double pad = 1e-12 * (1.0 + std::abs(s));
    if (s >= lo - pad && s <= hi + pad) found.push_back(s);
  }
  if (found.empty()) return {};
  const auto [mn, mx] = std::minmax_element(found.begin(), found.end());
  if (*mx - *mn <= 1e-12 * (1.0 + std::abs(*mn))) return {*mn};
  return {*mn, *mx};
}

namespace {

template <class K, class V>
double ray_solve_impl(const K& p, const V& u, double level) {
  if (std::abs(norm(u) - 1.0) > kEps) {
    throw GeometryError(ErrorCode::NonUnitDirection, "ray direction must have unit length");
  }
  if (!origin_interior(p)) {
    throw GeometryError(ErrorCode::OriginNotInterior, "ray solve needs o in int P");
  }
  if (!(level > volume(p))) {
    throw GeometryError(ErrorCode::LevelBelowVolume, "level must exceed vol(P)");
  }
  const LineRestriction line(p, V{}, u);
  const std::vector<double> r = line.roots(level);
  return r.back();
}

void check_delta(double delta) {
  if (!(delta > 0.0)) throw GeometryError(ErrorCode::NonPositiveDelta, "delta must be positive");
}

/// Drops candidates within tol of an earlier one; returns the drop count.
template <class V>
std::size_t merge_candidates(std::vector<V>& pts, double tol) {
  std::vector<V> kept;
  std::size_t dropped = 0;
  for (const V& p : pts) {
    const bool dup = std::any_of(kept.begin(), kept.end(),
                                 [&](const V& q) { return norm(p - q) <= tol; });
    if (dup) {
      ++dropped;
    } else {
      kept.push_back(p);
    }
  }
  pts = std::move(kept);
  return dropped;
}

template <class V>
double candidate_scale(const std::vector<V>& pts, double base) {
  double r = base;
  for (const V& p : pts) r = std::max(r, norm(p));
  return r;
}

template <class V, class HP, class HQ>
HomothetyReport fit_impl(std::span<const V> dirs, const HP& h_p, const HQ& h_q, double diam_q) {
  constexpr int dim = std::is_same_v<V, Vec2> ? 2 : 3;
  const auto m = static_cast<Eigen::Index>(dirs.size());
  Eigen::MatrixXd a(m, dim + 1);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const V& u = dirs[static_cast<std::size_t>(i)];
    a(i, 0) = h_p(u);
    a(i, 1) = u.x;
    a(i, 2) = u.y;
    if constexpr (dim == 3) a(i, 3) = u.z;
    b(i) = h_q(u);
  }
  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd r = b - a * x;

  HomothetyReport rep;
  rep.ratio = x(0);
  for (int d = 0; d < dim; ++d) rep.translation.push_back(x(d + 1));
  if (std::abs(1.0 - rep.ratio) > 1e-12) {
    std::vector<double> c;
    for (double t : rep.translation) c.push_back(t / (1.0 - rep.ratio));
    rep.center = std::move(c);
  }
  rep.defect = r.cwiseAbs().maxCoeff() / diam_q;
  rep.is_homothet = rep.ratio > 0.0 && rep.defect < kHomothetyTolerance;
  return rep;
}

}  // namespace

double ray_level_solve(const Polygon& p, const Vec2& u, double level) {
  return ray_solve_impl(p, u, level);
}

double ray_level_solve(const Polytope3& p, const Vec3& u, double level) {
  return ray_solve_impl(p, u, level);
}

LevelSet<Polygon> illumination_body(const Polygon& p, double delta) {
  check_delta(delta);
  const double level = p.area() + delta;
  std::vector<Vec2> candidates;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2 origin = p.vertex(static_cast<std::ptrdiff_t>(i));
    const Vec2 dir = normalized(p.vertex(static_cast<std::ptrdiff_t>(i) + 1) - origin);
    const LineRestriction line(p, origin, dir);
    for (double s : line.roots(level)) candidates.push_back(origin + s * dir);
  }
  const double tol = kEps * candidate_scale(candidates, p.diameter());
  const std::size_t merged = merge_candidates(candidates, tol);
  return {convex_hull(candidates), level, delta, merged};
}

LevelSet<Polytope3> illumination_body(const Polytope3& p, double delta) {
  check_delta(delta);
  const double level = p.volume() + delta;
  const auto& facets = p.facets();
  std::vector<Vec3> candidates;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      const Vec3& ni = facets[i].normal;
      const Vec3& nj = facets[j].normal;
      const Vec3 d = cross(ni, nj);
      const double d2 = dot(d, d);
      if (std::sqrt(d2) <= kEps) continue;  // parallel planes
      const Vec3 origin =
          (facets[i].offset * cross(nj, d) + facets[j].offset * cross(d, ni)) / d2;
      const Vec3 dir = d / std::sqrt(d2);
      const LineRestriction line(p, origin, dir);
      for (double s : line.roots(level)) candidates.push_back(origin + s * dir);
    }
  }
  const double tol = kEps * candidate_scale(candidates, p.diameter());
  const std::size_t merged = merge_candidates(candidates, tol);
  return {convex_hull(candidates), level, delta, merged};
}

HomothetyReport homothety_fit_support(std::span<const Vec2> dirs,
                                      const std::function<double(const Vec2&)>& h_p,
                                      const std::function<double(const Vec2&)>& h_q,
                                      double diam_q) {
  return fit_impl(dirs, h_p, h_q, diam_q);
}

HomothetyReport homothety_fit_support(std::span<const Vec3> dirs,
                                      const std::function<double(const Vec3&)>& h_p,
                                      const std::function<double(const Vec3&)>& h_q,
                                      double diam_q) {
  return fit_impl(dirs, h_p, h_q, diam_q);
}

HomothetyReport homothety_fit(const Polygon& p, const Polygon& q) {
  static const std::vector<Vec2> dirs = circle_directions(720);
  return fit_impl(std::span<const Vec2>(dirs), [&](const Vec2& u) { return support(p, u); },
                  [&](const Vec2& u) { return support(q, u); }, q.diameter());
}

HomothetyReport homothety_fit(const Polytope3& p, const Polytope3& q) {
  static const std::vector<Vec3> dirs = fibonacci_sphere(1024);
  return fit_impl(std::span<const Vec3>(dirs), [&](const Vec3& u) { return support(p, u); },
                  [&](const Vec3& u) { return support(q, u); }, q.diameter());
}

HomothetyReport homothety_fit(const Body& p, const Body& q) {
  if (p.dim() != q.dim()) throw GeometryError(ErrorCode::DimensionMismatch, "bodies differ in dimension");
  if (p.is_polygon()) return homothety_fit(p.polygon(), q.polygon());
  return homothety_fit(p.polytope(), q.polytope());
}

}  // namespace hullfn
