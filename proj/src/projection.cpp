#include "hullfn/projection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "hullfn/directions.hpp"

namespace hullfn {

Polygon projection_body(const Polygon& k) {
  std::vector<Vec2> v;
  const Polygon diff = difference_body(k);
  for (const Vec2& p : diff.vertices()) v.push_back(perp(p));
  return Polygon(std::move(v));
}

Polytope3 projection_body(const Polytope3& k) {
  // Parallel facet normals collapse into one segment of summed length.
  std::vector<Vec3> gens;
  for (const Facet& f : k.facets()) {
    const Vec3 g = 0.5 * f.area * f.normal;
    auto same = std::find_if(gens.begin(), gens.end(), [&](const Vec3& e) {
      return std::abs(dot(normalized(e), f.normal)) > 1.0 - kEps;
    });
    if (same == gens.end()) {
      gens.push_back(g);
    } else if (dot(*same, g) > 0.0) {
      *same += g;
    } else {
      *same -= g;
    }
  }

  // Put three independent generators first so every partial sum after the
  // third is full-dimensional.
  const double tol = 1e-6;
  for (std::size_t slot = 1; slot < 3; ++slot) {
    for (std::size_t i = slot; i < gens.size(); ++i) {
      const double indep = slot == 1
          ? norm(cross(gens[0], gens[i])) / (norm(gens[0]) * norm(gens[i]))
          : std::abs(dot(cross(gens[0], gens[1]), gens[i])) /
                (norm(gens[0]) * norm(gens[1]) * norm(gens[i]));
      if (indep > tol) {
        std::swap(gens[slot], gens[i]);
        break;
      }
    }
  }

  std::vector<Vec3> pts{Vec3{}};
  std::optional<Polytope3> zonotope;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Vec3> next;
    next.reserve(2 * pts.size());
    for (const Vec3& p : pts) {
      next.push_back(p - gens[i]);
      next.push_back(p + gens[i]);
    }
    if (i >= 2) {
      zonotope = convex_hull(next);
      pts = zonotope->vertices();
    } else {
      pts = std::move(next);
    }
  }
  if (!zonotope) throw GeometryError(ErrorCode::InvalidBody, "fewer than 3 generator directions");
  return *std::move(zonotope);
}

Body projection_body(const Body& k) {
  return k.visit([](const auto& s) { return Body(projection_body(s)); });
}

Polygon polar_projection_body(const Polygon& k) { return polar(projection_body(k)); }
Polytope3 polar_projection_body(const Polytope3& k) { return polar(projection_body(k)); }
Body polar_projection_body(const Body& k) {
  return k.visit([](const auto& s) { return Body(polar_projection_body(s)); });
}

namespace {

void check_dirs(int n_dirs) {
  if (n_dirs < 16) throw GeometryError(ErrorCode::InvalidArgument, "need at least 16 directions");
}

std::vector<Vec2> directions_for(const Polygon&, int n) { return circle_directions(n); }
std::vector<Vec3> directions_for(const Polytope3&, int n) { return fibonacci_sphere(n); }

/// Excess volume G_K(tau u) - vol K for the touching translate, tau = rho_{K-K}(u).
template <class K, class V>
double touching_excess(const K& k, const K& diff, const V& u) {
  return gauge(diff, u) * brightness(k, u);
}

template <class K>
TcvpReport tcvp_impl(const K& k, int n_dirs) {
  check_dirs(n_dirs);
  const K diff = difference_body(k);
  TcvpReport rep;
  rep.delta_min = std::numeric_limits<double>::infinity();
  rep.delta_max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  const auto dirs = directions_for(k, n_dirs);
  for (const auto& u : dirs) {
    const double d = touching_excess(k, diff, u);
    rep.delta_min = std::min(rep.delta_min, d);
    rep.delta_max = std::max(rep.delta_max, d);
    sum += d;
  }
  rep.delta_mean = sum / static_cast<double>(dirs.size());
  rep.relative_spread = (rep.delta_max - rep.delta_min) / rep.delta_mean;
  rep.polar_projection_homothety = homothety_fit(diff, polar_projection_body(k));
  rep.passes = rep.relative_spread < kTcvpTolerance;
  return rep;
}

template <class K>
double ctr_impl(const K& k, int n_dirs) {
  check_dirs(n_dirs);
  const K diff = difference_body(k);
  auto dirs = directions_for(k, n_dirs);
  for (const auto& w : vertices_of(diff)) dirs.push_back(normalized(w));
  double best = 0.0;
  for (const auto& u : dirs) best = std::max(best, touching_excess(k, diff, u));
  return 1.0 + best / volume(k);
}

template <class K>
ConstancyReport constancy_impl(const K& k) {
  using V = typename K::Point;
  const auto dirs = directions_for(k, K::kDim == 2 ? 720 : 1024);
  const std::function<double(const V&)> ball = [](const V&) { return 1.0; };
  const K diff = difference_body(k);
  const K proj = projection_body(k);
  ConstancyReport rep;
  rep.width_defect =
      homothety_fit_support(std::span<const V>(dirs), ball,
                            [&](const V& u) { return support(diff, u); }, diff.diameter())
          .defect;
  rep.brightness_defect =
      homothety_fit_support(std::span<const V>(dirs), ball,
                            [&](const V& u) { return support(proj, u); }, proj.diameter())
          .defect;
  rep.width_constant = rep.width_defect < kConstancyTolerance;
  rep.brightness_constant = rep.brightness_defect < kConstancyTolerance;
  return rep;
}

}  // namespace

TcvpReport tcvp_check(const Polygon& k, int n_dirs) { return tcvp_impl(k, n_dirs); }
TcvpReport tcvp_check(const Polytope3& k, int n_dirs) { return tcvp_impl(k, n_dirs); }
TcvpReport tcvp_check(const Body& k, int n_dirs) {
  return k.visit([n_dirs](const auto& s) { return tcvp_check(s, n_dirs); });
}

double ctr_constant(const Polygon& k, int n_dirs) { return ctr_impl(k, n_dirs); }
double ctr_constant(const Polytope3& k, int n_dirs) { return ctr_impl(k, n_dirs); }
double ctr_constant(const Body& k, int n_dirs) {
  return k.visit([n_dirs](const auto& s) { return ctr_constant(s, n_dirs); });
}

ConstancyReport constancy_check(const Polygon& k) { return constancy_impl(k); }
ConstancyReport constancy_check(const Polytope3& k) { return constancy_impl(k); }
ConstancyReport constancy_check(const Body& k) {
  return k.visit([](const auto& s) { return constancy_check(s); });
}

}  // namespace hullfn
