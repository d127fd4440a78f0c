#include "hullfn/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hullfn/hull_functions.hpp"
#include "hullfn/shapes.hpp"

namespace hullfn {

SidelineTable::SidelineTable(const Polygon& p) : m_(p.size()), table_(m_ * m_) {
  const auto m = static_cast<std::ptrdiff_t>(m_);
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const Vec2 a = p.vertex(i);
    const Vec2 da = normalized(p.vertex(i + 1) - a);
    for (std::ptrdiff_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if ((i + 1) % m == j) {
        table_[index(i) * m_ + index(j)] = p.vertex(j);
        continue;
      }
      if ((j + 1) % m == i) {
        table_[index(i) * m_ + index(j)] = p.vertex(i);
        continue;
      }
      const Vec2 b = p.vertex(j);
      const Vec2 db = normalized(p.vertex(j + 1) - b);
      const double s = cross(da, db);
      if (std::abs(s) < kEps) continue;  // (near-)parallel sidelines
      table_[index(i) * m_ + index(j)] = a + (cross(b - a, db) / s) * da;
    }
  }
}

std::size_t SidelineTable::index(std::ptrdiff_t i) const {
  const auto m = static_cast<std::ptrdiff_t>(m_);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

const std::optional<Vec2>& SidelineTable::at(std::ptrdiff_t i, std::ptrdiff_t j) const {
  return table_[index(i) * m_ + index(j)];
}

SidelineTable sideline_intersections(const Polygon& p) { return SidelineTable(p); }

namespace {

std::vector<Vec2> extension_vertices(const SidelineTable& t, int k, int l) {
  const auto m = static_cast<std::ptrdiff_t>(t.size());
  std::vector<Vec2> q;
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    const auto& pt = t.at(j - k - 1, j + l);
    if (!pt) {
      throw GeometryError(ErrorCode::MissingIntersection,
                          "sidelines " + std::to_string(j - k - 1) + " and " +
                              std::to_string(j + l) + " are parallel");
    }
    q.push_back(*pt);
  }
  return q;
}

}  // namespace

ExtensionCurve kl_extension(const Polygon& p, int k, int l) {
  if (k < 0 || l < 0 || k > static_cast<int>(p.size()) || l > static_cast<int>(p.size())) {
    throw GeometryError(ErrorCode::InvalidArgument, "k and l must lie in [0, m]");
  }
  return {k, l, extension_vertices(SidelineTable(p), k, l)};
}

bool extension_admissible(int m, int k, int l) {
  return k >= 1 && l >= 1 && (k + l) % 2 == 0 && 2 * (k + l + 1) < m;
}

ExtensionCheck extension_homothety_check(const Polygon& p, int k, int l) {
  const int m = static_cast<int>(p.size());
  if (!extension_admissible(m, k, l)) {
    throw GeometryError(ErrorCode::ConditionViolated,
                        "need k, l >= 1, 2 | (k + l) and k + l + 1 < m / 2");
  }
  const ExtensionCurve curve = kl_extension(p, k, l);
  const int r = (k + l) / 2;

  // Vertex i of P (start of side i) corresponds to q_{i + k - r}.
  std::vector<Vec2> image;
  for (int i = 0; i < m; ++i) image.push_back(curve.vertices[static_cast<std::size_t>(((i + k - r) % m + m) % m)]);

  Vec2 pbar{};
  Vec2 qbar{};
  for (int i = 0; i < m; ++i) {
    pbar += p.vertices()[static_cast<std::size_t>(i)];
    qbar += image[static_cast<std::size_t>(i)];
  }
  pbar = pbar / m;
  qbar = qbar / m;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vec2 dp = p.vertices()[static_cast<std::size_t>(i)] - pbar;
    const Vec2 dq = image[static_cast<std::size_t>(i)] - qbar;
    num += dot(dp, dq);
    den += dot(dp, dp);
  }
  const double mu = num / den;
  const Vec2 c = qbar - mu * pbar;

  double diam = 0.0;
  for (const Vec2& a : image) {
    for (const Vec2& b : image) diam = std::max(diam, norm(a - b));
  }
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    worst = std::max(worst, norm(image[static_cast<std::size_t>(i)] -
                                 (mu * p.vertices()[static_cast<std::size_t>(i)] + c)));
  }

  ExtensionCheck out;
  out.homothety.ratio = mu;
  out.homothety.translation = {c.x, c.y};
  if (std::abs(1.0 - mu) > 1e-12) out.homothety.center = std::vector<double>{c.x / (1.0 - mu), c.y / (1.0 - mu)};
  out.homothety.defect = worst / diam;
  out.homothety.is_homothet = mu > 0.0 && out.homothety.defect < kHomothetyTolerance;

  std::vector<double> values;
  for (const Vec2& q : curve.vertices) values.push_back(g0_closed_form(p, q).value);
  out.level = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  for (double v : values) out.level_residual = std::max(out.level_residual, std::abs(v - out.level) / out.level);
  return out;
}

RegularityReport is_affinely_regular(const Polygon& p) {
  const auto m = static_cast<std::ptrdiff_t>(p.size());
  double num = 0.0;
  double den = 0.0;
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const Vec2 a = p.vertex(i + 2) - p.vertex(i - 1);
    const Vec2 b = p.vertex(i + 1) - p.vertex(i);
    num += dot(a, b);
    den += dot(b, b);
  }
  RegularityReport rep;
  rep.tau = num / den;
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const Vec2 a = p.vertex(i + 2) - p.vertex(i - 1);
    const Vec2 b = p.vertex(i + 1) - p.vertex(i);
    rep.max_residual = std::max(rep.max_residual, norm(a - rep.tau * b));
  }
  // tau = 1 + 2 cos(2 pi / m) vanishes for triangles, which are all regular.
  const double tol = 1e-6 * p.diameter();
  rep.is_affinely_regular = rep.max_residual < tol && rep.tau > -tol;
  return rep;
}

Polygon affinely_regular_polygon(int m, const std::array<std::array<double, 2>, 2>& a, const Vec2& b) {
  const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const double size = std::abs(a[0][0]) + std::abs(a[0][1]) + std::abs(a[1][0]) + std::abs(a[1][1]);
  if (!(std::abs(det) > 1e-12 * size * size)) {
    throw GeometryError(ErrorCode::SingularMatrix, "affine map is singular");
  }
  std::vector<Vec2> v;
  const Polygon regular = regular_polygon(m);
  for (const Vec2& p : regular.vertices()) {
    v.push_back(Vec2{a[0][0] * p.x + a[0][1] * p.y, a[1][0] * p.x + a[1][1] * p.y} + b);
  }
  if (det < 0.0) std::reverse(v.begin(), v.end());
  return Polygon(std::move(v));
}

}  // namespace hullfn
