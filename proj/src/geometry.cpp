#include "hullfn/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <unordered_map>

namespace hullfn {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidBody: return "InvalidBody";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonUnitDirection: return "NonUnitDirection";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::LevelBelowVolume: return "LevelBelowVolume";
    case ErrorCode::NonPositiveDelta: return "NonPositiveDelta";
    case ErrorCode::MissingIntersection: return "MissingIntersection";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NonConvexInput: return "NonConvexInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool finite(const Vec2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }
bool finite(const Vec3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

template <class V>
double diameter_of(const std::vector<V>& pts) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const V e = pts[i] - pts[j];
      d2 = std::max(d2, dot(e, e));
    }
  }
  return std::sqrt(d2);
}

template <class V>
double bounding_diagonal(std::span<const V> pts) {
  V lo = pts.front();
  V hi = pts.front();
  for (const V& p : pts) {
    lo.x = std::min(lo.x, p.x);
    hi.x = std::max(hi.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.y = std::max(hi.y, p.y);
    if constexpr (std::is_same_v<V, Vec3>) {
      lo.z = std::min(lo.z, p.z);
      hi.z = std::max(hi.z, p.z);
    }
  }
  return norm(hi - lo);
}

void require_unit(double length) {
  if (std::abs(length - 1.0) > kEps) {
    throw GeometryError(ErrorCode::NonUnitDirection, "direction must have unit length");
  }
}

double segment_distance(const Vec2& a, const Vec2& b, const Vec2& x) {
  const Vec2 e = b - a;
  const double len2 = dot(e, e);
  const double s = len2 > 0.0 ? std::clamp(dot(x - a, e) / len2, 0.0, 1.0) : 0.0;
  return norm(x - (a + s * e));
}

double segment_distance(const Vec3& a, const Vec3& b, const Vec3& x) {
  const Vec3 e = b - a;
  const double len2 = dot(e, e);
  const double s = len2 > 0.0 ? std::clamp(dot(x - a, e) / len2, 0.0, 1.0) : 0.0;
  return norm(x - (a + s * e));
}

}  // namespace

// ---------------------------------------------------------------------------
// Polygon

Polygon::Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw GeometryError(ErrorCode::InvalidBody, "polygon needs at least 3 vertices");
  for (const Vec2& v : vertices_) {
    if (!finite(v)) throw GeometryError(ErrorCode::InvalidBody, "non-finite vertex");
  }
  diameter_ = diameter_of(vertices_);
  if (diameter_ <= 0.0) throw GeometryError(ErrorCode::InvalidBody, "zero-size polygon");

  const double len_tol = kEps * diameter_;
  const double cross_tol = kEps * diameter_ * diameter_;
  normals_.resize(n);
  offsets_.resize(n);
  lengths_.resize(n);
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = vertex(i + 1) - vertex(i);
    const Vec2 f = vertex(i + 2) - vertex(i + 1);
    lengths_[i] = norm(e);
    if (lengths_[i] <= len_tol) {
      throw GeometryError(ErrorCode::InvalidBody, "duplicate polygon vertex");
    }
    if (cross(e, f) <= cross_tol) {
      throw GeometryError(ErrorCode::InvalidBody,
                          "vertices are not in strictly convex counterclockwise position");
    }
    turning += std::atan2(cross(e, f), dot(e, f));
    normals_[i] = Vec2{e.y, -e.x} / lengths_[i];
    offsets_[i] = dot(normals_[i], vertices_[i]);
    area_ += cross(vertices_[i], vertex(i + 1));
  }
  // A locally convex cycle winding more than once is a star polygon.
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
    throw GeometryError(ErrorCode::InvalidBody, "vertex cycle winds more than once");
  }
  area_ *= 0.5;
}

const Vec2& Polygon::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

// ---------------------------------------------------------------------------
// Polytope3

Polytope3::Polytope3(std::vector<Vec3> vertices, std::vector<std::vector<std::size_t>> loops)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 4 || loops.size() < 4) {
    throw GeometryError(ErrorCode::InvalidBody, "polytope needs at least 4 vertices and facets");
  }
  for (const Vec3& v : vertices_) {
    if (!finite(v)) throw GeometryError(ErrorCode::InvalidBody, "non-finite vertex");
  }
  diameter_ = diameter_of(vertices_);
  if (diameter_ <= 0.0) throw GeometryError(ErrorCode::InvalidBody, "zero-size polytope");
  const double tol = kEps * diameter_;

  std::map<std::pair<std::size_t, std::size_t>, int> directed;
  std::vector<bool> used(vertices_.size(), false);
  facets_.reserve(loops.size());
  for (auto& loop : loops) {
    if (loop.size() < 3) throw GeometryError(ErrorCode::InvalidBody, "facet with < 3 vertices");
    Vec3 newell{};
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const std::size_t a = loop[i];
      const std::size_t b = loop[(i + 1) % loop.size()];
      if (a >= vertices_.size() || b >= vertices_.size()) {
        throw GeometryError(ErrorCode::InvalidBody, "facet index out of range");
      }
      used[a] = true;
      newell += cross(vertices_[a], vertices_[b]);
      if (++directed[{a, b}] > 1) {
        throw GeometryError(ErrorCode::InvalidBody, "inconsistent facet orientation");
      }
    }
    const double twice_area = norm(newell);
    if (twice_area <= tol * tol) throw GeometryError(ErrorCode::InvalidBody, "degenerate facet");
    Facet f;
    f.normal = newell / twice_area;
    f.area = 0.5 * twice_area;
    for (std::size_t idx : loop) f.offset += dot(f.normal, vertices_[idx]);
    f.offset /= static_cast<double>(loop.size());
    for (std::size_t idx : loop) {
      if (std::abs(dot(f.normal, vertices_[idx]) - f.offset) > tol) {
        throw GeometryError(ErrorCode::InvalidBody, "non-planar facet");
      }
    }
    f.loop = std::move(loop);
    facets_.push_back(std::move(f));
  }
  for (const auto& [edge, count] : directed) {
    if (!directed.contains({edge.second, edge.first})) {
      throw GeometryError(ErrorCode::InvalidBody, "boundary is not closed");
    }
  }
  if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
    throw GeometryError(ErrorCode::InvalidBody, "vertex not on any facet");
  }
  edge_count_ = directed.size() / 2;
  const auto euler = static_cast<long>(vertices_.size()) - static_cast<long>(edge_count_) +
                     static_cast<long>(facets_.size());
  if (euler != 2) throw GeometryError(ErrorCode::InvalidBody, "Euler relation V - E + F = 2 fails");
  for (const Facet& f : facets_) {
    for (const Vec3& v : vertices_) {
      if (dot(f.normal, v) > f.offset + tol) {
        throw GeometryError(ErrorCode::InvalidBody, "vertex outside a facet halfspace");
      }
    }
    volume_ += f.offset * f.area;
  }
  volume_ /= 3.0;
  if (volume_ <= 0.0) throw GeometryError(ErrorCode::InvalidBody, "non-positive volume");
}

// ---------------------------------------------------------------------------
// Body

const Polygon& Body::polygon() const {
  if (!is_polygon()) throw GeometryError(ErrorCode::DimensionMismatch, "body is 3-dimensional");
  return std::get<Polygon>(shape_);
}

const Polytope3& Body::polytope() const {
  if (is_polygon()) throw GeometryError(ErrorCode::DimensionMismatch, "body is 2-dimensional");
  return std::get<Polytope3>(shape_);
}

double Body::volume() const {
  return visit([](const auto& k) { return hullfn::volume(k); });
}

double Body::diameter() const {
  return visit([](const auto& k) { return k.diameter(); });
}

std::vector<std::vector<double>> Body::vertex_coordinates() const {
  std::vector<std::vector<double>> out;
  if (is_polygon()) {
    for (const Vec2& v : polygon().vertices()) out.push_back({v.x, v.y});
  } else {
    for (const Vec3& v : polytope().vertices()) out.push_back({v.x, v.y, v.z});
  }
  return out;
}

Vec2 to_vec2(std::span<const double> c) {
  if (c.size() != 2) throw GeometryError(ErrorCode::DimensionMismatch, "expected 2 coordinates");
  return {c[0], c[1]};
}

Vec3 to_vec3(std::span<const double> c) {
  if (c.size() != 3) throw GeometryError(ErrorCode::DimensionMismatch, "expected 3 coordinates");
  return {c[0], c[1], c[2]};
}

// ---------------------------------------------------------------------------
// Hulls

Polygon convex_hull(std::span<const Vec2> points) {
  if (points.size() < 3) throw GeometryError(ErrorCode::DegenerateInput, "fewer than 3 points");
  for (const Vec2& p : points) {
    if (!finite(p)) throw GeometryError(ErrorCode::DegenerateInput, "non-finite point");
  }
  const double scale = bounding_diagonal(points);
  const double cross_tol = kEps * scale * scale;
  const double len_tol = kEps * scale;

  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });

  // Andrew's monotone chain; collinear and coincident points are popped.
  std::vector<Vec2> h;
  h.reserve(2 * pts.size());
  auto turn = [](const Vec2& o, const Vec2& a, const Vec2& b) { return cross(a - o, b - o); };
  for (const Vec2& p : pts) {
    while (h.size() >= 2 && turn(h[h.size() - 2], h.back(), p) <= cross_tol) h.pop_back();
    h.push_back(p);
  }
  const std::size_t lower = h.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (h.size() >= lower && turn(h[h.size() - 2], h.back(), *it) <= cross_tol) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();

  // Cyclic cleanup around the chain junction.
  bool changed = true;
  while (changed && h.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < h.size() && h.size() >= 3; ++i) {
      const Vec2& prev = h[(i + h.size() - 1) % h.size()];
      const Vec2& next = h[(i + 1) % h.size()];
      if (norm(h[i] - prev) <= len_tol || turn(prev, h[i], next) <= cross_tol) {
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (h.size() < 3) throw GeometryError(ErrorCode::DegenerateInput, "points are collinear");
  return Polygon(std::move(h));
}

namespace {

struct HullFace {
  std::array<std::size_t, 3> v;
  Vec3 n;
  double d = 0.0;
  bool alive = true;
};

std::uint64_t edge_key(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

class IncrementalHull {
 public:
  IncrementalHull(std::span<const Vec3> pts, double tol) : pts_(pts), tol_(tol) {}

  void add_face(std::size_t a, std::size_t b, std::size_t c) {
    HullFace f;
    f.v = {a, b, c};
    f.n = normalized(cross(pts_[b] - pts_[a], pts_[c] - pts_[a]));
    f.d = dot(f.n, pts_[a]);
    const std::size_t id = faces_.size();
    faces_.push_back(f);
    for (int e = 0; e < 3; ++e) edges_[edge_key(f.v[e], f.v[(e + 1) % 3])] = id;
  }

  void kill_face(std::size_t id) {
    faces_[id].alive = false;
    const auto& v = faces_[id].v;
    for (int e = 0; e < 3; ++e) edges_.erase(edge_key(v[e], v[(e + 1) % 3]));
  }

  void insert(std::size_t p) {
    std::vector<std::size_t> visible;
    std::vector<bool> is_visible(faces_.size(), false);
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (faces_[i].alive && dot(faces_[i].n, pts_[p]) - faces_[i].d > tol_) {
        visible.push_back(i);
        is_visible[i] = true;
      }
    }
    if (visible.empty()) return;
    std::vector<std::pair<std::size_t, std::size_t>> horizon;
    for (std::size_t id : visible) {
      const auto& v = faces_[id].v;
      for (int e = 0; e < 3; ++e) {
        const std::size_t a = v[e];
        const std::size_t b = v[(e + 1) % 3];
        const auto it = edges_.find(edge_key(b, a));
        if (it == edges_.end() || !is_visible[it->second]) horizon.emplace_back(a, b);
      }
    }
    for (std::size_t id : visible) kill_face(id);
    for (const auto& [a, b] : horizon) add_face(a, b, p);
  }

  const std::vector<HullFace>& faces() const { return faces_; }
  std::size_t owner(std::size_t a, std::size_t b) const { return edges_.at(edge_key(a, b)); }

 private:
  std::span<const Vec3> pts_;
  double tol_;
  std::vector<HullFace> faces_;
  std::unordered_map<std::uint64_t, std::size_t> edges_;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

Polytope3 convex_hull(std::span<const Vec3> points) {
  const std::size_t n = points.size();
  if (n < 4) throw GeometryError(ErrorCode::DegenerateInput, "fewer than 4 points");
  if (n >= (std::size_t{1} << 32)) throw GeometryError(ErrorCode::InvalidArgument, "too many points");
  for (const Vec3& p : points) {
    if (!finite(p)) throw GeometryError(ErrorCode::DegenerateInput, "non-finite point");
  }
  const double scale = bounding_diagonal(points);
  const double tol = kEps * scale;
  if (scale <= 0.0) throw GeometryError(ErrorCode::DegenerateInput, "all points coincide");

  // Initial simplex from extreme points.
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const Vec3& a = points[i];
    const Vec3& b = points[i0];
    if (a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.z < b.z)))) i0 = i;
  }
  auto argmax = [&](auto&& f) {
    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = f(points[i]);
      if (v > best_val) {
        best_val = v;
        best = i;
      }
    }
    return std::pair{best, best_val};
  };
  const Vec3 p0 = points[i0];
  const auto [i1, d1] = argmax([&](const Vec3& p) { return norm(p - p0); });
  if (d1 <= tol) throw GeometryError(ErrorCode::DegenerateInput, "all points coincide");
  const Vec3 axis = normalized(points[i1] - p0);
  const auto [i2, d2] = argmax([&](const Vec3& p) { return norm(cross(axis, p - p0)); });
  if (d2 <= tol) throw GeometryError(ErrorCode::DegenerateInput, "points are collinear");
  const Vec3 plane_n = normalized(cross(points[i1] - p0, points[i2] - p0));
  const auto [i3, d3] = argmax([&](const Vec3& p) { return std::abs(dot(plane_n, p - p0)); });
  if (d3 <= tol) throw GeometryError(ErrorCode::DegenerateInput, "points are coplanar");

  IncrementalHull h(points, tol);
  const std::array<std::size_t, 4> simplex{i0, i1, i2, i3};
  const std::array<std::array<int, 4>, 4> tri{{{0, 1, 2, 3}, {0, 3, 1, 2}, {0, 2, 3, 1}, {1, 3, 2, 0}}};
  for (const auto& t : tri) {
    std::size_t a = simplex[t[0]];
    std::size_t b = simplex[t[1]];
    std::size_t c = simplex[t[2]];
    const Vec3 nn = cross(points[b] - points[a], points[c] - points[a]);
    if (dot(nn, points[simplex[t[3]]] - points[a]) > 0.0) std::swap(b, c);
    h.add_face(a, b, c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i != i0 && i != i1 && i != i2 && i != i3) h.insert(i);
  }

  // Merge coplanar neighbouring triangles into facets.
  const auto& faces = h.faces();
  std::vector<std::size_t> parent(faces.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto opposite = [&](const HullFace& f, std::size_t a, std::size_t b) {
    for (std::size_t v : f.v) {
      if (v != a && v != b) return v;
    }
    return f.v[0];
  };
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (!faces[fi].alive) continue;
    const HullFace& f = faces[fi];
    for (int e = 0; e < 3; ++e) {
      const std::size_t a = f.v[e];
      const std::size_t b = f.v[(e + 1) % 3];
      const std::size_t gi = h.owner(b, a);
      const HullFace& g = faces[gi];
      const bool coplanar = dot(f.n, g.n) > 0.5 &&
                            std::abs(dot(f.n, points[opposite(g, a, b)]) - f.d) <= tol &&
                            std::abs(dot(g.n, points[opposite(f, a, b)]) - g.d) <= tol;
      if (coplanar) parent[find_root(parent, fi)] = find_root(parent, gi);
    }
  }

  std::map<std::size_t, std::map<std::size_t, std::size_t>> boundary;  // group -> (a -> b)
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (!faces[fi].alive) continue;
    const std::size_t root = find_root(parent, fi);
    const auto& v = faces[fi].v;
    for (int e = 0; e < 3; ++e) {
      const std::size_t a = v[e];
      const std::size_t b = v[(e + 1) % 3];
      if (find_root(parent, h.owner(b, a)) == root) continue;
      if (!boundary[root].emplace(a, b).second) {
        throw GeometryError(ErrorCode::DegenerateInput, "non-manifold facet merge");
      }
    }
  }

  std::vector<std::vector<std::size_t>> loops;
  for (auto& [root, next] : boundary) {
    std::vector<std::size_t> loop;
    const std::size_t start = next.begin()->first;
    std::size_t cur = start;
    do {
      loop.push_back(cur);
      const auto it = next.find(cur);
      if (it == next.end() || loop.size() > next.size()) {
        throw GeometryError(ErrorCode::DegenerateInput, "open facet boundary");
      }
      cur = it->second;
    } while (cur != start);
    if (loop.size() != next.size()) {
      throw GeometryError(ErrorCode::DegenerateInput, "facet with multiple boundary cycles");
    }
    // Drop points lying in the relative interior of an edge.
    bool changed = true;
    while (changed && loop.size() > 3) {
      changed = false;
      for (std::size_t i = 0; i < loop.size(); ++i) {
        const Vec3& u = points[loop[(i + loop.size() - 1) % loop.size()]];
        const Vec3& v = points[loop[i]];
        const Vec3& w = points[loop[(i + 1) % loop.size()]];
        const double len = norm(w - u);
        if (len > 0.0 && norm(cross(w - u, v - u)) / len <= tol) {
          loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    loops.push_back(std::move(loop));
  }

  // Compact to the used vertices, preserving input order.
  std::vector<std::size_t> remap(n, n);
  for (const auto& loop : loops) {
    for (std::size_t v : loop) remap[v] = 0;
  }
  std::vector<Vec3> verts;
  for (std::size_t i = 0; i < n; ++i) {
    if (remap[i] == 0) {
      remap[i] = verts.size();
      verts.push_back(points[i]);
    }
  }
  for (auto& loop : loops) {
    for (std::size_t& v : loop) v = remap[v];
    // Canonical start at the smallest index.
    std::rotate(loop.begin(), std::min_element(loop.begin(), loop.end()), loop.end());
  }
  std::sort(loops.begin(), loops.end());
  return Polytope3(std::move(verts), std::move(loops));
}

Body hull(std::span<const std::vector<double>> points) {
  if (points.empty()) throw GeometryError(ErrorCode::DegenerateInput, "no points");
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw GeometryError(ErrorCode::DimensionMismatch, "mixed point dimensions");
  }
  if (dim == 2) {
    std::vector<Vec2> pts;
    for (const auto& p : points) pts.push_back(to_vec2(p));
    return Body(convex_hull(pts));
  }
  if (dim == 3) {
    std::vector<Vec3> pts;
    for (const auto& p : points) pts.push_back(to_vec3(p));
    return Body(convex_hull(pts));
  }
  throw GeometryError(ErrorCode::DimensionMismatch, "only dimensions 2 and 3 are supported");
}

// ---------------------------------------------------------------------------
// Support, gauge, polarity

template <class K, class V>
static double support_impl(const K& k, const V& u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const V& v : vertices_of(k)) best = std::max(best, dot(u, v));
  return best;
}

double support(const Polygon& k, const Vec2& u) { return support_impl(k, u); }
double support(const Polytope3& k, const Vec3& u) { return support_impl(k, u); }

template <class K>
static bool origin_interior_impl(const K& k) {
  const double tol = kEps * k.diameter();
  for (std::size_t i = 0; i < facet_count(k); ++i) {
    if (facet_offset(k, i) <= tol) return false;
  }
  return true;
}

bool origin_interior(const Polygon& k) { return origin_interior_impl(k); }
bool origin_interior(const Polytope3& k) { return origin_interior_impl(k); }

template <class K, class V>
static double gauge_impl(const K& k, const V& u) {
  if (!origin_interior(k)) throw GeometryError(ErrorCode::OriginNotInterior, "gauge needs o in int K");
  if (norm(u) == 0.0) throw GeometryError(ErrorCode::InvalidArgument, "zero direction");
  double tau = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < facet_count(k); ++i) {
    const double c = dot(facet_normal(k, i), u);
    if (c > 0.0) tau = std::min(tau, facet_offset(k, i) / c);
  }
  return tau;
}

double gauge(const Polygon& k, const Vec2& u) { return gauge_impl(k, u); }
double gauge(const Polytope3& k, const Vec3& u) { return gauge_impl(k, u); }

template <class K, class V>
static double facet_excess_impl(const K& k, const V& x) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < facet_count(k); ++i) {
    best = std::max(best, dot(facet_normal(k, i), x) - facet_offset(k, i));
  }
  return best;
}

double facet_excess(const Polygon& k, const Vec2& x) { return facet_excess_impl(k, x); }
double facet_excess(const Polytope3& k, const Vec3& x) { return facet_excess_impl(k, x); }

template <class K>
static K polar_impl(const K& k) {
  if (!origin_interior(k)) throw GeometryError(ErrorCode::OriginNotInterior, "polar needs o in int K");
  std::vector<typename K::Point> pts;
  pts.reserve(facet_count(k));
  for (std::size_t i = 0; i < facet_count(k); ++i) {
    pts.push_back(facet_normal(k, i) / facet_offset(k, i));
  }
  return convex_hull(std::span<const typename K::Point>(pts));
}

Polygon polar(const Polygon& k) { return polar_impl(k); }
Polytope3 polar(const Polytope3& k) { return polar_impl(k); }
Body polar(const Body& k) {
  return k.visit([](const auto& s) { return Body(polar(s)); });
}

// ---------------------------------------------------------------------------
// Minkowski arithmetic

template <class K>
static K minkowski_impl(const K& a, const K& b) {
  using V = typename K::Point;
  std::vector<V> pts;
  pts.reserve(vertices_of(a).size() * vertices_of(b).size());
  for (const V& p : vertices_of(a)) {
    for (const V& q : vertices_of(b)) pts.push_back(p + q);
  }
  return convex_hull(std::span<const V>(pts));
}

Polygon minkowski_sum(const Polygon& a, const Polygon& b) { return minkowski_impl(a, b); }
Polytope3 minkowski_sum(const Polytope3& a, const Polytope3& b) { return minkowski_impl(a, b); }
Body minkowski_sum(const Body& a, const Body& b) {
  if (a.dim() != b.dim()) throw GeometryError(ErrorCode::DimensionMismatch, "bodies differ in dimension");
  if (a.is_polygon()) return Body(minkowski_sum(a.polygon(), b.polygon()));
  return Body(minkowski_sum(a.polytope(), b.polytope()));
}

Polygon negate(const Polygon& k) {
  std::vector<Vec2> v;
  for (const Vec2& p : k.vertices()) v.push_back(-p);
  return Polygon(std::move(v));
}

Polytope3 negate(const Polytope3& k) {
  std::vector<Vec3> v;
  for (const Vec3& p : k.vertices()) v.push_back(-p);
  std::vector<std::vector<std::size_t>> loops;
  for (const Facet& f : k.facets()) loops.emplace_back(f.loop.rbegin(), f.loop.rend());
  return Polytope3(std::move(v), std::move(loops));
}

Polygon difference_body(const Polygon& k) { return minkowski_sum(k, negate(k)); }
Polytope3 difference_body(const Polytope3& k) { return minkowski_sum(k, negate(k)); }
Polygon central_symmetral(const Polygon& k) { return scale(difference_body(k), 0.5); }
Polytope3 central_symmetral(const Polytope3& k) { return scale(difference_body(k), 0.5); }

static std::vector<std::vector<std::size_t>> loops_of(const Polytope3& k) {
  std::vector<std::vector<std::size_t>> loops;
  for (const Facet& f : k.facets()) loops.push_back(f.loop);
  return loops;
}

Polygon translate(const Polygon& k, const Vec2& t) {
  std::vector<Vec2> v;
  for (const Vec2& p : k.vertices()) v.push_back(p + t);
  return Polygon(std::move(v));
}

Polytope3 translate(const Polytope3& k, const Vec3& t) {
  std::vector<Vec3> v;
  for (const Vec3& p : k.vertices()) v.push_back(p + t);
  return Polytope3(std::move(v), loops_of(k));
}

Polygon scale(const Polygon& k, double factor) {
  if (!(factor > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "scale factor must be positive");
  std::vector<Vec2> v;
  for (const Vec2& p : k.vertices()) v.push_back(factor * p);
  return Polygon(std::move(v));
}

Polytope3 scale(const Polytope3& k, double factor) {
  if (!(factor > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "scale factor must be positive");
  std::vector<Vec3> v;
  for (const Vec3& p : k.vertices()) v.push_back(factor * p);
  return Polytope3(std::move(v), loops_of(k));
}

// ---------------------------------------------------------------------------
// Brightness

double brightness(const Polygon& k, const Vec2& u) {
  require_unit(norm(u));
  const Vec2 w = perp(u);
  return support(k, w) + support(k, -w);
}

double brightness(const Polytope3& k, const Vec3& u) {
  require_unit(norm(u));
  double sum = 0.0;
  for (const Facet& f : k.facets()) sum += std::abs(dot(u, f.normal)) * f.area;
  return 0.5 * sum;
}

double brightness_projected(const Polytope3& k, const Vec3& u) {
  require_unit(norm(u));
  const Vec3 helper = std::abs(u.x) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(u, helper));
  const Vec3 e2 = cross(u, e1);
  std::vector<Vec2> projected;
  for (const Vec3& v : k.vertices()) projected.push_back({dot(v, e1), dot(v, e2)});
  return convex_hull(projected).area();
}

// ---------------------------------------------------------------------------
// Distances

double distance(const Polygon& k, const Vec2& x) {
  if (facet_excess(k, x) <= 0.0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k.size(); ++i) {
    best = std::min(best, segment_distance(k.vertex(i), k.vertex(i + 1), x));
  }
  return best;
}

double distance(const Polytope3& k, const Vec3& x) {
  if (facet_excess(k, x) <= 0.0) return 0.0;
  const auto& v = k.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (const Facet& f : k.facets()) {
    const double h = dot(f.normal, x) - f.offset;
    if (h <= 0.0) continue;
    const Vec3 y = x - h * f.normal;
    bool inside = true;
    double edge_best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.loop.size(); ++i) {
      const Vec3& a = v[f.loop[i]];
      const Vec3& b = v[f.loop[(i + 1) % f.loop.size()]];
      if (dot(cross(b - a, y - a), f.normal) < 0.0) inside = false;
      edge_best = std::min(edge_best, segment_distance(a, b, x));
    }
    best = std::min(best, inside ? h : edge_best);
  }
  return best;
}

template <class K>
static double hausdorff_impl(const K& a, const K& b) {
  double d = 0.0;
  for (const auto& p : vertices_of(a)) d = std::max(d, distance(b, p));
  for (const auto& p : vertices_of(b)) d = std::max(d, distance(a, p));
  return d;
}

double hausdorff_distance(const Polygon& a, const Polygon& b) { return hausdorff_impl(a, b); }
double hausdorff_distance(const Polytope3& a, const Polytope3& b) { return hausdorff_impl(a, b); }

}  // namespace hullfn
