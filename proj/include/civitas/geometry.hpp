// Geometric primitives for packing rectangles into convex city walls.
//
// All lengths are in feet, angles in radians. Containers are closed regions:
// a house touching the wall is inside, and two touching houses do not overlap.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace civitas {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Maximum tolerated wall excursion and house penetration, in feet.
struct Tolerance {
  double eps = 1e-6;

  Tolerance() = default;
  explicit Tolerance(double e) : eps(e) {
    if (!(e >= 0.0) || !std::isfinite(e)) {
      throw std::invalid_argument("tolerance must be a finite value >= 0");
    }
  }
};

/// Maps any finite angle into [0, pi); a rectangle is symmetric under a
/// half turn.
inline double normalize_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("angle must be finite");
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t = 0.0;
  return t;
}

/// Rounds to the nearest multiple of 1e-9, the resolution of layout files.
/// The result is the double nearest to the printed 9-digit decimal, so a
/// quantized value survives a print/parse cycle unchanged.
inline double quantize(double v) {
  const double k = std::nearbyint(v * 1e9);
  if (k == 0.0) return 0.0;
  return k / 1e9;
}

inline double quantize_angle(double theta) {
  double q = quantize(normalize_angle(theta));
  if (q >= kPi) q = 0.0;
  return q;
}

/// One house: centre, extents along its local axes, and the counterclockwise
/// rotation of the local frame, kept in [0, pi).
class PlacedRect {
 public:
  PlacedRect() = default;
  PlacedRect(Point center, double length, double width, double theta)
      : center_(center), length_(length), width_(width), theta_(normalize_angle(theta)) {
    if (!is_finite(center)) throw std::invalid_argument("rectangle centre must be finite");
    if (!(length > 0.0) || !(width > 0.0) || !std::isfinite(length) || !std::isfinite(width)) {
      throw std::invalid_argument("rectangle extents must be positive and finite");
    }
  }

  Point center() const { return center_; }
  double length() const { return length_; }
  double width() const { return width_; }
  double theta() const { return theta_; }

  /// Unit vector of the local x-axis (along the length).
  Point axis_u() const { return direction(theta_); }
  /// Unit vector of the local y-axis (along the width).
  Point axis_v() const { return perp(axis_u()); }

  double circumradius() const { return 0.5 * std::hypot(length_, width_); }

  friend bool operator==(const PlacedRect&, const PlacedRect&) = default;

 private:
  Point center_{};
  double length_ = 1.0;
  double width_ = 1.0;
  double theta_ = 0.0;
};

/// Corner offsets from the centre, counterclockwise, for the given extents
/// and rotation.
inline std::array<Point, 4> corner_offsets(double length, double width, double theta) {
  const Point u = direction(theta);
  const Point v = perp(u);
  const Point hu = (0.5 * length) * u;
  const Point hv = (0.5 * width) * v;
  return {Point{} - hu - hv, hu - hv, hu + hv, Point{} - hu + hv};
}

inline std::array<Point, 4> rect_corners(const PlacedRect& r) {
  auto corners = corner_offsets(r.length(), r.width(), r.theta());
  for (auto& c : corners) c = r.center() + c;
  return corners;
}

struct PolygonShape {
  std::vector<Point> vertices;  // counterclockwise
};

struct CircleShape {
  Point center;
  double radius = 1.0;
};

/// A convex city wall: a strictly convex counterclockwise polygon or a disk.
class ConvexContainer {
 public:
  static ConvexContainer polygon(std::vector<Point> vertices) {
    if (vertices.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (const auto& p : vertices) {
      if (!is_finite(p)) throw std::invalid_argument("polygon vertex must be finite");
    }
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = vertices[i];
      const Point b = vertices[(i + 1) % n];
      const Point c = vertices[(i + 2) % n];
      if (a == b) throw std::invalid_argument("polygon has repeated vertices");
      if (!(cross(b - a, c - b) > 0.0)) {
        throw std::invalid_argument("polygon must be strictly convex and counterclockwise");
      }
    }
    // Strict local convexity still admits self-overlapping stars; the turning
    // angle must total one revolution.
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point e0 = vertices[(i + 1) % n] - vertices[i];
      const Point e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
      turning += std::atan2(cross(e0, e1), dot(e0, e1));
    }
    if (std::abs(turning - 2.0 * kPi) > 1e-6) {
      throw std::invalid_argument("polygon winds more than once");
    }
    ConvexContainer c;
    c.shape_ = PolygonShape{std::move(vertices)};
    return c;
  }

  static ConvexContainer circle(Point center, double radius) {
    if (!is_finite(center)) throw std::invalid_argument("circle centre must be finite");
    if (!(radius > 0.0) || !std::isfinite(radius)) {
      throw std::invalid_argument("circle radius must be positive");
    }
    ConvexContainer c;
    c.shape_ = CircleShape{center, radius};
    return c;
  }

  bool is_circle() const { return std::holds_alternative<CircleShape>(shape_); }
  bool is_polygon() const { return std::holds_alternative<PolygonShape>(shape_); }
  const CircleShape& as_circle() const { return std::get<CircleShape>(shape_); }
  const PolygonShape& as_polygon() const { return std::get<PolygonShape>(shape_); }
  const std::vector<Point>& vertices() const { return as_polygon().vertices; }

  /// Lowest and highest y of the region.
  std::pair<double, double> y_extent() const {
    if (is_circle()) {
      const auto& c = as_circle();
      return {c.center.y - c.radius, c.center.y + c.radius};
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& p : vertices()) {
      lo = std::min(lo, p.y);
      hi = std::max(hi, p.y);
    }
    return {lo, hi};
  }

  /// Axis-aligned bounding box as {min, max}.
  std::pair<Point, Point> bounds() const {
    if (is_circle()) {
      const auto& c = as_circle();
      return {{c.center.x - c.radius, c.center.y - c.radius},
              {c.center.x + c.radius, c.center.y + c.radius}};
    }
    Point lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Point hi{-lo.x, -lo.y};
    for (const auto& p : vertices()) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    return {lo, hi};
  }

  friend bool operator==(const ConvexContainer& a, const ConvexContainer& b) {
    if (a.is_circle() != b.is_circle()) return false;
    if (a.is_circle()) {
      return a.as_circle().center == b.as_circle().center &&
             a.as_circle().radius == b.as_circle().radius;
    }
    return a.vertices() == b.vertices();
  }

 private:
  ConvexContainer() = default;
  std::variant<PolygonShape, CircleShape> shape_;
};

/// Signed distance by which p lies outside c (negative when strictly inside).
/// For polygons this is the largest signed distance beyond any edge line, which
/// equals the true distance outside near edges and underestimates it near
/// vertices.
inline double point_excursion(const ConvexContainer& c, Point p) {
  if (c.is_circle()) {
    const auto& circ = c.as_circle();
    return norm(p - circ.center) - circ.radius;
  }
  const auto& v = c.vertices();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i];
    const Point e = v[(i + 1) % v.size()] - a;
    // Inward side is the left of a counterclockwise edge.
    worst = std::max(worst, -cross(e, p - a) / norm(e));
  }
  return worst;
}

inline bool point_in_container(const ConvexContainer& c, Point p, Tolerance tol = {}) {
  return point_excursion(c, p) <= tol.eps;
}

/// Largest corner excursion of r beyond the wall.
inline double rect_excursion(const ConvexContainer& c, const PlacedRect& r) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& p : rect_corners(r)) worst = std::max(worst, point_excursion(c, p));
  return worst;
}

/// Exact for convex containers: a convex region holds a rectangle iff it
/// holds the four corners.
inline bool rect_in_container(const ConvexContainer& c, const PlacedRect& r, Tolerance tol = {}) {
  return rect_excursion(c, r) <= tol.eps;
}

/// Separating-axis penetration depth: the smallest projection overlap over the
/// four edge normals. Positive means the interiors intersect by that much;
/// zero or negative means touching or separated.
inline double penetration_depth(const PlacedRect& a, const PlacedRect& b) {
  const std::array<Point, 4> axes{a.axis_u(), a.axis_v(), b.axis_u(), b.axis_v()};
  const Point d = b.center() - a.center();
  double depth = std::numeric_limits<double>::infinity();
  for (const Point& ax : axes) {
    const double ra = 0.5 * a.length() * std::abs(dot(a.axis_u(), ax)) +
                      0.5 * a.width() * std::abs(dot(a.axis_v(), ax));
    const double rb = 0.5 * b.length() * std::abs(dot(b.axis_u(), ax)) +
                      0.5 * b.width() * std::abs(dot(b.axis_v(), ax));
    depth = std::min(depth, ra + rb - std::abs(dot(d, ax)));
  }
  return depth;
}

inline bool rects_overlap(const PlacedRect& a, const PlacedRect& b, Tolerance tol = {}) {
  return penetration_depth(a, b) > tol.eps;
}

/// Horizontal cross-section of c at height y, or nothing if the line misses.
inline std::optional<std::pair<double, double>> cross_section(const ConvexContainer& c, double y) {
  if (c.is_circle()) {
    const auto& circ = c.as_circle();
    const double dy = y - circ.center.y;
    if (std::abs(dy) > circ.radius) return std::nullopt;
    const double half = std::sqrt(circ.radius * circ.radius - dy * dy);
    return std::pair{circ.center.x - half, circ.center.x + half};
  }
  const auto& v = c.vertices();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % v.size()];
    if (a.y == b.y) {
      if (a.y == y) {
        lo = std::min({lo, a.x, b.x});
        hi = std::max({hi, a.x, b.x});
      }
      continue;
    }
    if (y < std::min(a.y, b.y) || y > std::max(a.y, b.y)) continue;
    double x;
    if (y == a.y) {
      x = a.x;
    } else if (y == b.y) {
      x = b.x;
    } else {
      x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
    }
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (lo > hi) return std::nullopt;
  return std::pair{lo, hi};
}

/// Widest x-interval [left, right] such that [left, right] x [y_low, y_high]
/// lies in c. For a convex region the left wall is a convex function of y and
/// the right wall concave, so the two end cross-sections decide it.
inline std::optional<std::pair<double, double>> strip_interval(const ConvexContainer& c,
                                                               double y_low, double y_high) {
  if (!(y_low < y_high)) throw std::invalid_argument("strip needs y_low < y_high");
  const auto lo = cross_section(c, y_low);
  const auto hi = cross_section(c, y_high);
  if (!lo || !hi) return std::nullopt;
  const double left = std::max(lo->first, hi->first);
  const double right = std::min(lo->second, hi->second);
  if (left > right) return std::nullopt;
  return std::pair{left, right};
}

inline double polygon_area(const std::vector<Point>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * twice;
}

inline double container_area(const ConvexContainer& c) {
  if (c.is_circle()) {
    const double r = c.as_circle().radius;
    return kPi * r * r;
  }
  return polygon_area(c.vertices());
}

/// Applies a rotation by `angle` about the origin followed by a translation.
struct RigidMotion {
  double angle = 0.0;
  Point shift{};

  Point apply(Point p) const {
    const double cs = std::cos(angle);
    const double sn = std::sin(angle);
    return Point{cs * p.x - sn * p.y, sn * p.x + cs * p.y} + shift;
  }
  PlacedRect apply(const PlacedRect& r) const {
    return PlacedRect(apply(r.center()), r.length(), r.width(), r.theta() + angle);
  }
  ConvexContainer apply(const ConvexContainer& c) const {
    if (c.is_circle()) return ConvexContainer::circle(apply(c.as_circle().center), c.as_circle().radius);
    std::vector<Point> v;
    v.reserve(c.vertices().size());
    for (const auto& p : c.vertices()) v.push_back(apply(p));
    return ConvexContainer::polygon(std::move(v));
  }
};

}  // namespace civitas
