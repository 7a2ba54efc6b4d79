// Exact placement queries for one more house among fixed houses.
//
// For a fixed rotation the set of feasible centres is the inner-fit region
// (centres keeping the house inside the wall, a convex polygon) minus the
// interiors of the no-fit polygons of the placed houses (Minkowski sums,
// convex octagons at most). The extreme feasible point in any direction is a
// vertex of that arrangement, which is what `find_position` enumerates.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "civitas/geometry.hpp"

namespace civitas {

using ConvexPolygon = std::vector<Point>;  // counterclockwise

/// Keeps the part of a convex polygon with dot(n, p) >= offset.
inline ConvexPolygon clip_halfplane(const ConvexPolygon& poly, Point n, double offset) {
  ConvexPolygon out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % m];
    const double da = dot(n, a) - offset;
    const double db = dot(n, b) - offset;
    if (da >= 0.0) out.push_back(a);
    if ((da >= 0.0) != (db >= 0.0)) {
      const double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

inline ConvexPolygon box_polygon(Point lo, Point hi) {
  return {{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
}

/// Regular polygon inscribed in a circle, first vertex at angle 0.
inline ConvexPolygon inscribed_polygon(const CircleShape& c, int sides) {
  ConvexPolygon v;
  v.reserve(static_cast<std::size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    const double a = 2.0 * kPi * i / sides;
    v.push_back(c.center + c.radius * direction(a));
  }
  return v;
}

/// Andrew's monotone chain; returns the hull counterclockwise without
/// collinear points.
inline ConvexPolygon convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  ConvexPolygon hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

/// Centres at which a length x width house rotated by theta touches or
/// avoids `placed`: the boundary of this polygon is the contact locus.
inline ConvexPolygon no_fit_polygon(const PlacedRect& placed, double length, double width,
                                    double theta) {
  const auto fixed = rect_corners(placed);
  const auto moving = corner_offsets(length, width, theta);
  std::vector<Point> sums;
  sums.reserve(16);
  for (const auto& f : fixed) {
    for (const auto& m : moving) sums.push_back(f - m);
  }
  return convex_hull(std::move(sums));
}

/// Depth of p inside a convex polygon: the smallest distance to an edge line,
/// positive inside.
inline double interior_depth(const ConvexPolygon& poly, Point p) {
  double depth = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i];
    const Point e = poly[(i + 1) % poly.size()] - a;
    depth = std::min(depth, cross(e, p - a) / norm(e));
  }
  return depth;
}

/// A convex polygon with precomputed unit inward edge normals and bounding
/// box, for repeated depth queries.
struct Obstacle {
  ConvexPolygon vertices;
  std::vector<Point> normals;
  std::vector<double> offsets;  // depth(p) = min_i dot(normals[i], p) - offsets[i]
  Point lo{}, hi{};

  explicit Obstacle(ConvexPolygon v) : vertices(std::move(v)) {
    const std::size_t m = vertices.size();
    normals.reserve(m);
    offsets.reserve(m);
    lo = hi = m ? vertices[0] : Point{};
    for (std::size_t i = 0; i < m; ++i) {
      const Point a = vertices[i];
      const Point e = vertices[(i + 1) % m] - a;
      const Point n = (1.0 / norm(e)) * perp(e);
      normals.push_back(n);
      offsets.push_back(dot(n, a));
      lo = {std::min(lo.x, a.x), std::min(lo.y, a.y)};
      hi = {std::max(hi.x, a.x), std::max(hi.y, a.y)};
    }
  }

  double depth(Point p) const {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < normals.size(); ++i) d = std::min(d, dot(normals[i], p) - offsets[i]);
    return d;
  }

  /// True when p is deeper than tol inside.
  bool contains(Point p, double tol) const {
    if (p.x <= lo.x + tol || p.x >= hi.x - tol || p.y <= lo.y + tol || p.y >= hi.y - tol) return false;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (dot(normals[i], p) - offsets[i] <= tol) return false;
    }
    return true;
  }
};

/// Half-planes {c : dot(n, c) >= offset} whose intersection is the set of
/// centres keeping the rotated house inside the wall. Circles are replaced by
/// an inscribed polygon, which only ever shrinks the region.
struct InnerFit {
  std::vector<Point> normals;
  std::vector<double> offsets;

  static constexpr int kCircleSides = 4096;

  InnerFit(const ConvexContainer& c, double length, double width, double theta) {
    const auto corners = corner_offsets(length, width, theta);
    const ConvexPolygon walls =
        c.is_circle() ? inscribed_polygon(c.as_circle(), kCircleSides) : c.vertices();
    normals.reserve(walls.size());
    offsets.reserve(walls.size());
    for (std::size_t i = 0; i < walls.size(); ++i) {
      const Point a = walls[i];
      const Point e = walls[(i + 1) % walls.size()] - a;
      const Point n = (1.0 / norm(e)) * perp(e);
      double lowest = std::numeric_limits<double>::infinity();
      for (const auto& k : corners) lowest = std::min(lowest, dot(n, k));
      normals.push_back(n);
      offsets.push_back(dot(n, a) - lowest);
    }
  }

  /// The region clipped to an axis-aligned window.
  ConvexPolygon region(Point lo, Point hi) const {
    ConvexPolygon poly = box_polygon(lo, hi);
    const auto box = poly;
    for (std::size_t i = 0; i < normals.size() && !poly.empty(); ++i) {
      bool redundant = true;
      for (const auto& b : box) {
        if (dot(normals[i], b) < offsets[i]) {
          redundant = false;
          break;
        }
      }
      if (!redundant) poly = clip_halfplane(poly, normals[i], offsets[i]);
    }
    return poly;
  }
};

/// Lexicographic placement objective: minimise dot(primary, p), then
/// dot(secondary, p). Primary values closer than `resolution` tie.
struct Gravity {
  Point primary{0.0, 1.0};
  Point secondary{1.0, 0.0};
  double resolution = 1e-7;

  static Gravity bottom_left() { return {}; }
};

namespace detail {

struct Segment {
  Point a, b;
  Point lo, hi;
  int owner;
};

inline Segment make_segment(Point a, Point b, int owner) {
  return {a, b, {std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)},
          owner};
}

inline std::optional<Point> intersect(const Segment& s, const Segment& t) {
  const Point r = s.b - s.a;
  const Point q = t.b - t.a;
  const double den = cross(r, q);
  if (std::abs(den) <= 1e-12 * norm(r) * norm(q)) return std::nullopt;
  const Point w = t.a - s.a;
  const double u = cross(w, q) / den;
  const double v = cross(w, r) / den;
  constexpr double kSlack = 1e-9;
  if (u < -kSlack || u > 1.0 + kSlack || v < -kSlack || v > 1.0 + kSlack) return std::nullopt;
  return s.a + u * r;
}

}  // namespace detail

/// Extreme feasible centre of `region` outside every obstacle interior
/// (obstacle depth <= tol), or nothing when the feasible set is empty.
/// `work` is incremented by the number of candidate tests performed.
inline std::optional<Point> find_position(const ConvexPolygon& region,
                                          std::span<const Obstacle> obstacles,
                                          const Gravity& gravity, double tol,
                                          long long* work = nullptr) {
  if (region.size() < 3) return std::nullopt;
  std::vector<detail::Segment> segs;
  std::size_t total = region.size();
  for (const auto& o : obstacles) total += o.vertices.size();
  segs.reserve(total);
  std::vector<Point> candidates;
  candidates.reserve(total * 4);

  const Obstacle area(region);
  const double pad = 1e-6;
  auto add_poly = [&](const ConvexPolygon& poly, int owner) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      auto seg = detail::make_segment(poly[i], poly[(i + 1) % poly.size()], owner);
      // Segments away from the region cannot produce candidates in it.
      if (seg.hi.x < area.lo.x - pad || seg.lo.x > area.hi.x + pad || seg.hi.y < area.lo.y - pad ||
          seg.lo.y > area.hi.y + pad) {
        continue;
      }
      segs.push_back(seg);
      candidates.push_back(poly[i]);
    }
  };
  add_poly(region, -1);
  for (std::size_t k = 0; k < obstacles.size(); ++k) {
    add_poly(obstacles[k].vertices, static_cast<int>(k));
  }

  std::sort(segs.begin(), segs.end(),
            [](const detail::Segment& s, const detail::Segment& t) { return s.lo.x < t.lo.x; });
  long long tests = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size() && segs[j].lo.x <= segs[i].hi.x; ++j) {
      ++tests;
      if (segs[i].owner == segs[j].owner) continue;
      if (segs[j].lo.y > segs[i].hi.y || segs[j].hi.y < segs[i].lo.y) continue;
      if (auto p = detail::intersect(segs[i], segs[j])) candidates.push_back(*p);
    }
  }

  struct Keyed {
    double primary;
    double secondary;
    Point p;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(candidates.size());
  for (const auto& p : candidates) {
    if (area.depth(p) < -tol) continue;
    keyed.push_back({std::round(dot(gravity.primary, p) / gravity.resolution),
                     dot(gravity.secondary, p), p});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.primary != b.primary) return a.primary < b.primary;
    if (a.secondary != b.secondary) return a.secondary < b.secondary;
    if (a.p.y != b.p.y) return a.p.y < b.p.y;
    return a.p.x < b.p.x;
  });
  tests += static_cast<long long>(candidates.size()) * 4;
  for (const auto& k : keyed) {
    bool free = true;
    for (const auto& o : obstacles) {
      ++tests;
      if (o.contains(k.p, tol)) {
        free = false;
        break;
      }
    }
    if (free) {
      if (work) *work += tests;
      return k.p;
    }
  }
  if (work) *work += tests;
  return std::nullopt;
}

/// Parameter interval [t0, t1] of the line o + t*d inside a convex polygon
/// shrunk by `inset` (every edge pushed inward by that distance).
inline std::optional<std::pair<double, double>> line_interval(const ConvexPolygon& poly, Point o,
                                                              Point d, double inset) {
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i];
    const Point e = poly[(i + 1) % poly.size()] - a;
    const Point n = (1.0 / norm(e)) * perp(e);  // inward
    // dot(n, o + t d - a) >= inset
    const double base = dot(n, o - a) - inset;
    const double rate = dot(n, d);
    if (rate == 0.0) {
      if (base < 0.0) return std::nullopt;
      continue;
    }
    const double t = -base / rate;
    if (rate > 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return std::nullopt;
  }
  return std::pair{t0, t1};
}

/// Parameter interval of o + t*d keeping a house with the given corner
/// offsets inside the wall (exact for circles).
inline std::optional<std::pair<double, double>> wall_interval(const ConvexContainer& c,
                                                              const std::array<Point, 4>& corners,
                                                              Point o, Point d) {
  if (c.is_polygon()) {
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    for (const auto& k : corners) {
      auto iv = line_interval(c.vertices(), o + k, d, 0.0);
      if (!iv) return std::nullopt;
      t0 = std::max(t0, iv->first);
      t1 = std::min(t1, iv->second);
    }
    if (t0 > t1) return std::nullopt;
    return std::pair{t0, t1};
  }
  const auto& circ = c.as_circle();
  const double dd = dot(d, d);
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  for (const auto& k : corners) {
    const Point w = o + k - circ.center;
    const double b = dot(w, d) / dd;
    const double cc = (dot(w, w) - circ.radius * circ.radius) / dd;
    const double disc = b * b - cc;
    if (disc < 0.0) return std::nullopt;
    const double root = std::sqrt(disc);
    t0 = std::max(t0, -b - root);
    t1 = std::min(t1, -b + root);
  }
  if (t0 > t1) return std::nullopt;
  return std::pair{t0, t1};
}

/// Smallest t in [t_min, t_max] such that o + t*d lies in the wall interval
/// and outside every obstacle interior deeper than tol.
inline std::optional<double> slide_along(std::pair<double, double> allowed,
                                         std::span<const Obstacle> obstacles, Point o, Point d,
                                         double tol) {
  std::vector<std::pair<double, double>> blocked;
  blocked.reserve(obstacles.size());
  for (const auto& ob : obstacles) {
    if (auto iv = line_interval(ob.vertices, o, d, tol); iv && iv->first < iv->second) {
      blocked.push_back(*iv);
    }
  }
  std::sort(blocked.begin(), blocked.end());
  double t = allowed.first;
  for (const auto& [s, e] : blocked) {
    if (s >= t) break;
    if (e > t) t = e;
  }
  if (t > allowed.second) return std::nullopt;
  return t;
}

}  // namespace civitas
