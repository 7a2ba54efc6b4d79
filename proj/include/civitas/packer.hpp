// Anytime packing of identical houses into a convex city:
//
//   best_offset_rows -> edge_fill -> local_search
//
// Rows fill horizontal strips exactly (strip widths come from the wall's
// cross-sections), edge fill pushes rotated houses in from the wall into the
// leftover gaps, and the local search ruins a cluster of houses and recreates
// it with exact extreme-point placement.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "civitas/alcuin.hpp"
#include "civitas/geometry.hpp"
#include "civitas/layout.hpp"
#include "civitas/placement.hpp"
#include "civitas/rng.hpp"
#include "civitas/spatial_grid.hpp"

namespace civitas {

/// Containment slack and permitted penetration used when the solver accepts a
/// house. Kept two orders of magnitude below the default verification
/// tolerance so solver output also verifies at 1e-7.
inline constexpr double kSolverEps = 1e-8;
/// Obstacle depth accepted by candidate search; the solver check above is the
/// one that decides.
inline constexpr double kCandidateEps = 1e-9;

enum class RowMode { horizontal, vertical, mixed };
enum class XAlignment { left, right, centered };

inline std::string_view to_string(RowMode m) {
  switch (m) {
    case RowMode::horizontal: return "horizontal";
    case RowMode::vertical: return "vertical";
    case RowMode::mixed: return "mixed";
  }
  return "?";
}

struct SolverConfig {
  std::uint64_t seed = 0;
  std::int64_t budget_ms = 5000;
  /// Resolution of the row-grid offset sweep, feet.
  double offset_step = 0.5;
  /// Extra house rotations; empty means the wall's edge directions and their
  /// perpendiculars. 0 and pi/2 are always included.
  std::vector<double> angle_candidates;
  bool enable_local_search = true;
  /// Deterministic stand-in for wall time: the local search stops after
  /// budget_ms * work_per_ms candidate tests.
  double work_per_ms = 30000.0;
  /// When set, run exactly this many local-search iterations instead.
  std::optional<std::int64_t> iterations;
  /// Angular spacing of the inward slides along a circular wall, degrees.
  double boundary_step_deg = 1.0;

  void validate() const {
    if (budget_ms <= 0) throw std::invalid_argument("budget_ms must be positive");
    if (!(offset_step > 0.0)) throw std::invalid_argument("offset_step must be positive");
    if (!(work_per_ms > 0.0)) throw std::invalid_argument("work_per_ms must be positive");
    if (!(boundary_step_deg > 0.0)) throw std::invalid_argument("boundary_step_deg must be positive");
    if (iterations && *iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  }
};

/// Houses ordered by lower y, then lower x, then smaller theta.
inline void sort_houses(std::vector<PlacedRect>& houses) {
  std::sort(houses.begin(), houses.end(), [](const PlacedRect& a, const PlacedRect& b) {
    if (a.center().y != b.center().y) return a.center().y < b.center().y;
    if (a.center().x != b.center().x) return a.center().x < b.center().x;
    return a.theta() < b.theta();
  });
}

/// The rotations tried by edge fill and local search, sorted and distinct.
inline std::vector<double> candidate_angles(const ConvexContainer& c, const SolverConfig& config) {
  std::vector<double> raw{0.0, kHalfPi};
  if (!config.angle_candidates.empty()) {
    raw.insert(raw.end(), config.angle_candidates.begin(), config.angle_candidates.end());
  } else if (c.is_polygon()) {
    const auto& v = c.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point e = v[(i + 1) % v.size()] - v[i];
      const double a = std::atan2(e.y, e.x);
      raw.push_back(a);
      raw.push_back(a + kHalfPi);
    }
  }
  std::vector<double> out;
  for (double a : raw) out.push_back(quantize_angle(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Row packing

struct StripFill {
  std::size_t count = 0;
  double left = 0.0;
  double right = 0.0;
};

/// How many items of the given width fit side by side in the strip.
inline StripFill fill_strip(const ConvexContainer& c, double y_low, double height, double item_width) {
  const auto iv = strip_interval(c, y_low, y_low + height);
  if (!iv) return {};
  const double span = iv->second - iv->first;
  return {static_cast<std::size_t>(std::floor(span / item_width)), iv->first, iv->second};
}

struct RowPlan {
  double y_low;
  bool vertical;  // long side vertical, strip height = house length
};

namespace detail {

inline double row_height(const HouseDimensions& h, bool vertical) { return vertical ? h.length : h.width; }
inline double item_width(const HouseDimensions& h, bool vertical) { return vertical ? h.width : h.length; }

/// Best stack of rows when every row independently picks its orientation:
/// rows are stacked without gaps from y0, and with a horizontal and b vertical
/// rows below it the next row starts at y0 + a*W + b*L. Dynamic programming
/// over (a, b) gives the maximum total count exactly.
inline std::pair<std::size_t, std::vector<RowPlan>> mixed_rows(const ProblemInstance& inst, double y0) {
  const auto& h = inst.house;
  const auto [ymin, ymax] = inst.container.y_extent();
  const double span = ymax - y0;
  if (span < h.width) return {0, {}};
  const int max_a = static_cast<int>(std::floor(span / h.width));
  const int max_b = static_cast<int>(std::floor(span / h.length));
  const int cols = max_b + 1;
  constexpr std::int64_t kUnreachable = -1;
  std::vector<std::int64_t> best(static_cast<std::size_t>((max_a + 1) * cols), kUnreachable);
  std::vector<std::int8_t> last(best.size(), -1);  // 0 horizontal, 1 vertical
  auto at = [&](int a, int b) -> std::size_t { return static_cast<std::size_t>(a * cols + b); };
  auto base = [&](int a, int b) { return y0 + a * h.width + b * h.length; };
  best[at(0, 0)] = 0;
  std::int64_t top = 0;
  int top_a = 0, top_b = 0;
  for (int a = 0; a <= max_a; ++a) {
    for (int b = 0; b <= max_b; ++b) {
      if (a == 0 && b == 0) continue;
      if (base(a, b) > ymax) continue;
      std::int64_t value = kUnreachable;
      std::int8_t choice = -1;
      if (a > 0 && best[at(a - 1, b)] != kUnreachable) {
        const auto n = fill_strip(inst.container, base(a - 1, b), h.width, h.length).count;
        value = best[at(a - 1, b)] + static_cast<std::int64_t>(n);
        choice = 0;
      }
      if (b > 0 && best[at(a, b - 1)] != kUnreachable) {
        const auto n = fill_strip(inst.container, base(a, b - 1), h.length, h.width).count;
        const auto v = best[at(a, b - 1)] + static_cast<std::int64_t>(n);
        if (v > value) {
          value = v;
          choice = 1;
        }
      }
      best[at(a, b)] = value;
      last[at(a, b)] = choice;
      if (value > top) {
        top = value;
        top_a = a;
        top_b = b;
      }
    }
  }
  std::vector<RowPlan> rows;
  for (int a = top_a, b = top_b; a > 0 || b > 0;) {
    if (last[at(a, b)] == 0) {
      --a;
      rows.push_back({base(a, b), false});
    } else {
      --b;
      rows.push_back({base(a, b), true});
    }
  }
  std::reverse(rows.begin(), rows.end());
  return {static_cast<std::size_t>(top), std::move(rows)};
}

inline std::vector<RowPlan> uniform_rows(const ProblemInstance& inst, double y0, bool vertical) {
  const auto [ymin, ymax] = inst.container.y_extent();
  const double height = row_height(inst.house, vertical);
  std::vector<RowPlan> rows;
  for (int k = 0;; ++k) {
    const double y = y0 + k * height;
    if (y + height > ymax) break;
    rows.push_back({y, vertical});
  }
  return rows;
}

inline std::vector<RowPlan> plan_rows(const ProblemInstance& inst, RowMode mode, double y_offset) {
  const double y0 = inst.container.y_extent().first + y_offset;
  switch (mode) {
    case RowMode::horizontal: return uniform_rows(inst, y0, false);
    case RowMode::vertical: return uniform_rows(inst, y0, true);
    case RowMode::mixed: return mixed_rows(inst, y0).second;
  }
  return {};
}

inline std::size_t count_rows(const ProblemInstance& inst, const std::vector<RowPlan>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) {
    n += fill_strip(inst.container, r.y_low, row_height(inst.house, r.vertical),
                    item_width(inst.house, r.vertical))
             .count;
  }
  return n;
}

}  // namespace detail

/// Fills the given rows; each strip holds as many houses as its interval
/// allows, aligned as requested.
inline Layout place_rows(const ProblemInstance& inst, const std::vector<RowPlan>& rows, XAlignment align) {
  Layout out{inst, {}, {}};
  const auto& h = inst.house;
  for (const auto& r : rows) {
    const double height = detail::row_height(h, r.vertical);
    const double w = detail::item_width(h, r.vertical);
    const auto fill = fill_strip(inst.container, r.y_low, height, w);
    if (fill.count == 0) continue;
    const double used = static_cast<double>(fill.count) * w;
    double x0 = fill.left;
    if (align == XAlignment::right) x0 = fill.right - used;
    if (align == XAlignment::centered) x0 = fill.left + 0.5 * (fill.right - fill.left - used);
    for (std::size_t i = 0; i < fill.count; ++i) {
      const Point c{x0 + (static_cast<double>(i) + 0.5) * w, r.y_low + 0.5 * height};
      out.houses.push_back(make_house(h, c, r.vertical ? kHalfPi : 0.0));
    }
  }
  sort_houses(out.houses);
  return out;
}

/// Row packing from the bottom of the city upward, starting y_offset above
/// its lowest point. Horizontal rows are one house width tall, vertical rows
/// one house length; mixed chooses the orientation of every row so that the
/// stack holds the most houses.
inline Layout pack_rows(const ProblemInstance& inst, RowMode mode, XAlignment align, double y_offset) {
  if (!(y_offset >= 0.0)) throw std::invalid_argument("pack_rows: y_offset must be >= 0");
  Layout out = place_rows(inst, detail::plan_rows(inst, mode, y_offset), align);
  out.provenance.stages.push_back({"rows", static_cast<std::int64_t>(out.count()), 0});
  return out;
}

/// Sweeps the row grid offset in steps of config.offset_step below one row
/// height for horizontal, vertical and mixed rows; returns the fullest
/// layout, preferring the smaller offset and then that mode order.
inline Layout best_offset_rows(const ProblemInstance& inst, const SolverConfig& config) {
  config.validate();
  const auto& h = inst.house;
  std::size_t best_count = 0;
  double best_offset = 0.0;
  RowMode best_mode = RowMode::horizontal;
  bool found = false;
  for (RowMode mode : {RowMode::horizontal, RowMode::vertical, RowMode::mixed}) {
    const double period = mode == RowMode::horizontal ? h.width : h.length;
    for (int k = 0;; ++k) {
      const double off = k * config.offset_step;
      if (off >= period) break;
      const auto n = detail::count_rows(inst, detail::plan_rows(inst, mode, off));
      if (!found || n > best_count || (n == best_count && off < best_offset)) {
        best_count = n;
        best_offset = off;
        best_mode = mode;
        found = true;
      }
    }
  }
  Layout out = pack_rows(inst, best_mode, XAlignment::centered, best_offset);
  out.provenance.seed = config.seed;
  out.provenance.budget_ms = config.budget_ms;
  out.provenance.stages.back().name = "rows/" + std::string(to_string(best_mode));
  return out;
}

// ---------------------------------------------------------------------------
// Incremental packing state shared by edge fill and local search

class PackingState {
 public:
  PackingState(const ProblemInstance& inst, std::vector<PlacedRect> houses)
      : inst_(inst), houses_(std::move(houses)), grid_(inst.house.diagonal()) {
    for (std::size_t i = 0; i < houses_.size(); ++i) grid_.insert(i, houses_[i].center());
  }

  const ProblemInstance& instance() const { return inst_; }
  const std::vector<PlacedRect>& houses() const { return houses_; }
  std::size_t size() const { return houses_.size(); }
  long long work() const { return work_; }
  void add_work(long long w) { work_ += w; }

  std::vector<std::size_t> near(Point lo, Point hi) const {
    auto ids = grid_.query(lo, hi);
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  /// Authoritative feasibility test on the quantized house.
  bool fits(const PlacedRect& r) const {
    const Tolerance tol(kSolverEps);
    if (!rect_in_container(inst_.container, r, tol)) return false;
    const double reach = inst_.house.diagonal();
    const Point c = r.center();
    bool ok = true;
    grid_.for_each_in({c.x - reach, c.y - reach}, {c.x + reach, c.y + reach}, [&](std::size_t id) {
      if (ok && rects_overlap(r, houses_[id], tol)) ok = false;
    });
    return ok;
  }

  std::size_t add(const PlacedRect& r) {
    houses_.push_back(r);
    grid_.insert(houses_.size() - 1, r.center());
    return houses_.size() - 1;
  }

  /// Swap-removes house i; the last house takes its index.
  PlacedRect remove(std::size_t i) {
    PlacedRect gone = houses_[i];
    const std::size_t last = houses_.size() - 1;
    grid_.erase(i, gone.center());
    if (i != last) {
      grid_.erase(last, houses_[last].center());
      houses_[i] = houses_[last];
      grid_.insert(i, houses_[i].center());
    }
    houses_.pop_back();
    return gone;
  }

  /// No-fit polygons, for a house at `theta`, of every house that could reach
  /// the window.
  std::vector<Obstacle> obstacles(Point lo, Point hi, double theta) {
    const double reach = inst_.house.diagonal();
    std::vector<Obstacle> out;
    for (std::size_t id : near({lo.x - reach, lo.y - reach}, {hi.x + reach, hi.y + reach})) {
      out.emplace_back(no_fit_polygon(houses_[id], inst_.house.length, inst_.house.width, theta));
    }
    work_ += static_cast<long long>(out.size()) * 4;
    return out;
  }

  const InnerFit& inner_fit(double theta) {
    auto it = fits_.find(theta);
    if (it == fits_.end()) {
      it = fits_.emplace(theta, InnerFit(inst_.container, inst_.house.length, inst_.house.width, theta)).first;
    }
    return it->second;
  }

  /// Extreme feasible house in the window under the gravity, over the given
  /// rotations; ties go to the earlier rotation.
  std::optional<PlacedRect> best_insertion(Point lo, Point hi, const std::vector<double>& angles,
                                           const Gravity& g) {
    std::optional<PlacedRect> best;
    std::pair<double, double> best_key{};
    for (double theta : angles) {
      const ConvexPolygon region = inner_fit(theta).region(lo, hi);
      work_ += 8;
      if (region.size() < 3) continue;
      const auto obs = obstacles(lo, hi, theta);
      auto p = find_position(region, obs, g, kCandidateEps, &work_);
      if (!p) continue;
      const PlacedRect r = make_house(inst_.house, *p, theta);
      if (!fits(r)) continue;
      const std::pair<double, double> key{std::round(dot(g.primary, *p) / g.resolution),
                                          dot(g.secondary, *p)};
      if (!best || key < best_key) {
        best = r;
        best_key = key;
      }
    }
    return best;
  }

  Layout to_layout(const Layout& like) const {
    Layout out{inst_, houses_, like.provenance};
    sort_houses(out.houses);
    return out;
  }

 private:
  ProblemInstance inst_;
  std::vector<PlacedRect> houses_;
  SpatialGrid grid_;
  std::map<double, InnerFit> fits_;
  long long work_ = 0;
};

// ---------------------------------------------------------------------------
// Edge fill

namespace detail {

/// Slides a house at `theta` from `foot` (on the wall) along the inward
/// direction `inward` and inserts it at the first feasible position.
inline bool slide_in(PackingState& st, Point foot, Point inward, double theta) {
  const auto& h = st.instance().house;
  const auto corners = corner_offsets(h.length, h.width, theta);
  auto wall = wall_interval(st.instance().container, corners, foot, inward);
  if (!wall) return false;
  const double t0 = std::max(0.0, wall->first);
  const double t1 = std::min(wall->second, t0 + 2.0 * h.length);
  if (t0 > t1) return false;
  const Point a = foot + t0 * inward;
  const Point b = foot + t1 * inward;
  const Point lo{std::min(a.x, b.x), std::min(a.y, b.y)};
  const Point hi{std::max(a.x, b.x), std::max(a.y, b.y)};
  const auto obs = st.obstacles(lo, hi, theta);
  const auto t = slide_along({t0, t1}, obs, foot, inward, kCandidateEps);
  st.add_work(static_cast<long long>(obs.size()));
  if (!t) return false;
  const PlacedRect r = make_house(h, foot + *t * inward, theta);
  if (!st.fits(r)) return false;
  st.add(r);
  return true;
}

}  // namespace detail

/// Inserts rotated houses along the wall. Polygons: for every edge and
/// candidate rotation, houses slide inward along the edge normal from foot
/// points spaced offset_step apart. Circles: every boundary_step_deg, a house
/// with its long side tangent, then one with it radial, slides toward the
/// centre. First fit, in boundary order; never removes a house.
inline Layout edge_fill(const Layout& layout, const SolverConfig& config) {
  config.validate();
  const auto& inst = layout.instance;
  PackingState st(inst, layout.houses);
  const std::size_t before = st.size();
  if (inst.container.is_polygon()) {
    const auto angles = candidate_angles(inst.container, config);
    const auto& v = inst.container.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point a = v[i];
      const Point e = v[(i + 1) % v.size()] - a;
      const double len = norm(e);
      const Point t = (1.0 / len) * e;
      const Point inward = perp(t);
      for (double theta : angles) {
        for (int k = 0;; ++k) {
          const double s = k * config.offset_step;
          if (s > len) break;
          detail::slide_in(st, a + s * t, inward, theta);
        }
      }
    }
  } else {
    const auto& circ = inst.container.as_circle();
    const int steps = static_cast<int>(std::floor(360.0 / config.boundary_step_deg));
    for (int k = 0; k < steps; ++k) {
      const double phi = k * config.boundary_step_deg * kPi / 180.0;
      const Point u = direction(phi);
      const Point foot = circ.center + circ.radius * u;
      for (double theta : {phi + kHalfPi, phi}) {
        detail::slide_in(st, foot, Point{} - u, quantize_angle(theta));
      }
    }
  }
  Layout out = st.to_layout(layout);
  out.provenance.stages.push_back({"edge_fill", static_cast<std::int64_t>(out.count()),
                                   static_cast<std::int64_t>(out.count() - before)});
  return out;
}

// ---------------------------------------------------------------------------
// Ruin and recreate

namespace detail {

inline std::vector<Gravity> gravities_for(const ConvexContainer& c) {
  std::vector<Gravity> g{{{0, 1}, {1, 0}}, {{0, 1}, {-1, 0}}, {{0, -1}, {1, 0}}, {{0, -1}, {-1, 0}},
                         {{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{-1, 0}, {0, 1}}, {{-1, 0}, {0, -1}}};
  if (c.is_polygon()) {
    const auto& v = c.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point e = v[(i + 1) % v.size()] - v[i];
      const Point t = (1.0 / norm(e)) * e;
      g.push_back({perp(t), t});
      g.push_back({perp(t), Point{} - t});
    }
  }
  return g;
}

}  // namespace detail

/// Called after every local-search iteration with its index and the count.
using IterationObserver = std::function<void(std::int64_t, std::size_t)>;

/// Ruin and recreate. Each iteration removes a cluster of k in [1, 30]
/// neighbouring houses around a random house, then refills the cluster's
/// window one house at a time at the extreme feasible position under a
/// random gravity, first over a random subset of rotations and then over all
/// of them until nothing more fits. The result is kept iff the count did not
/// drop. Deterministic for a given seed and iteration or work budget.
inline Layout local_search(const Layout& layout, const SolverConfig& config,
                           const IterationObserver& observer = {}) {
  config.validate();
  const auto& inst = layout.instance;
  PackingState st(inst, layout.houses);
  ShiftRegisterRng rng(config.seed);
  const auto base_angles = candidate_angles(inst.container, config);
  const auto gravities = detail::gravities_for(inst.container);
  const auto [box_lo, box_hi] = inst.container.bounds();
  const double diag = inst.house.diagonal();
  const long long work_budget =
      static_cast<long long>(static_cast<double>(config.budget_ms) * config.work_per_ms);

  std::int64_t iter = 0;
  auto more = [&] {
    if (config.iterations) return iter < *config.iterations;
    return st.work() < work_budget;
  };
  for (; more(); ++iter) {
    const std::size_t n = st.size();
    std::vector<PlacedRect> removed;
    Point lo = box_lo, hi = box_hi;
    if (n > 0) {
      const std::size_t seed_house = rng.below(n);
      const int k = rng.between(1, static_cast<int>(std::min<std::size_t>(30, n)));
      const Point c = st.houses()[seed_house].center();
      // Grow the search box until it holds k houses.
      std::vector<std::size_t> ids;
      for (double r = diag;; r *= 2.0) {
        ids = st.near({c.x - r, c.y - r}, {c.x + r, c.y + r});
        if (ids.size() >= static_cast<std::size_t>(k) || ids.size() == n) break;
      }
      std::vector<std::pair<double, std::size_t>> by_dist;
      for (auto id : ids) by_dist.push_back({norm(st.houses()[id].center() - c), id});
      std::sort(by_dist.begin(), by_dist.end());
      by_dist.resize(std::min<std::size_t>(by_dist.size(), static_cast<std::size_t>(k)));
      std::vector<std::size_t> victims;
      for (const auto& [d, id] : by_dist) victims.push_back(id);
      std::sort(victims.rbegin(), victims.rend());  // remove from the back first
      lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
      hi = {-lo.x, -lo.y};
      for (auto id : victims) {
        const Point p = st.houses()[id].center();
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
        removed.push_back(st.remove(id));
      }
      lo = {std::max(box_lo.x, lo.x - diag), std::max(box_lo.y, lo.y - diag)};
      hi = {std::min(box_hi.x, hi.x + diag), std::min(box_hi.y, hi.y + diag)};
    }

    std::vector<double> angles = base_angles;
    if (inst.container.is_circle()) {
      // Tangent and radial rotations at the wall nearest the window.
      const Point mid = 0.5 * (lo + hi);
      const Point rel = mid - inst.container.as_circle().center;
      if (norm(rel) > 0.0) {
        const double phi = std::round(std::atan2(rel.y, rel.x) * 180.0 / kPi) * kPi / 180.0;
        angles.push_back(quantize_angle(phi));
        angles.push_back(quantize_angle(phi + kHalfPi));
        std::sort(angles.begin(), angles.end());
        angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
      }
    }
    Gravity g = gravities[rng.below(gravities.size())];
    if (inst.container.is_circle() && rng.below(2) == 0) {
      const Point rel = 0.5 * (lo + hi) - inst.container.as_circle().center;
      if (norm(rel) > 0.0) {
        const Point u = (1.0 / norm(rel)) * rel;
        g = {Point{} - u, rng.below(2) ? perp(u) : Point{} - perp(u)};
      }
    }
    std::vector<double> subset;
    for (double a : angles) {
      if (rng.below(2)) subset.push_back(a);
    }
    if (subset.empty()) subset.push_back(angles[rng.below(angles.size())]);

    std::vector<std::size_t> inserted;
    for (const auto* pool : {&subset, &angles}) {
      while (auto r = st.best_insertion(lo, hi, *pool, g)) inserted.push_back(st.add(*r));
    }

    if (st.size() < n) {
      // Roll back: drop the new houses (highest index first) and restore.
      std::sort(inserted.rbegin(), inserted.rend());
      for (auto id : inserted) st.remove(id);
      for (const auto& r : removed) st.add(r);
    }
    if (observer) observer(iter, st.size());
  }

  Layout out = st.to_layout(layout);
  out.provenance.stages.push_back(
      {"local_search", static_cast<std::int64_t>(out.count()), iter});
  return out;
}

/// Full pipeline; the provenance records the count after every stage.
inline Layout solve(const ProblemInstance& inst, const SolverConfig& config) {
  config.validate();
  Layout rows = best_offset_rows(inst, config);
  Layout filled = edge_fill(rows, config);
  if (!config.enable_local_search) return filled;
  return local_search(filled, config);
}

}  // namespace civitas
