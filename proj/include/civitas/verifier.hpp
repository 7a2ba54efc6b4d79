// Certificate checking for layouts. Everything is re-derived from the layout
// itself; nothing produced by the solver is trusted.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "civitas/alcuin.hpp"
#include "civitas/geometry.hpp"
#include "civitas/layout.hpp"
#include "civitas/spatial_grid.hpp"

namespace civitas {

enum class ViolationKind { containment, overlap, dimension };

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::containment: return "containment";
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::dimension: return "dimension";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;
  double magnitude;  // feet

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  std::size_t count = 0;
  double density = 0.0;
  std::vector<Violation> violations;
  double max_penetration = 0.0;
  bool passed = true;
};

/// Orders violations by index tuple, then kind.
inline void sort_violations(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    if (a.indices != b.indices) return a.indices < b.indices;
    return a.kind < b.kind;
  });
}

namespace detail {

/// Largest coordinate difference between two containers, or infinity when
/// their kinds or vertex counts differ.
inline double container_mismatch(const ConvexContainer& a, const ConvexContainer& b) {
  if (a.is_circle() != b.is_circle()) return std::numeric_limits<double>::infinity();
  if (a.is_circle()) {
    const auto& ca = a.as_circle();
    const auto& cb = b.as_circle();
    return std::max({std::abs(ca.center.x - cb.center.x), std::abs(ca.center.y - cb.center.y),
                     std::abs(ca.radius - cb.radius)});
  }
  if (a.vertices().size() != b.vertices().size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    worst = std::max({worst, std::abs(a.vertices()[i].x - b.vertices()[i].x),
                      std::abs(a.vertices()[i].y - b.vertices()[i].y)});
  }
  return worst;
}

}  // namespace detail

/// Checks house dimensions, containment and pairwise non-overlap. Pairs are
/// gathered through a uniform grid with cell size equal to the house diagonal,
/// so only houses in adjacent cells reach the separating-axis test.
inline VerificationReport verify(const Layout& layout, Tolerance tol = {}) {
  const auto& inst = layout.instance;
  const auto& houses = layout.houses;
  VerificationReport rep;
  rep.count = houses.size();
  rep.density = static_cast<double>(houses.size()) * inst.house.area() / container_area(inst.container);

  // A named problem must carry that problem's city and house.
  if (inst.id != ProblemId::custom) {
    const auto canonical = make_instance(inst.id);
    double off = detail::container_mismatch(canonical.container, inst.container);
    off = std::max({off, std::abs(canonical.house.length - inst.house.length),
                    std::abs(canonical.house.width - inst.house.width)});
    if (off > tol.eps) rep.violations.push_back({ViolationKind::dimension, {}, off});
  }

  double max_extent = inst.house.diagonal();
  for (std::size_t i = 0; i < houses.size(); ++i) {
    const auto& h = houses[i];
    const double off = std::max(std::abs(h.length() - inst.house.length),
                                std::abs(h.width() - inst.house.width));
    if (off != 0.0) rep.violations.push_back({ViolationKind::dimension, {i}, off});
    max_extent = std::max(max_extent, 2.0 * h.circumradius());
    const double excursion = rect_excursion(inst.container, h);
    if (excursion > tol.eps) rep.violations.push_back({ViolationKind::containment, {i}, excursion});
  }

  SpatialGrid grid(max_extent);
  for (std::size_t i = 0; i < houses.size(); ++i) grid.insert(i, houses[i].center());
  grid.for_each_cell_pair([&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                              bool same_cell) {
    for (std::size_t ia = 0; ia < a.size(); ++ia) {
      for (std::size_t ib = same_cell ? ia + 1 : 0; ib < b.size(); ++ib) {
        const std::size_t i = std::min(a[ia], b[ib]);
        const std::size_t j = std::max(a[ia], b[ib]);
        const double depth = penetration_depth(houses[i], houses[j]);
        rep.max_penetration = std::max(rep.max_penetration, depth);
        if (depth > tol.eps) rep.violations.push_back({ViolationKind::overlap, {i, j}, depth});
      }
    }
  });

  sort_violations(rep.violations);
  rep.passed = rep.violations.empty();
  return rep;
}

inline std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

/// Human-readable summary of a report against the instance's bound and the
/// published reference counts.
inline std::string density_report(const VerificationReport& report, const ProblemInstance& instance) {
  std::ostringstream out;
  const double equivalents = container_area(instance.container) / instance.house.area();
  const auto bound = house_area_bound(instance);
  out << "problem        " << to_string(instance.id) << "\n";
  out << "houses         " << report.count << "\n";
  out << "density        " << format_number(report.density, 5) << "\n";
  out << "house areas    " << format_number(equivalents, 3) << "\n";
  out << "area bound     " << bound << "\n";
  out << "gap to bound   " << bound - static_cast<std::int64_t>(report.count) << "\n";
  if (const auto ref = reference_counts(instance.id)) {
    out << "alcuin         " << ref->alcuin << "\n";
    if (ref->folkerts) out << "folkerts       " << *ref->folkerts << "\n";
    out << "singmaster    ";
    for (auto c : ref->singmaster) out << " " << c;
    out << "\n";
    out << "best known     " << ref->best_known << "\n";
  }
  out << "max penetration " << format_number(report.max_penetration, 9) << "\n";
  out << "violations     " << report.violations.size() << "\n";
  out << "status         " << (report.passed ? "passed" : "FAILED") << "\n";
  return out.str();
}

}  // namespace civitas
