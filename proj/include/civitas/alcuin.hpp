// The three city problems: canonical instances, the medieval arithmetic
// solutions, and the corrected areas and bounds.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "civitas/geometry.hpp"

namespace civitas {

enum class ProblemId { quadrangula, triangula, rotunda, custom };

inline std::string_view to_string(ProblemId id) {
  switch (id) {
    case ProblemId::quadrangula: return "quadrangula";
    case ProblemId::triangula: return "triangula";
    case ProblemId::rotunda: return "rotunda";
    case ProblemId::custom: return "custom";
  }
  return "custom";
}

inline std::optional<ProblemId> parse_problem_id(std::string_view s) {
  if (s == "quadrangula") return ProblemId::quadrangula;
  if (s == "triangula") return ProblemId::triangula;
  if (s == "rotunda") return ProblemId::rotunda;
  if (s == "custom") return ProblemId::custom;
  return std::nullopt;
}

/// Side lengths as the problem states them.
struct Quadrilateral {
  double a, b, c, d;  // a/c and b/d are opposite
};
struct Triangle {
  double a, b;  // legs
  double c;     // front
};
struct Round {
  double ell;  // circumference
};
using CityDimensions = std::variant<Quadrilateral, Triangle, Round>;

struct HouseDimensions {
  double length = 1.0;
  double width = 1.0;

  HouseDimensions() = default;
  HouseDimensions(double l, double w) : length(l), width(w) {
    if (!(w > 0.0) || !(l >= w) || !std::isfinite(l)) {
      throw std::invalid_argument("house needs length >= width > 0");
    }
  }
  double area() const { return length * width; }
  double diagonal() const { return std::hypot(length, width); }
  friend bool operator==(const HouseDimensions&, const HouseDimensions&) = default;
};

struct ProblemInstance {
  ProblemId id = ProblemId::custom;
  ConvexContainer container;
  HouseDimensions house;
  std::optional<CityDimensions> dims;  // absent for custom instances
};

/// The canonical instances, with every coordinate on the 1e-9 ft grid used by
/// layout files:
///   quadrangula  isosceles trapezoid, 1100 ft base, 1000 ft top, 600 ft legs
///   triangula    isosceles triangle, 90 ft base, 100 ft legs
///   rotunda      disk of circumference 8000 ft centred at the origin
inline ProblemInstance make_instance(ProblemId id) {
  switch (id) {
    case ProblemId::quadrangula: {
      const double h = quantize(std::sqrt(600.0 * 600.0 - 50.0 * 50.0));
      return {id,
              ConvexContainer::polygon({{0, 0}, {1100, 0}, {1050, h}, {50, h}}),
              HouseDimensions(40, 30), Quadrilateral{1100, 600, 1000, 600}};
    }
    case ProblemId::triangula: {
      const double h = quantize(std::sqrt(100.0 * 100.0 - 45.0 * 45.0));
      return {id, ConvexContainer::polygon({{0, 0}, {90, 0}, {45, h}}), HouseDimensions(20, 10),
              Triangle{100, 100, 90}};
    }
    case ProblemId::rotunda: {
      const double r = quantize(8000.0 / (2.0 * kPi));
      return {id, ConvexContainer::circle({0, 0}, r), HouseDimensions(30, 20), Round{8000}};
    }
    case ProblemId::custom: break;
  }
  throw std::invalid_argument("make_instance: no canonical instance for this id");
}

inline ProblemInstance make_instance(std::string_view name) {
  const auto id = parse_problem_id(name);
  if (!id || *id == ProblemId::custom) {
    throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
  }
  return make_instance(*id);
}

inline ProblemInstance make_custom_instance(ConvexContainer container, HouseDimensions house) {
  return {ProblemId::custom, std::move(container), house, std::nullopt};
}

namespace detail {
inline void require_positive(std::initializer_list<double> values, const char* what) {
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(what);
  }
}
}  // namespace detail

/// Product of the half sums of opposite sides.
inline double egyptian_quadrilateral_area(double a, double b, double c, double d) {
  detail::require_positive({a, b, c, d}, "egyptian_quadrilateral_area: sides must be positive");
  return (a + c) / 2.0 * ((b + d) / 2.0);
}

/// Half sum of the legs times half the front.
inline double egyptian_triangle_area(double a, double b, double c) {
  detail::require_positive({a, b, c}, "egyptian_triangle_area: sides must be positive");
  return (a + b) / 2.0 * (c / 2.0);
}

/// Circle area from its circumference with pi taken as 3.
inline double circle_area_pi3(double ell) {
  detail::require_positive({ell}, "circle_area_pi3: circumference must be positive");
  return ell * ell / 12.0;
}

inline double circle_area_exact(double ell) {
  detail::require_positive({ell}, "circle_area_exact: circumference must be positive");
  return ell * ell / (4.0 * kPi);
}

/// The area the medieval solution implicitly assumes for each city.
inline double medieval_area(const CityDimensions& dims) {
  if (const auto* q = std::get_if<Quadrilateral>(&dims)) {
    return egyptian_quadrilateral_area(q->a, q->b, q->c, q->d);
  }
  if (const auto* t = std::get_if<Triangle>(&dims)) return egyptian_triangle_area(t->a, t->b, t->c);
  return circle_area_pi3(std::get<Round>(dims).ell);
}

enum class StepOp { add, halve, floor_divide, multiply, subtract, proportion_split, adjust };

inline std::string_view to_string(StepOp op) {
  switch (op) {
    case StepOp::add: return "add";
    case StepOp::halve: return "halve";
    case StepOp::floor_divide: return "floor-divide";
    case StepOp::multiply: return "multiply";
    case StepOp::subtract: return "subtract";
    case StepOp::proportion_split: return "proportion-split";
    case StepOp::adjust: return "adjust";
  }
  return "?";
}

/// One line of a medieval computation. Operand conventions:
///   add, multiply      a, b            -> a + b, a * b
///   subtract           a, b            -> a - b
///   halve              a               -> floor(a / 2)
///   floor_divide       a, b            -> floor(a / b)
///   proportion_split   total, p, q     -> floor(total * p / (p + q))
///   adjust             from, to        -> to (a deliberate change in the text)
struct ArithmeticStep {
  std::string description;
  StepOp op;
  std::vector<std::int64_t> operands;
  std::int64_t result;
};

/// Re-derives a step's result from its operands, or nothing when the operand
/// count does not fit the operation.
inline std::optional<std::int64_t> evaluate(StepOp op, const std::vector<std::int64_t>& x) {
  switch (op) {
    case StepOp::add:
      if (x.size() == 2) return x[0] + x[1];
      break;
    case StepOp::subtract:
      if (x.size() == 2) return x[0] - x[1];
      break;
    case StepOp::multiply:
      if (x.size() == 2) return x[0] * x[1];
      break;
    case StepOp::halve:
      if (x.size() == 1) return x[0] / 2;
      break;
    case StepOp::floor_divide:
      if (x.size() == 2 && x[1] > 0) return x[0] / x[1];
      break;
    case StepOp::proportion_split:
      if (x.size() == 3 && x[1] + x[2] > 0) return x[0] * x[1] / (x[1] + x[2]);
      break;
    case StepOp::adjust:
      if (x.size() == 2) return x[1];
      break;
  }
  return std::nullopt;
}

struct ArithmeticTrace {
  std::vector<ArithmeticStep> steps;
  std::int64_t final_count = 0;

  bool valid() const {
    for (const auto& s : steps) {
      const auto r = evaluate(s.op, s.operands);
      if (!r || *r != s.result) return false;
    }
    return !steps.empty() && steps.back().result == final_count;
  }
};

enum class MedievalVariant { alcuin, folkerts };

namespace detail {

class TraceBuilder {
 public:
  std::int64_t step(StepOp op, std::vector<std::int64_t> operands, std::string description) {
    const auto r = evaluate(op, operands);
    if (!r) throw std::logic_error("malformed arithmetic step");
    trace_.steps.push_back({std::move(description), op, std::move(operands), *r});
    return *r;
  }
  ArithmeticTrace finish() {
    trace_.final_count = trace_.steps.back().result;
    return std::move(trace_);
  }

 private:
  ArithmeticTrace trace_;
};

}  // namespace detail

/// Replays the solution text step by step with integer semantics; every
/// quotient discards its fraction.
inline ArithmeticTrace medieval_count(ProblemId id, MedievalVariant variant = MedievalVariant::alcuin) {
  using enum StepOp;
  detail::TraceBuilder t;
  if (variant == MedievalVariant::folkerts && id != ProblemId::rotunda) {
    throw std::invalid_argument("the folkerts variant exists only for the round city");
  }
  switch (id) {
    case ProblemId::quadrangula: {
      const auto lengths = t.step(add, {1100, 1000}, "join the two long sides");
      const auto sides = t.step(add, {600, 600}, "join the two short sides");
      const auto half_len = t.step(halve, {lengths}, "half of the joined long sides");
      const auto half_side = t.step(halve, {sides}, "half of the joined short sides");
      const auto per_row = t.step(floor_divide, {half_len, 40}, "a fortieth part, for the house length");
      const auto rows = t.step(floor_divide, {half_side, 30}, "a thirtieth part, for the house width");
      t.step(multiply, {rows, per_row}, "houses in the city");
      break;
    }
    case ProblemId::triangula: {
      const auto legs = t.step(add, {100, 100}, "join the two sides");
      const auto half_legs = t.step(halve, {legs}, "half of the joined sides");
      const auto half_front = t.step(halve, {90}, "half of the front");
      const auto front = t.step(adjust, {half_front, 40}, "the text continues with 40 in place of 45");
      const auto per_row = t.step(floor_divide, {half_legs, 20}, "a twentieth part, for the house length");
      const auto rows = t.step(floor_divide, {front, 10}, "a tenth part, for the house width");
      t.step(multiply, {per_row, rows}, "houses in the city");
      break;
    }
    case ProblemId::rotunda: {
      if (variant == MedievalVariant::alcuin) {
        const auto larger = t.step(proportion_split, {8000, 3, 2}, "the circuit split one-and-a-half to one");
        const auto smaller = t.step(proportion_split, {8000, 2, 3}, "the smaller share of the split");
        const auto long_side = t.step(halve, {larger}, "half of the larger share");
        const auto short_side = t.step(halve, {smaller}, "half of the smaller share");
        const auto along = t.step(floor_divide, {long_side, 30}, "thirtieth part, for the house length");
        const auto across = t.step(floor_divide, {short_side, 20}, "twentieth part, for the house width");
        t.step(multiply, {along, across}, "houses in the city");
      } else {
        const auto quarter = t.step(floor_divide, {8000, 4}, "a quarter of the circuit");
        const auto third = t.step(floor_divide, {8000, 3}, "a third of the circuit");
        const auto half_quarter = t.step(halve, {quarter}, "half of the quarter");
        const auto half_third = t.step(halve, {third}, "half of the third");
        const auto along = t.step(floor_divide, {half_third, 30}, "thirtieth part, for the house length");
        const auto across = t.step(floor_divide, {half_quarter, 20}, "twentieth part, for the house width");
        const auto quadrant = t.step(multiply, {along, across}, "houses in one quarter");
        t.step(multiply, {quadrant, 4}, "four quarters");
      }
      break;
    }
    case ProblemId::custom:
      throw std::invalid_argument("no medieval solution for a custom problem");
  }
  return t.finish();
}

/// floor(container area / house area): no packing can hold more.
inline std::int64_t house_area_bound(const ProblemInstance& instance) {
  return static_cast<std::int64_t>(
      std::floor(container_area(instance.container) / instance.house.area()));
}

/// Published counts for the bundled problems.
struct ReferenceCounts {
  std::int64_t alcuin = 0;
  std::optional<std::int64_t> folkerts;
  std::vector<std::int64_t> singmaster;  // ascending; the last is his best
  std::int64_t best_known = 0;
};

inline std::optional<ReferenceCounts> reference_counts(ProblemId id) {
  switch (id) {
    case ProblemId::quadrangula: return ReferenceCounts{520, std::nullopt, {516, 517, 519}, 510};
    case ProblemId::triangula: return ReferenceCounts{20, std::nullopt, {15}, 16};
    case ProblemId::rotunda: return ReferenceCounts{6400, 8800, {8307}, 8349};
    case ProblemId::custom: break;
  }
  return std::nullopt;
}

}  // namespace civitas
