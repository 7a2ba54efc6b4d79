#include <gtest/gtest.h>

#include <cmath>

#include "civitas/alcuin.hpp"

using namespace civitas;

namespace {

std::vector<std::int64_t> results(const ArithmeticTrace& t) {
  std::vector<std::int64_t> r;
  for (const auto& s : t.steps) r.push_back(s.result);
  return r;
}

}  // namespace

TEST(ProblemId, RoundTrip) {
  for (auto id : {ProblemId::quadrangula, ProblemId::triangula, ProblemId::rotunda}) {
    EXPECT_EQ(parse_problem_id(to_string(id)), id);
  }
  EXPECT_FALSE(parse_problem_id("hexagona"));
}

TEST(Instances, Areas) {
  EXPECT_NEAR(container_area(make_instance("quadrangula").container), 627808.689, 1e-3);
  EXPECT_NEAR(container_area(make_instance("triangula").container), 4018.628, 1e-3);
  const auto r = make_instance("rotunda");
  EXPECT_NEAR(r.container.as_circle().radius, 8000.0 / (2.0 * kPi), 1e-9);
  EXPECT_NEAR(container_area(r.container), 5092958.179, 1e-3);
  EXPECT_THROW(make_instance("nowhere"), std::invalid_argument);
  EXPECT_THROW(make_instance(ProblemId::custom), std::invalid_argument);
}

TEST(Instances, HouseSizes) {
  EXPECT_EQ(make_instance("quadrangula").house, HouseDimensions(40, 30));
  EXPECT_EQ(make_instance("triangula").house, HouseDimensions(20, 10));
  EXPECT_EQ(make_instance("rotunda").house, HouseDimensions(30, 20));
  EXPECT_THROW(HouseDimensions(10, 20), std::invalid_argument);
  EXPECT_THROW(HouseDimensions(10, 0), std::invalid_argument);
}

TEST(Egyptian, Quadrilateral) {
  EXPECT_DOUBLE_EQ(egyptian_quadrilateral_area(1100, 600, 1000, 600), 630000.0);
  EXPECT_DOUBLE_EQ(egyptian_quadrilateral_area(7, 7, 7, 7), 49.0);
  EXPECT_DOUBLE_EQ(egyptian_quadrilateral_area(2, 4, 2, 4), 8.0);
  EXPECT_THROW(egyptian_quadrilateral_area(0, 1, 1, 1), std::invalid_argument);
}

TEST(Egyptian, Triangle) {
  EXPECT_DOUBLE_EQ(egyptian_triangle_area(100, 100, 90), 4500.0);
  EXPECT_DOUBLE_EQ(egyptian_triangle_area(2, 2, 2), 2.0);
  EXPECT_THROW(egyptian_triangle_area(0.0, 2, 2), std::invalid_argument);
  EXPECT_THROW(egyptian_triangle_area(2, 2, -1), std::invalid_argument);
}

TEST(CircleArea, PiThree) {
  EXPECT_NEAR(circle_area_pi3(8000), 5333333.333, 1e-3);
  EXPECT_DOUBLE_EQ(circle_area_pi3(12), 12.0);
  EXPECT_DOUBLE_EQ(circle_area_pi3(6), 3.0);
  EXPECT_THROW(circle_area_pi3(0), std::invalid_argument);
}

TEST(CircleArea, Exact) {
  EXPECT_NEAR(circle_area_exact(8000), 5092958.179, 1e-3);
  EXPECT_NEAR(circle_area_exact(2 * kPi), kPi, 1e-12);
  EXPECT_NEAR(circle_area_exact(4 * kPi), 4 * kPi, 1e-12);
  EXPECT_THROW(circle_area_exact(-1), std::invalid_argument);
}

TEST(MedievalArea, PerShape) {
  EXPECT_DOUBLE_EQ(medieval_area(*make_instance("quadrangula").dims), 630000.0);
  EXPECT_DOUBLE_EQ(medieval_area(*make_instance("triangula").dims), 4500.0);
  EXPECT_NEAR(medieval_area(*make_instance("rotunda").dims), 5333333.333, 1e-3);
}

TEST(MedievalCount, Quadrangula) {
  const auto t = medieval_count(ProblemId::quadrangula);
  EXPECT_TRUE(t.valid());
  EXPECT_EQ(t.final_count, 520);
  EXPECT_EQ(results(t), (std::vector<std::int64_t>{2100, 1200, 1050, 600, 26, 20, 520}));
}

TEST(MedievalCount, Triangula) {
  const auto t = medieval_count(ProblemId::triangula);
  EXPECT_TRUE(t.valid());
  EXPECT_EQ(t.final_count, 20);
  EXPECT_EQ(results(t), (std::vector<std::int64_t>{200, 100, 45, 40, 5, 4, 20}));
  const auto& adj = t.steps[3];
  EXPECT_EQ(adj.op, StepOp::adjust);
  EXPECT_EQ(adj.operands, (std::vector<std::int64_t>{45, 40}));
}

TEST(MedievalCount, RotundaAlcuin) {
  const auto t = medieval_count(ProblemId::rotunda);
  EXPECT_TRUE(t.valid());
  EXPECT_EQ(t.final_count, 6400);
  EXPECT_EQ(results(t), (std::vector<std::int64_t>{4800, 3200, 2400, 1600, 80, 80, 6400}));
  EXPECT_EQ(t.steps[0].op, StepOp::proportion_split);
}

TEST(MedievalCount, RotundaFolkerts) {
  const auto t = medieval_count(ProblemId::rotunda, MedievalVariant::folkerts);
  EXPECT_TRUE(t.valid());
  EXPECT_EQ(t.final_count, 8800);
  EXPECT_EQ(results(t), (std::vector<std::int64_t>{2000, 2666, 1000, 1333, 44, 50, 2200, 8800}));
  EXPECT_THROW(medieval_count(ProblemId::triangula, MedievalVariant::folkerts), std::invalid_argument);
}

TEST(MedievalCount, TamperedTraceIsInvalid) {
  auto t = medieval_count(ProblemId::quadrangula);
  t.steps[4].result += 1;
  EXPECT_FALSE(t.valid());
  auto u = medieval_count(ProblemId::triangula);
  u.final_count = 21;
  EXPECT_FALSE(u.valid());
  EXPECT_FALSE(ArithmeticTrace{}.valid());
}

TEST(Evaluate, Operations) {
  EXPECT_EQ(evaluate(StepOp::floor_divide, {1333, 30}), 44);
  EXPECT_EQ(evaluate(StepOp::halve, {2666}), 1333);
  EXPECT_EQ(evaluate(StepOp::proportion_split, {8000, 3, 2}), 4800);
  EXPECT_EQ(evaluate(StepOp::subtract, {9, 4}), 5);
  EXPECT_FALSE(evaluate(StepOp::floor_divide, {1, 0}));
  EXPECT_FALSE(evaluate(StepOp::add, {1}));
}

TEST(HouseAreaBound, Instances) {
  EXPECT_EQ(house_area_bound(make_instance("quadrangula")), 523);
  EXPECT_EQ(house_area_bound(make_instance("triangula")), 20);
  EXPECT_EQ(house_area_bound(make_instance("rotunda")), 8488);
}

TEST(ReferenceCounts, Published) {
  const auto q = *reference_counts(ProblemId::quadrangula);
  EXPECT_EQ(q.best_known, 510);
  EXPECT_EQ(q.singmaster.back(), 519);
  const auto r = *reference_counts(ProblemId::rotunda);
  EXPECT_EQ(r.folkerts, 8800);
  EXPECT_EQ(r.best_known, 8349);
  EXPECT_FALSE(reference_counts(ProblemId::custom));
  // Modern counts never beat the area bound.
  for (auto id : {ProblemId::quadrangula, ProblemId::triangula, ProblemId::rotunda}) {
    const auto ref = *reference_counts(id);
    const auto bound = house_area_bound(make_instance(id));
    EXPECT_LE(ref.best_known, bound);
    for (auto s : ref.singmaster) EXPECT_LE(s, bound);
  }
}
