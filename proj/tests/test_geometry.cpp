#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "civitas/alcuin.hpp"
#include "civitas/geometry.hpp"
#include "oracles.hpp"

using namespace civitas;

namespace {

void expect_corner(const std::array<Point, 4>& corners, Point want) {
  for (const auto& c : corners) {
    if (std::abs(c.x - want.x) < 1e-12 && std::abs(c.y - want.y) < 1e-12) return;
  }
  ADD_FAILURE() << "missing corner (" << want.x << ", " << want.y << ")";
}

double signed_area(const std::array<Point, 4>& c) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += cross(c[i], c[(i + 1) % 4]);
  return 0.5 * s;
}

}  // namespace

TEST(RectCorners, AxisAligned) {
  const auto c = rect_corners(PlacedRect({0, 0}, 30, 20, 0));
  for (double sx : {-15.0, 15.0})
    for (double sy : {-10.0, 10.0}) expect_corner(c, {sx, sy});
  EXPECT_NEAR(signed_area(c), 600.0, 1e-9);
}

TEST(RectCorners, QuarterTurnSwapsExtents) {
  const auto c = rect_corners(PlacedRect({0, 0}, 30, 20, kHalfPi));
  for (double sx : {-10.0, 10.0})
    for (double sy : {-15.0, 15.0}) expect_corner(c, {sx, sy});
  EXPECT_GT(signed_area(c), 0.0);
}

TEST(RectCorners, DiamondAtFortyFive) {
  const auto c = rect_corners(PlacedRect({5, 5}, 2, 2, kPi / 4));
  const double r = std::sqrt(2.0);
  expect_corner(c, {5 + r, 5});
  expect_corner(c, {5 - r, 5});
  expect_corner(c, {5, 5 + r});
  expect_corner(c, {5, 5 - r});
}

TEST(RectCorners, CounterclockwiseForAnyAngle) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> a(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const auto c = rect_corners(PlacedRect({a(gen), a(gen)}, 3, 2, a(gen)));
    EXPECT_NEAR(signed_area(c), 6.0, 1e-9);
  }
}

TEST(PlacedRect, RejectsBadExtents) {
  EXPECT_THROW(PlacedRect({0, 0}, 0, 1, 0), std::invalid_argument);
  EXPECT_THROW(PlacedRect({0, 0}, 1, -1, 0), std::invalid_argument);
  EXPECT_THROW(PlacedRect({NAN, 0}, 1, 1, 0), std::invalid_argument);
}

TEST(Angles, NormalizeIntoHalfTurn) {
  EXPECT_DOUBLE_EQ(normalize_angle(0.0), 0.0);
  EXPECT_NEAR(normalize_angle(kPi + 0.25), 0.25, 1e-15);
  EXPECT_NEAR(normalize_angle(-0.25), kPi - 0.25, 1e-15);
  EXPECT_LT(quantize_angle(kPi - 1e-12), kPi);
}

TEST(Tolerance, RejectsNegative) {
  EXPECT_THROW(Tolerance(-1e-9), std::invalid_argument);
  EXPECT_NO_THROW(Tolerance(0.0));
}

TEST(Container, PolygonValidation) {
  EXPECT_THROW(ConvexContainer::polygon({{0, 0}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(ConvexContainer::polygon({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);  // clockwise
  EXPECT_THROW(ConvexContainer::polygon({{0, 0}, {2, 0}, {1, 0.1}, {2, 2}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(ConvexContainer::polygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), std::invalid_argument);  // collinear
  EXPECT_THROW(ConvexContainer::circle({0, 0}, 0.0), std::invalid_argument);
}

TEST(PointInContainer, CircleCentreAndBeyond) {
  const auto c = ConvexContainer::circle({0, 0}, 10);
  const Tolerance tol;
  EXPECT_TRUE(point_in_container(c, {0, 0}, tol));
  EXPECT_FALSE(point_in_container(c, {10 + 2 * tol.eps, 0}, tol));
  EXPECT_TRUE(point_in_container(c, {10 + 0.5 * tol.eps, 0}, tol));
}

TEST(PointInContainer, TriangleInterior) {
  const auto inst = make_instance(ProblemId::triangula);
  EXPECT_TRUE(point_in_container(inst.container, {45, 1}));
  EXPECT_FALSE(point_in_container(inst.container, {1, 10}));
}

TEST(RectInContainer, CircleExamples) {
  const auto inst = make_instance(ProblemId::rotunda);
  const double r = inst.container.as_circle().radius;
  EXPECT_NEAR(r, 1273.2395, 1e-4);
  EXPECT_TRUE(rect_in_container(inst.container, PlacedRect({0, 0}, 30, 20, 0)));
  EXPECT_FALSE(rect_in_container(inst.container, PlacedRect({r, 0}, 30, 20, 0)));
  // Top edge touching the highest point of the wall: the top corners stick out.
  const PlacedRect top({0, r - 10}, 30, 20, 0);
  EXPECT_GT(std::hypot(15.0, r), r);
  EXPECT_FALSE(rect_in_container(inst.container, top));
}

TEST(RectsOverlap, Examples) {
  const PlacedRect a({0, 0}, 30, 20, 0);
  EXPECT_TRUE(rects_overlap(a, a));
  EXPECT_NEAR(penetration_depth(a, a), 20.0, 1e-12);
  EXPECT_FALSE(rects_overlap(a, PlacedRect({30, 0}, 30, 20, 0)));
  EXPECT_TRUE(rects_overlap(a, PlacedRect({30 - 1e-3, 0}, 30, 20, 0)));
}

TEST(RectsOverlap, Symmetric) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> pos(-30.0, 30.0), ang(0.0, kPi);
  for (int i = 0; i < 2000; ++i) {
    const PlacedRect a({pos(gen), pos(gen)}, 30, 20, ang(gen));
    const PlacedRect b({pos(gen), pos(gen)}, 30, 20, ang(gen));
    EXPECT_DOUBLE_EQ(penetration_depth(a, b), penetration_depth(b, a));
    EXPECT_EQ(rects_overlap(a, b), rects_overlap(b, a));
  }
}

// The SAT depth is checked against two independent views: a Monte-Carlo area
// estimate, and a brute-force boundary distance for separated pairs.
TEST(RectsOverlap, AgreesWithMonteCarlo) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> pos(-35.0, 35.0), ang(0.0, kPi);
  const Tolerance tol;
  int decided = 0;
  for (int i = 0; i < 300; ++i) {
    const PlacedRect a({0, 0}, 30, 20, ang(gen));
    const PlacedRect b({pos(gen), pos(gen)}, 30, 20, ang(gen));
    const double depth = penetration_depth(a, b);
    if (std::abs(depth) <= 10 * tol.eps) continue;
    ++decided;
    const double area = oracle::intersection_area_mc(a, b, 100000, gen);
    const auto [gap, nested] = oracle::boundary_gap(a, b);
    EXPECT_EQ(rects_overlap(a, b, tol), depth > 0.0) << "pair " << i;
    if (depth > 0.0) {
      EXPECT_TRUE(nested || gap < 1e-9) << "pair " << i;
      if (depth > 0.5) EXPECT_GT(area, 0.0) << "pair " << i;
    } else {
      EXPECT_EQ(area, 0.0) << "pair " << i;
      EXPECT_FALSE(nested) << "pair " << i;
      EXPECT_GT(gap, 0.0) << "pair " << i;
    }
  }
  EXPECT_GT(decided, 250);
}

TEST(StripInterval, Examples) {
  const auto circle = ConvexContainer::circle({0, 0}, 10);
  const auto s = strip_interval(circle, -1, 1);
  ASSERT_TRUE(s);
  EXPECT_NEAR(s->first, -std::sqrt(99.0), 1e-12);
  EXPECT_NEAR(s->second, std::sqrt(99.0), 1e-12);

  const auto tri = make_instance(ProblemId::triangula).container;
  const double h = tri.vertices()[2].y;
  EXPECT_NEAR(h, 89.3029, 1e-4);
  const auto t = strip_interval(tri, 0, 10);
  ASSERT_TRUE(t);
  EXPECT_NEAR(t->first, 5.0390, 1e-4);
  EXPECT_NEAR(t->second, 84.9610, 1e-4);
  EXPECT_NEAR(t->second - t->first, 79.922, 1e-3);

  EXPECT_FALSE(strip_interval(tri, 100, 110));
  EXPECT_FALSE(strip_interval(circle, 11, 12));
  EXPECT_THROW(strip_interval(circle, 2, 1), std::invalid_argument);
}

TEST(StripInterval, MatchesClosedForm) {
  const auto tri = make_instance(ProblemId::triangula).container;
  const double h = tri.vertices()[2].y;
  for (double y = 0.0; y + 10.0 <= h; y += 3.7) {
    const auto s = strip_interval(tri, y, y + 10);
    ASSERT_TRUE(s);
    EXPECT_NEAR(s->second - s->first, oracle::triangle_band(h, y, y + 10), 1e-9);
  }
  const double r = 1273.2395447351628;
  const auto disk = ConvexContainer::circle({0, 0}, r);
  for (double y = -r; y + 20 <= r; y += 97.3) {
    const auto s = strip_interval(disk, y, y + 20);
    ASSERT_TRUE(s);
    EXPECT_NEAR(s->second - s->first, oracle::disk_band(r, y, y + 20), 1e-7);
  }
}

// The cross-section width of a convex body is concave in y.
TEST(StripInterval, WidthIsConcave) {
  std::mt19937_64 gen(5);
  for (int k = 0; k < 50; ++k) {
    const auto c = oracle::random_convex(gen);
    const auto [ylo, yhi] = c.y_extent();
    const int n = 40;
    std::vector<double> w;
    for (int i = 1; i < n; ++i) {
      const auto s = cross_section(c, ylo + (yhi - ylo) * i / n);
      ASSERT_TRUE(s);
      w.push_back(s->second - s->first);
    }
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
      EXPECT_GE(w[i] + 1e-7 * (1 + w[i]), 0.5 * (w[i - 1] + w[i + 1]));
    }
  }
}

TEST(ContainerArea, Examples) {
  EXPECT_DOUBLE_EQ(container_area(ConvexContainer::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 1.0);
  EXPECT_NEAR(container_area(make_instance(ProblemId::quadrangula).container), 627808.689, 1e-3);
  EXPECT_NEAR(container_area(make_instance(ProblemId::triangula).container), 4018.628, 1e-3);
  EXPECT_NEAR(container_area(make_instance(ProblemId::rotunda).container), 5092958.179, 1e-3);
}

TEST(ContainerArea, FanTriangulation) {
  std::mt19937_64 gen(9);
  for (int k = 0; k < 100; ++k) {
    const auto c = oracle::random_convex(gen);
    const auto& v = c.vertices();
    double fan = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) fan += 0.5 * cross(v[i] - v[0], v[i + 1] - v[0]);
    EXPECT_NEAR(container_area(c), fan, 1e-9 * fan);
  }
}

// Containment from corners is exact for convex containers: sampled points of
// an accepted rectangle must all be inside.
TEST(RectInContainer, CornerTestIsSound) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(-0.5, 0.5), ang(0.0, kPi);
  int accepted = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto c = k % 4 == 0 ? ConvexContainer::circle({3, -2}, 40) : oracle::random_convex(gen);
    const auto [lo, hi] = c.bounds();
    std::uniform_real_distribution<double> px(lo.x, hi.x), py(lo.y, hi.y);
    const PlacedRect r({px(gen), py(gen)}, 12, 6, ang(gen));
    if (!rect_in_container(c, r, Tolerance(0.0))) continue;
    ++accepted;
    for (int i = 0; i < 50; ++i) {
      const Point p = r.center() + (u(gen) * 12) * r.axis_u() + (u(gen) * 6) * r.axis_v();
      EXPECT_LE(point_excursion(c, p), 1e-9);
    }
  }
  EXPECT_GT(accepted, 50);
}

TEST(RigidMotion, PredicatesInvariant) {
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> pos(-60.0, 60.0), ang(-7.0, 7.0);
  const auto tri = make_instance(ProblemId::triangula).container;
  for (int i = 0; i < 500; ++i) {
    const RigidMotion m{ang(gen), {pos(gen), pos(gen)}};
    const PlacedRect a({pos(gen) * 0.5 + 45, pos(gen) * 0.5 + 30}, 20, 10, ang(gen));
    const PlacedRect b({a.center().x + pos(gen) * 0.3, a.center().y + pos(gen) * 0.3}, 20, 10, ang(gen));
    EXPECT_NEAR(penetration_depth(a, b), penetration_depth(m.apply(a), m.apply(b)), 1e-9);
    EXPECT_NEAR(rect_excursion(tri, a), rect_excursion(m.apply(tri), m.apply(a)), 1e-9);
  }
  const auto disk = ConvexContainer::circle({1, 2}, 50);
  const RigidMotion m{0.3, {10, -4}};
  const PlacedRect r({20, 20}, 30, 20, 0.1);
  EXPECT_NEAR(rect_excursion(disk, r), rect_excursion(m.apply(disk), m.apply(r)), 1e-9);
}
