#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "civitas/packer.hpp"
#include "civitas/verifier.hpp"
#include "oracles.hpp"

using namespace civitas;

TEST(Verify, SingleHouseInTrapezoid) {
  const auto inst = make_instance("quadrangula");
  const auto& v = inst.container.vertices();
  Point centroid;
  for (const auto& p : v) centroid = centroid + 0.25 * p;
  const Layout l{inst, {make_house(inst.house, centroid, 0)}, {}};
  const auto r = verify(l);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.count, 1u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Verify, CoincidentHouses) {
  const auto inst = make_instance("rotunda");
  const auto h = make_house(inst.house, {100, 50}, 0.3);
  const auto r = verify(Layout{inst, {h, h}, {}});
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::overlap);
  EXPECT_EQ(r.violations[0].indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_NEAR(r.violations[0].magnitude, std::min(inst.house.length, inst.house.width), 1e-9);
  EXPECT_NEAR(r.max_penetration, 20.0, 1e-9);
}

TEST(Verify, ContainmentAndDimension) {
  const auto inst = make_instance("triangula");
  Layout l{inst, {make_house(inst.house, {0, 0}, 0), PlacedRect({45, 20}, 20, 9, 0)}, {}};
  const auto r = verify(l);
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::containment);
  EXPECT_GT(r.violations[0].magnitude, 4.0);
  EXPECT_EQ(r.violations[1].kind, ViolationKind::dimension);
  EXPECT_DOUBLE_EQ(r.violations[1].magnitude, 1.0);
}

TEST(Verify, MismatchedInstanceIsReported) {
  auto inst = make_instance("rotunda");
  inst.container = make_instance("triangula").container;
  const auto r = verify(Layout{inst, {}, {}});
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::dimension);
  EXPECT_TRUE(r.violations[0].indices.empty());
}

TEST(Verify, TouchingIsAllowed) {
  const auto inst = make_instance("quadrangula");
  const Layout l{inst,
                 {make_house(inst.house, {100, 100}, 0), make_house(inst.house, {140, 100}, 0),
                  make_house(inst.house, {100, 130}, 0), make_house(inst.house, {60, 15}, 0)},
                 {}};
  EXPECT_TRUE(verify(l).passed);
  EXPECT_TRUE(verify(l, Tolerance(0.0)).passed);
}

TEST(Verify, GridAgreesWithAllPairs) {
  std::mt19937_64 gen(42);
  std::size_t total = 0;
  for (int k = 0; k < 100; ++k) {
    const auto l = oracle::random_violating_layout(gen);
    const auto want = oracle::all_pairs_violations(l, Tolerance());
    const auto got = verify(l);
    EXPECT_EQ(got.violations, want) << "layout " << k;
    EXPECT_EQ(got.passed, want.empty());
    total += want.size();
  }
  EXPECT_GT(total, 1000u);
}

TEST(Verify, PermutationInvariant) {
  std::mt19937_64 gen(8);
  for (int k = 0; k < 20; ++k) {
    const auto l = oracle::random_violating_layout(gen);
    std::vector<std::size_t> perm(l.count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    Layout p{l.instance, {}, {}};
    for (auto i : perm) p.houses.push_back(l.houses[i]);
    const auto a = verify(l);
    auto b = verify(p);
    for (auto& v : b.violations) {
      for (auto& i : v.indices) i = perm[i];
      std::sort(v.indices.begin(), v.indices.end());
    }
    sort_violations(b.violations);
    EXPECT_EQ(a.violations, b.violations);
    EXPECT_EQ(a.count, b.count);
    EXPECT_DOUBLE_EQ(a.density, b.density);
  }
}

TEST(Verify, LargeLayoutIsFastAndAgreesOnSample) {
  const auto big = best_offset_rows(make_instance("rotunda"), {});
  ASSERT_GT(big.count(), 8000u);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = verify(big);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_TRUE(r.passed);
  EXPECT_LT(secs, 1.0);

  std::mt19937_64 gen(1);
  Layout sample{big.instance, {}, {}};
  std::sample(big.houses.begin(), big.houses.end(), std::back_inserter(sample.houses), 200, gen);
  EXPECT_TRUE(oracle::all_pairs_violations(sample, Tolerance()).empty());
  EXPECT_TRUE(verify(sample).passed);
}

TEST(DensityReport, NearBestKnownCircle) {
  auto l = best_offset_rows(make_instance("rotunda"), {});
  ASSERT_GE(l.count(), 8349u);
  l.houses.resize(8349);
  const auto r = verify(l);
  EXPECT_NEAR(r.density, 8349.0 / 8488.264, 1e-5);
  const auto text = density_report(r, l.instance);
  EXPECT_NE(text.find("0.98359"), std::string::npos) << text;
  EXPECT_NE(text.find("area bound     8488"), std::string::npos);
}

TEST(DensityReport, EmptyAndGap) {
  const auto tri = make_instance("triangula");
  const auto empty = verify(Layout{tri, {}, {}});
  EXPECT_EQ(empty.density, 0.0);
  EXPECT_TRUE(empty.passed);
  VerificationReport r;
  r.count = 16;
  const auto text = density_report(r, tri);
  EXPECT_NE(text.find("gap to bound   4\n"), std::string::npos) << text;
  EXPECT_NE(text.find("best known     16\n"), std::string::npos);
}
