#include <chrono>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hyperspace/metric.hpp"
#include "hyperspace/verify.hpp"

using namespace hyperspace;

namespace {

CompactSet seg(Point p, Point q) { return CompactSet::segment(Segment(std::move(p), std::move(q))); }
CompactSet box(Point lo, Point hi) { return CompactSet::box(canonical_box(lo, hi)); }

const CompactSet kSegA = seg(Point{0, 0}, Point{1, 0});
const CompactSet kSegB = seg(Point{0, 1}, Point{2, 1});
const CompactSet kFrameA = CompactSet::box_boundary(AxisBox(Point{1, 1}, Point{4, 3}));
const CompactSet kFrameB = CompactSet::box_boundary(AxisBox(Point{0, 0}, Point{7, 5}));

verify::SetGenerator generator(std::uint64_t seed, std::vector<std::size_t> dims = {1, 2, 3},
                               double scale = 10.0) {
  verify::GeneratorConfig config;
  config.seed = seed;
  config.dims = std::move(dims);
  config.scale = scale;
  return verify::SetGenerator(config);
}

}  // namespace

TEST(PointToSetTest, Examples) {
  EXPECT_DOUBLE_EQ(point_to_set(Point{2, 1}, kSegA), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(point_to_set(Point{0.5, 0}, kSegB), 1.0);
  EXPECT_DOUBLE_EQ(point_to_set(Point{2, 2}, box(Point{1, 1}, Point{4, 3})), 0.0);
  EXPECT_DOUBLE_EQ(point_to_set(Point{2, 2}, kFrameA), 1.0);
  EXPECT_DOUBLE_EQ(point_to_set(Point{5, 5}, CompactSet::points({Point{1, 2}, Point{2, 1}})), 5.0);
  EXPECT_THROW(point_to_set(Point{0, 0, 0}, kSegA), DimensionMismatch);
}

TEST(PointToSetTest, OneLipschitz) {
  auto gen = generator(21);
  for (std::size_t i = 0; i < 300; ++i) {
    auto s = gen.stream(i);
    const CompactSet b = s.set();
    const Point x = s.point(), y = s.point();
    EXPECT_LE(std::abs(point_to_set(x, b) - point_to_set(y, b)), distance(x, y) + 1e-12);
  }
}

TEST(DirectedDistanceTest, SegmentsExample) {
  const auto ab = directed_distance(kSegA, kSegB);
  const auto ba = directed_distance(kSegB, kSegA);
  EXPECT_NEAR(ab.value, 1.0, 1e-12);
  EXPECT_NEAR(ba.value, std::sqrt(2.0), 1e-12);
  EXPECT_LE(ab.err, 1e-9);
  EXPECT_LE(ba.err, 1e-9);
  EXPECT_NEAR(hausdorff(kSegA, kSegB).value, std::sqrt(2.0), 1e-12);
}

TEST(DirectedDistanceTest, RectangleBoundariesExample) {
  const auto ab = directed_distance(kFrameA, kFrameB, 1e-9);
  const auto ba = directed_distance(kFrameB, kFrameA, 1e-9);
  EXPECT_NEAR(ab.value, 2.5, 1e-9);
  EXPECT_NEAR(ba.value, std::sqrt(13.0), 1e-9);
  EXPECT_LE(ab.err, 1e-9);
  EXPECT_LE(ba.err, 1e-9);
}

TEST(DirectedDistanceTest, FilledBoxAgainstFrameNeedsSearch) {
  // Inside [1,4]x[1,3] the farthest points from the frame lie on the ridge
  // y = 2 for 2 <= x <= 3, at distance 1.
  const auto r = directed_distance(box(Point{1, 1}, Point{4, 3}), kFrameA, 1e-9);
  EXPECT_NEAR(r.value, 1.0, 1e-9);
  EXPECT_LE(r.err, 1e-9);
  EXPECT_NEAR(r.value, brute_force_directed(box(Point{1, 1}, Point{4, 3}), kFrameA, 1e-2).value, 1e-2);
}

TEST(DirectedDistanceTest, IdentityAndSubsets) {
  for (const auto* s : {&kSegA, &kFrameA, &kFrameB}) {
    EXPECT_EQ(hausdorff(*s, *s).value, 0.0);
    EXPECT_EQ(hausdorff(*s, *s).err, 0.0);
  }
  // A part of A inside one box of B contributes nothing.
  const auto inner = CompactSet::union_of({seg(Point{1, 1}, Point{2, 2}), box(Point{0, 0}, Point{1, 1})});
  const auto outer = CompactSet::union_of({box(Point{0, 0}, Point{3, 3}), CompactSet::points({Point{9, 9}})});
  EXPECT_EQ(directed_distance(inner, outer).value, 0.0);
}

TEST(DirectedDistanceTest, RejectsNonPositiveToleranceWhenSearching) {
  EXPECT_THROW(directed_distance(kFrameA, kFrameB, 0.0), GeometryError);
  EXPECT_THROW(directed_distance(kFrameA, kFrameB, -1.0), GeometryError);
  // Closed forms do not need it.
  EXPECT_NO_THROW(directed_distance(kSegA, kSegB, 0.0));
}

TEST(DirectedDistanceTest, TwoSiteRidgeResolvesQuickly) {
  // A box straddling the bisector of two sites: the maximum sits on an
  // oblique ridge where d(., B) is nearly flat.
  const Point p{0, 0, 0}, q{10, 4, -6};
  const Point mid{5, 2, -3};
  const auto b = CompactSet::points({p, q});
  const auto a = box(mid - Point{1e-5, 1e-5, 1e-5}, mid + Point{1e-5, 1e-5, 1e-5});
  const auto start = std::chrono::steady_clock::now();
  const auto r = directed_distance(a, b, 1e-9);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
  EXPECT_LE(r.err, 1e-9);

  // Same ridge with the sites swapped for small boxes.
  const auto bb = CompactSet::union_of({box(p, p + Point{0.1, 0.1, 0.1}), box(q - Point{0.1, 0.1, 0.1}, q)});
  const auto rb = directed_distance(a, bb, 1e-9);
  EXPECT_LE(rb.err, 1e-9);
  const auto pure = certified_directed_distance(a, bb, {.tol = 1e-6, .convex_part_bound = false});
  EXPECT_LE(std::abs(rb.value - pure.value), rb.err + pure.err + 1e-12);
}

TEST(DirectedDistanceTest, AgreesWithPureLipschitzSearch) {
  // Convex A against convex B is decided by corners; the subdivision search
  // that uses only the 1-Lipschitz bound must land in the same place.
  auto gen = generator(22, {1, 2});
  std::size_t compared = 0;
  for (std::size_t i = 0; i < 60; ++i) {
    auto s = gen.stream(i);
    const auto a = CompactSet::box(s.box());
    const auto b = i % 2 ? CompactSet::box(s.box()) : CompactSet::segment(Segment(s.point(), s.point()));
    const auto closed = directed_distance(a, b);
    ASSERT_EQ(closed.err, 0.0);
    if (closed.value < 1e-3) continue;  // A inside B is a plateau at 0
    const auto pure = certified_directed_distance(a, b, {.tol = 1e-5, .convex_part_bound = false});
    EXPECT_LE(pure.err, 1e-5) << "case " << i;
    EXPECT_LE(std::abs(closed.value - pure.value), pure.err + 1e-12) << "case " << i;
    ++compared;
  }
  EXPECT_GT(compared, 30u);
}

TEST(DirectedDistanceTest, ShortcutsMatchSubdivisionOnUnions) {
  auto gen = generator(23);
  for (std::size_t i = 0; i < 150; ++i) {
    auto s = gen.stream(i);
    const auto a = s.set();
    const auto b = s.set();
    const auto fast = directed_distance(a, b, 1e-8);
    const auto slow = certified_directed_distance(a, b, {.tol = 1e-8});
    EXPECT_LE(std::abs(fast.value - slow.value), fast.err + slow.err + 1e-12) << "case " << i;
  }
}

TEST(HausdorffTest, TranslationInvariance) {
  // Finite sets and single convex parts, so the comparison is at rounding
  // level.
  auto gen = generator(24);
  for (std::size_t i = 0; i < 300; ++i) {
    auto s = gen.stream(i);
    const auto a = i % 2 ? CompactSet::box(s.box()) : CompactSet::points({s.point(), s.point()});
    const auto b = i % 3 ? CompactSet::box(s.box()) : CompactSet::segment(Segment(s.point(), s.point()));
    const Point v = s.point();
    const auto h = hausdorff(a, b);
    const auto hv = hausdorff(translate(a, v), translate(b, v));
    ASSERT_LE(h.err, 1e-9);
    EXPECT_NEAR(h.value, hv.value, h.err + hv.err + 1e-12 * (1.0 + h.value)) << "case " << i;
  }
}

TEST(NestedBoxTest, Examples) {
  const AxisBox outer(Point{0, 0}, Point{4, 3});
  EXPECT_DOUBLE_EQ(nested_box_hausdorff(AxisBox(Point{1, 1}, Point{2, 2}), outer), std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(nested_box_hausdorff(outer, outer), 0.0);
  EXPECT_DOUBLE_EQ(nested_box_hausdorff(AxisBox(Point{4, 3}, Point{4, 3}), outer), 5.0);
  EXPECT_DOUBLE_EQ(nested_box_hausdorff(AxisBox(Point{1, 1}, Point{4, 3}),
                                        AxisBox(Point{0, 0}, Point{7, 5})),
                   std::sqrt(13.0));
  EXPECT_THROW(nested_box_hausdorff(AxisBox(Point{3, 3}, Point{5, 5}), outer), GeometryError);
  EXPECT_THROW(nested_box_hausdorff(AxisBox(Point{0}, Point{1}), outer), DimensionMismatch);
}

TEST(NestedBoxTest, MatchesGridOracle) {
  const AxisBox outer(Point{0, 0}, Point{4, 3});
  const AxisBox inner(Point{1, 1}, Point{2, 2});
  const auto brute = brute_force_hausdorff(CompactSet::box(inner), CompactSet::box(outer), 1e-2);
  EXPECT_LE(std::abs(brute.value - std::sqrt(5.0)), 1e-2);
  EXPECT_EQ(brute.err, 1e-2);
}

TEST(NestedBoxTest, MatchesGeneralDistance) {
  auto gen = generator(25, {1, 2, 3, 4, 5});
  for (std::size_t i = 0; i < 200; ++i) {
    auto s = gen.stream(i);
    const AxisBox outer = s.box();
    const AxisBox inner = canonical_box(s.point_in(outer), s.point_in(outer));
    const auto general = hausdorff(CompactSet::box(inner), CompactSet::box(outer));
    EXPECT_NEAR(nested_box_hausdorff(inner, outer), general.value, 1e-9);
  }
}

TEST(OracleTest, SegmentsExample) {
  const auto brute = brute_force_hausdorff(kSegA, kSegB, 1e-3);
  EXPECT_LE(std::abs(brute.value - std::sqrt(2.0)), 1e-3);
  EXPECT_LE(std::abs(brute_force_directed(kSegA, kSegB, 1e-3).value - 1.0), 1e-3);
}

TEST(OracleTest, ExactOnFiniteSets) {
  const auto a = CompactSet::points({Point{0, 0}, Point{3, 4}});
  EXPECT_EQ(brute_force_hausdorff(a, a, 0.1).value, 0.0);
  const auto b = CompactSet::points({Point{0, 0}});
  EXPECT_DOUBLE_EQ(brute_force_hausdorff(a, b, 0.1).value, 5.0);
}

TEST(OracleTest, CoveringRadius) {
  const auto b = box(Point{0, 0, 0}, Point{1, 2, 0.5});
  const auto pts = discretize(b, 0.05);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Point x{u(rng), 2 * u(rng), 0.5 * u(rng)};
    double best = 1e9;
    for (const auto& p : pts) best = std::min(best, distance(x, p));
    EXPECT_LE(best, 0.05);
  }
}

TEST(OracleTest, BudgetGuard) {
  EXPECT_THROW(brute_force_hausdorff(box(Point{0, 0, 0}, Point{10, 10, 10}),
                                     box(Point{0, 0, 0}, Point{1, 1, 1}), 1e-3, 1000),
               PointBudgetExceeded);
  EXPECT_THROW(brute_force_hausdorff(kSegA, kSegB, 0.0), GeometryError);
}

TEST(OracleTest, AgreesWithCertifiedDistance) {
  auto gen = generator(26, {1, 2}, 1.0);
  for (std::size_t i = 0; i < 60; ++i) {
    auto s = gen.stream(i);
    const auto a = s.set();
    const auto b = s.set();
    const auto h = hausdorff(a, b);
    const auto brute = brute_force_hausdorff(a, b, 1e-2);
    EXPECT_LE(std::abs(h.value - brute.value), h.err + brute.err) << "case " << i;
  }
}
