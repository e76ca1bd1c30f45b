#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "hyperspace/geometry.hpp"

using namespace hyperspace;

namespace {

Point random_point(std::mt19937_64& rng, std::size_t n, double scale = 10.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> c(n);
  for (auto& x : c) x = u(rng);
  return Point(std::move(c));
}

}  // namespace

TEST(PointTest, RejectsNonFiniteAndEmpty) {
  EXPECT_THROW(Point(std::vector<double>{}), GeometryError);
  EXPECT_THROW((Point{1.0, std::numeric_limits<double>::quiet_NaN()}), GeometryError);
  EXPECT_THROW((Point{std::numeric_limits<double>::infinity()}), GeometryError);
}

TEST(PointTest, ArithmeticChecksDimension) {
  EXPECT_EQ((Point{1, 2} + Point{3, 4}), (Point{4, 6}));
  EXPECT_THROW((Point{1, 2} + Point{1, 2, 3}), DimensionMismatch);
  EXPECT_DOUBLE_EQ(distance(Point{-1, -1}, Point{2, 3}), 5.0);
}

TEST(CanonicalBoxTest, Examples) {
  const AxisBox b = canonical_box(Point{0, 2}, Point{4, 0});
  EXPECT_EQ(b.lo(), (Point{0, 0}));
  EXPECT_EQ(b.hi(), (Point{4, 2}));

  const AxisBox p = canonical_box(Point{1, 1}, Point{1, 1});
  EXPECT_TRUE(p.is_point());
  EXPECT_EQ(p.lo(), (Point{1, 1}));

  const AxisBox c = canonical_box(Point{3, -1, 5}, Point{-3, 2, 5});
  EXPECT_EQ(c.lo(), (Point{-3, -1, 5}));
  EXPECT_EQ(c.hi(), (Point{3, 2, 5}));
}

TEST(CanonicalBoxTest, DimensionMismatch) {
  EXPECT_THROW(canonical_box(Point{0, 0}, Point{1, 1, 1}), DimensionMismatch);
}

TEST(CanonicalBoxTest, SymmetricUnderVertexSwap) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1, 2, 3, 5}) {
    for (int i = 0; i < 200; ++i) {
      const Point u = random_point(rng, n), v = random_point(rng, n);
      EXPECT_EQ(canonical_box(u, v), canonical_box(v, u));
    }
  }
}

TEST(AxisBoxTest, RejectsNonCanonicalCorners) {
  EXPECT_THROW(AxisBox(Point{1, 0}, Point{0, 1}), GeometryError);
}

TEST(AxisBoxTest, VerticesSkipCollapsedAxes) {
  EXPECT_EQ(AxisBox(Point{0, 0, 0}, Point{1, 1, 1}).vertices().size(), 8u);
  EXPECT_EQ(AxisBox(Point{0, 0, 0}, Point{1, 0, 1}).vertices().size(), 4u);
  EXPECT_EQ(AxisBox(Point{2, 2}, Point{2, 2}).vertices().size(), 1u);
}

TEST(CompactSetTest, StructuralInvariants) {
  EXPECT_THROW(CompactSet::points({}), GeometryError);
  EXPECT_THROW(CompactSet::union_of({}), GeometryError);
  EXPECT_THROW(CompactSet::points({Point{0, 0}, Point{0, 0, 0}}), DimensionMismatch);
  EXPECT_THROW(CompactSet::union_of({CompactSet::points({Point{0}}),
                                     CompactSet::points({Point{0, 0}})}),
               DimensionMismatch);
  EXPECT_THROW(CompactSet::box_boundary(AxisBox(Point{0, 0, 0}, Point{1, 1, 1})), GeometryError);
}

TEST(CompactSetTest, BoxBoundaryIsFourEdges) {
  const auto b = CompactSet::box_boundary(AxisBox(Point{1, 1}, Point{4, 3}));
  ASSERT_EQ(b.kind(), CompactSet::Kind::union_of);
  EXPECT_EQ(b.as_union().parts.size(), 4u);
  for (const auto& part : b.as_union().parts) EXPECT_EQ(part.kind(), CompactSet::Kind::segment);
}

TEST(TranslateTest, Examples) {
  const auto pts = CompactSet::points({Point{0, 0}, Point{1, 0}});
  EXPECT_EQ(translate(pts, Point{0, 1}), CompactSet::points({Point{0, 1}, Point{1, 1}}));

  const auto box = CompactSet::box(AxisBox(Point{0, 0}, Point{2, 1}));
  EXPECT_EQ(translate(box, Point{-1, 3}), CompactSet::box(AxisBox(Point{-1, 3}, Point{1, 4})));

  const auto boundary = CompactSet::box_boundary(AxisBox(Point{1, 1}, Point{4, 3}));
  EXPECT_EQ(translate(boundary, Point::zero(2)), boundary);
  EXPECT_THROW(translate(box, Point{1, 2, 3}), DimensionMismatch);
}

TEST(TranslateTest, GroupActionOnIntegerGrid) {
  // Integer-valued coordinates keep every sum exact, so structure must match.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> u(-50, 50);
  auto ipoint = [&] { return Point{double(u(rng)), double(u(rng)), double(u(rng))}; };
  for (int i = 0; i < 100; ++i) {
    const auto a = CompactSet::union_of(
        {CompactSet::box(canonical_box(ipoint(), ipoint())),
         CompactSet::segment(Segment(ipoint(), ipoint())), CompactSet::points({ipoint()})});
    const Point v = ipoint(), w = ipoint();
    EXPECT_EQ(translate(a, v + w), translate(translate(a, v), w));
    EXPECT_EQ(translate(translate(a, v), -v), a);
    EXPECT_EQ(bounding_box(translate(a, v)), translate(bounding_box(a), v));
  }
}

TEST(BoundingBoxTest, Examples) {
  EXPECT_EQ(bounding_box(CompactSet::points({Point{1, 1}, Point{4, 3}})),
            AxisBox(Point{1, 1}, Point{4, 3}));
  EXPECT_EQ(bounding_box(CompactSet::segment(Segment(Point{0, 0}, Point{2, -1}))),
            AxisBox(Point{0, -1}, Point{2, 0}));
  EXPECT_EQ(bounding_box(CompactSet::box_boundary(AxisBox(Point{1, 1}, Point{4, 3}))),
            AxisBox(Point{1, 1}, Point{4, 3}));
}

TEST(BoundingBoxTest, ContainsEveryWitnessPoint) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto set = CompactSet::union_of(
        {CompactSet::segment(Segment(random_point(rng, 3), random_point(rng, 3))),
         CompactSet::box(canonical_box(random_point(rng, 3), random_point(rng, 3)))});
    const AxisBox bb = bounding_box(set);
    for (const auto& w : witness_points(set)) EXPECT_TRUE(bb.contains(w));
  }
}

TEST(ContainsPointTest, Examples) {
  EXPECT_TRUE(contains_point(CompactSet::box(AxisBox(Point{0, 0}, Point{1, 1})), Point{0.5, 0.5}, 0));
  EXPECT_FALSE(contains_point(CompactSet::points({Point{0, 0}}), Point{0, 1}, 0.5));
  EXPECT_TRUE(contains_point(CompactSet::segment(Segment(Point{0, 0}, Point{1, 0})),
                             Point{0.5, 1e-9}, 1e-6));
  EXPECT_THROW(contains_point(CompactSet::points({Point{0, 0}}), Point{0}, 1.0), DimensionMismatch);
}
