#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "support/random.hpp"
#include "wfbar/geometry.hpp"

using namespace wfbar;

TEST(Curves, Lengths) {
  EXPECT_NEAR(curves::circle(1.0).length(), 2 * std::numbers::pi, 1e-9);
  EXPECT_NEAR(curves::segment(3.0).length(), 3.0, 1e-15);
  EXPECT_NEAR(curves::regular_polygon(4, 1.0).length(), 4 * std::sqrt(2.0), 1e-12);
  // Ellipse a=2, b=1: perimeter 9.688448220547675...
  EXPECT_NEAR(curves::ellipse(2, 1).length(), 9.688448220547675, 1e-8);
}

TEST(Curves, TableRejections) {
  EXPECT_THROW(PlaneCurve::polyline({{0, 0}}, false), std::invalid_argument);
  EXPECT_THROW(PlaneCurve::polyline({{0, 0}, {1, kInfinity}}, false), std::invalid_argument);
  EXPECT_THROW(PlaneCurve::polyline({{0, 0}, {0, 0}, {1, 1}}, false), std::invalid_argument);
  // Goes out along the x axis and back over itself.
  EXPECT_THROW(PlaneCurve::polyline({{0, 0}, {2, 0}, {1, 0}}, false), std::invalid_argument);
  // Touching at a point is fine.
  EXPECT_NO_THROW(PlaneCurve::polyline({{0, 0}, {1, 0}, {1, 1}, {0.5, 0}, {0.5, -1}}, false));
}

TEST(Crofton, UnitCircle) {
  const auto r = crofton_lines(curves::circle(1.0), 100000, 7);
  EXPECT_NEAR(r.estimate, 4 * std::numbers::pi, std::max(0.05 * 4 * std::numbers::pi, 3 * r.stderr_));
  EXPECT_NEAR(r.ratio, 2.0, 0.1);
  EXPECT_EQ(r.n_samples, 100000u);
  EXPECT_EQ(r.seed, 7u);
}

TEST(Crofton, Segment) {
  const auto r = crofton_lines(curves::segment(2.5), 100000, 3);
  EXPECT_NEAR(r.ratio, 2.0, 0.1);
}

TEST(Crofton, SeedReproducible) {
  const auto a = crofton_lines(curves::star(5, 1.0, 0.4), 20000, 11);
  const auto b = crofton_lines(curves::star(5, 1.0, 0.4), 20000, 11);
  const auto c = crofton_lines(curves::star(5, 1.0, 0.4), 20000, 12);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_NE(a.estimate, c.estimate);
}

TEST(Crofton, Homogeneity) {
  const auto base = curves::limacon(1.0, 0.5);
  const auto a = crofton_lines(base, 100000, 5);
  const auto b = crofton_lines(base.scaled(3.0), 100000, 6);
  const double err = std::hypot(3 * a.stderr_, b.stderr_);
  EXPECT_NEAR(b.estimate, 3 * a.estimate, 2 * 3 * err);
}

TEST(Crofton, RejectsTooFewSamples) {
  EXPECT_THROW(crofton_lines(curves::circle(), 9999, 1), std::invalid_argument);
}

TEST(Tomograph, PureSinusoidHasTwoCriticalPoints) {
  const auto r = tomograph_census(TrigPolynomial{}, 2, 1.0, 5000, 1);
  EXPECT_EQ(r.mean_n, 2.0);
  EXPECT_EQ(r.max_n, 2u);
  EXPECT_EQ(r.degenerate_fraction, 0.0);
}

TEST(Tomograph, SpanCheck) {
  EXPECT_THROW(tomograph_census(TrigPolynomial{}, 1, 1.0, 10, 1), std::invalid_argument);
  EXPECT_THROW(tomograph_census(TrigPolynomial{}, 0, 1.0, 10, 1), std::invalid_argument);
  EXPECT_THROW(tomograph_census(TrigPolynomial{}, 2, 0.0, 10, 1), std::invalid_argument);
  EXPECT_NO_THROW(require_tomograph_span(2));
}

TEST(Tomograph, MatchesDirectRootCount) {
  // (f_s - g)' is a trigonometric polynomial of degree 2: an even number of zeros, at most 4.
  const TrigPolynomial g{0.0, {}, {0.0, 0.3}};
  const auto r = tomograph_census(g, 4, 1.0, 20000, 4);
  EXPECT_GE(r.mean_n, 2.0);
  EXPECT_LE(r.max_n, 4u);
  EXPECT_LT(r.degenerate_fraction, 1e-3);
}

TEST(Tomograph, Deterministic) {
  const TrigPolynomial g{0.0, {0.2}, {0.0, 0.1}};
  const auto a = tomograph_census(g, 4, 1.0, 10000, 9);
  const auto b = tomograph_census(g, 4, 1.0, 10000, 9);
  EXPECT_EQ(a.mean_n, b.mean_n);
  EXPECT_EQ(a.stderr_, b.stderr_);
}

TEST(Tomograph, GraphLength) {
  EXPECT_NEAR(TrigPolynomial{}.derivative_graph_length(), 2 * std::numbers::pi, 1e-12);
}

TEST(IntersectionBound, Examples) {
  FilteredComplex pair;
  pair.add_generator("a", 1.0);
  pair.add_generator("b", 2.0);
  pair.set_boundary(1, {0});
  const auto r = intersection_bound_check(pair, 0.5);
  EXPECT_TRUE(r);
  EXPECT_EQ(r.generators, 2u);
  EXPECT_EQ(r.finite_bars, 1u);

  FilteredComplex free;
  for (int i = 0; i < 5; ++i) free.add_generator("g" + std::to_string(i), i);
  const auto f = intersection_bound_check(free, 0.5);
  EXPECT_TRUE(f);
  EXPECT_EQ(f.infinite_bars, 5u);
}

TEST(IntersectionBound, RandomComplexes) {
  wfbar::testing::Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto C = wfbar::testing::random_complex(rng, 12);
    const auto r = intersection_bound_check(C, 0.5);
    EXPECT_TRUE(r) << r.message;
  }
}

TEST(GeometryTsv, Columns) {
  std::stringstream ss;
  write_crofton_tsv(ss, crofton_lines(curves::circle(), 10000, 1));
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, "estimate\tstderr\tlength\tratio\tn_samples\tseed");
}
