#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "wfbar/reduction.hpp"
#include "wfbar/spectrum.hpp"

using namespace wfbar;

namespace {

std::uint64_t lattice_count(Point2 p, Point2 q, double t) {
  std::uint64_t n = 0;
  const int R = static_cast<int>(std::ceil(t)) + 2;
  for (int i = -R; i <= R; ++i)
    for (int j = -R; j <= R; ++j) {
      const double dx = q.x - p.x + i, dy = q.y - p.y + j;
      const double d = std::hypot(dx, dy);
      if (d > 0.0 && d <= t) ++n;
    }
  return n;
}

// Two hyperbolic generators with isometric circles at +-1 and +-3, radius rho.
std::vector<SL2R> schottky_pair(double rho) {
  return {{3.0 / rho, 9.0 / rho - rho, 1.0 / rho, 3.0 / rho}, {1.0 / rho, 1.0 / rho - rho, 1.0 / rho, 1.0 / rho}};
}

}  // namespace

TEST(Torus, Examples) {
  const auto S = torus_spectrum({0, 0}, {0, 0}, 1.5);
  ASSERT_FALSE(S.empty());
  EXPECT_EQ(S.entries()[0].length, 1.0);
  EXPECT_EQ(S.entries()[0].multiplicity, 4u);

  const auto H = torus_spectrum({0, 0}, {0.5, 0}, 1.2);
  ASSERT_EQ(H.entries().size(), 2u);
  EXPECT_EQ(H.entries()[0].length, 0.5);
  EXPECT_EQ(H.entries()[0].multiplicity, 2u);
  EXPECT_NEAR(H.entries()[1].length, 1.118034, 1e-6);
  EXPECT_EQ(H.entries()[1].multiplicity, 4u);
}

TEST(Torus, MatchesBruteForceCount) {
  for (auto [p, q] : {std::pair<Point2, Point2>{{0, 0}, {0, 0}}, {{0.1, 0.7}, {0.35, 0.2}}, {{0, 0}, {0.5, 0.5}}}) {
    const auto S = torus_spectrum(p, q, 50);
    for (double t : {0.3, 1.0, 2.5, 7.1, 19.9, 33.3, 50.0}) EXPECT_EQ(S.count_up_to(t), lattice_count(p, q, t)) << t;
  }
}

TEST(Torus, GaussCircle) {
  const auto S = torus_spectrum({0.2, 0.3}, {0.6, 0.1}, 200);
  const double ratio = static_cast<double>(S.total()) / (200.0 * 200.0);
  EXPECT_NEAR(ratio / std::numbers::pi, 1.0, 0.05);
}

TEST(Exp, CountingFunction) {
  const auto S = exp_spectrum(0.5, 20);
  EXPECT_NEAR(static_cast<double>(S.total()), std::exp(10.0), 2.0);
  for (std::uint64_t k = 2; k < 2000; k += 37) {
    const double t = std::log(static_cast<double>(k)) / 0.5;
    EXPECT_EQ(S.count_up_to(t), k - 1);
  }
  for (const auto& e : S.entries()) {
    EXPECT_GT(e.length, 0.0);
    EXPECT_EQ(e.multiplicity, 1u);
  }
  EXPECT_THROW(exp_spectrum(0.5, 61), std::invalid_argument);
  EXPECT_THROW(exp_spectrum(0.0, 1), std::invalid_argument);
}

TEST(Schottky, IdentityWordOnly) {
  const auto r = schottky_spectrum(schottky_pair(0.5), {0, 2}, {0.3, 1.5}, 0);
  ASSERT_EQ(r.spectrum.entries().size(), 1u);
  EXPECT_NEAR(r.spectrum.entries()[0].length, hyperbolic_distance({0, 2}, {0.3, 1.5}), 1e-12);
}

TEST(Schottky, ReducedWordCounts) {
  const auto r = schottky_spectrum(schottky_pair(0.5), {0, 2}, {0, 2}, 6);
  ASSERT_EQ(r.words_per_length.size(), 7u);
  EXPECT_EQ(r.words_per_length[0], 1u);
  std::uint64_t expect = 4;
  for (std::size_t n = 1; n <= 6; ++n, expect *= 3) EXPECT_EQ(r.words_per_length[n], expect);
}

TEST(Schottky, Guards) {
  EXPECT_THROW(schottky_spectrum(schottky_pair(0.5), {0, 2}, {0, 2}, 15), std::invalid_argument);
  const std::vector<SL2R> bad{{2, 0, 0, 1}};
  EXPECT_THROW(schottky_spectrum(bad, {0, 2}, {0, 2}, 2), std::invalid_argument);
}

TEST(Schottky, CompletenessCertificate) {
  // Every distance below the certified radius is already present with a
  // shorter word budget.
  const auto gens = schottky_pair(0.5);
  const auto small = schottky_spectrum(gens, {0, 2}, {0, 2}, 6);
  const auto big = schottky_spectrum(gens, {0, 2}, {0, 2}, 10);
  ASSERT_TRUE(small.certified);
  EXPECT_GT(small.completeness_radius, 0.0);
  EXPECT_LT(small.completeness_radius, big.completeness_radius);
  EXPECT_EQ(small.spectrum.count_up_to(small.completeness_radius), big.spectrum.count_up_to(small.completeness_radius));

  // Overlapping isometric circles: nothing is certified.
  const std::vector<SL2R> overlapping{{2, 3, 1, 2}, {2, -3, -1, 2}};
  const auto r = schottky_spectrum(overlapping, {0, 5}, {0, 5}, 4);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.completeness_radius, 0.0);
}

TEST(Schottky, PositiveGrowth) {
  const auto r = schottky_spectrum(schottky_pair(0.9), {0, 2}, {0, 2}, 12);
  ASSERT_TRUE(r.certified);
  // Least-squares slope of log N(t) over the second half of the certified range.
  std::vector<double> xs, ys;
  const double R = r.completeness_radius;
  for (int i = 0; i <= 40; ++i) {
    const double t = R / 2 + (R / 2) * i / 40.0;
    xs.push_back(t);
    ys.push_back(std::log(static_cast<double>(r.spectrum.count_up_to(t))));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  EXPECT_GE(slope, 0.5);
  EXPECT_LE(slope, 1.3);
}

TEST(SpectrumModel, TrivialAndPlanted) {
  const ChordSpectrum S({{1, 1}, {2, 1}}, 3);
  EXPECT_EQ(reduce(complex_from_spectrum(S, SpectrumModel::trivial(), 1)),
            Barcode({{0, kInfinity, 1}, {1, kInfinity, 1}, {2, kInfinity, 1}}));
  const auto planted = reduce(complex_from_spectrum(S, SpectrumModel::planted(ConstantGap{0.1}, 7), 2));
  EXPECT_EQ(planted, Barcode({{0, kInfinity, 2}, {1, 1.1, 1}, {2, 2.1, 1}}));
  EXPECT_THROW(complex_from_spectrum(S, SpectrumModel::trivial(), -1), std::invalid_argument);
}

TEST(SpectrumModel, TrivialGivesOneInfiniteBarPerGenerator) {
  const auto S = torus_spectrum({0, 0}, {0.25, 0.5}, 8);
  const auto C = complex_from_spectrum(S, SpectrumModel::trivial(), 3);
  const auto B = reduce(C);
  EXPECT_EQ(B.infinite_count(), C.size());
  for (double t : {1.0, 3.0, 7.5}) EXPECT_EQ(count_prefix_bars(B, 0.3, t), S.count_up_to(t) + 3);
}

TEST(SpectrumModel, PlantedIsSeeded) {
  const auto S = exp_spectrum(1.0, 4);
  const auto model = SpectrumModel::planted(ExponentialGap{0.2}, 42);
  EXPECT_EQ(reduce(complex_from_spectrum(S, model, 0)), reduce(complex_from_spectrum(S, model, 0)));
}

TEST(SpectrumIo, RoundTripAndErrors) {
  const auto S = torus_spectrum({0, 0}, {0.3, 0.1}, 6);
  std::stringstream ss;
  write_spectrum(ss, S);
  EXPECT_EQ(read_spectrum(ss), S);
  std::stringstream bad("spectrum v1\nchord 2 1\nchord 1 1\ncutoff 3\n");
  EXPECT_THROW(read_spectrum(bad), ParseError);
  std::stringstream missing("spectrum v1\nchord 1 1\n");
  EXPECT_THROW(read_spectrum(missing), ParseError);
}

TEST(ChordSpectrum, MergesAfterRounding) {
  const auto S = ChordSpectrum::from_lengths({1.0, 1.0 + 1e-14, 2.0, 0.5}, 3.0);
  ASSERT_EQ(S.entries().size(), 3u);
  EXPECT_EQ(S.entries()[1].multiplicity, 2u);
  EXPECT_THROW(ChordSpectrum({{0.0, 1}}, 1.0), std::invalid_argument);
  EXPECT_THROW(ChordSpectrum({{2.0, 1}}, 1.0), std::invalid_argument);
}
