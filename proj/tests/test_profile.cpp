#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "wfbar/barcode.hpp"
#include "wfbar/profile.hpp"

using namespace wfbar;

namespace {

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
  g.back() = hi;
  return g;
}

ConvexProfile kinked() { return ConvexProfile({{1.0, 0.0}, {1.5, 0.4}, {2.2, 2.0}, {3.0, 2.5}}); }

}  // namespace

TEST(Profile, QuadraticClosedForm) {
  const auto P = ConvexProfile::quadratic(2.0);
  EXPECT_EQ(P.slope(), 2.0);
  EXPECT_EQ(P.offset(), 3.0);
  EXPECT_EQ(P.action_of_length(0.0), 0.0);
  EXPECT_EQ(P.action_of_length(2.0), 3.0);
  EXPECT_NEAR(P.action_of_length(1.0), 1.25, 1e-15);
  for (double t : uniform_grid(0, 2, 257)) EXPECT_NEAR(P.action_of_length(t), t + t * t / 4, 1e-12);
  EXPECT_THROW(P.action_of_length(-0.1), std::invalid_argument);
  EXPECT_THROW(P.action_of_length(2.1), std::invalid_argument);
}

TEST(Profile, HAndDerivative) {
  const auto P = kinked();
  EXPECT_EQ(P.h(1.0), 0.0);
  EXPECT_NEAR(P.h(1.5), 0.5 * 0.5 * 0.4, 1e-15);
  EXPECT_NEAR(P.hprime(1.85), 1.2, 1e-12);
  EXPECT_NEAR(P.h(4.0), 4.0 * 2.5 - P.offset(), 1e-12);
  // h continuous across knots, h' = dh/dr numerically.
  for (double r : uniform_grid(1.01, 2.99, 50)) EXPECT_NEAR((P.h(r + 1e-6) - P.h(r - 1e-6)) / 2e-6, P.hprime(r), 1e-5);
}

TEST(Profile, Rejections) {
  EXPECT_THROW(ConvexProfile({{1.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(ConvexProfile({{1.0, 0.1}, {2.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(ConvexProfile({{1.0, 0.0}, {2.0, 1.0}, {1.5, 2.0}}), std::invalid_argument);
  EXPECT_THROW(ConvexProfile({{1.0, 0.0}, {2.0, 1.0}, {3.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(scaled_profile(ConvexProfile::quadratic(2.0), 0.5), std::invalid_argument);
}

TEST(Profile, InverseRoundTrip) {
  for (const auto& P : {ConvexProfile::quadratic(2.0), kinked(), ConvexProfile::linear_derivative(4.0, 3.0)}) {
    for (double t : uniform_grid(0, P.slope(), 200)) EXPECT_NEAR(P.length_of_action(P.action_of_length(t)), t, 1e-9);
    const ActionMap A(P);
    EXPECT_TRUE(sampled_strictly_increasing(A, 0.0, P.slope()));
  }
}

TEST(Profile, Bilipschitz) {
  const auto P = ConvexProfile::quadratic(2.0);
  EXPECT_TRUE(check_bilipschitz(P, uniform_grid(0, 2, 100)));
  const std::vector<double> degenerate{1.0, 1.0};
  EXPECT_TRUE(check_bilipschitz(P, degenerate));
  EXPECT_TRUE(check_bilipschitz(kinked(), uniform_grid(0, 2.5, 120)));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 2.5);
  const auto K = kinked();
  for (int i = 0; i < 1000; ++i) {
    double a = u(rng), b = u(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const double ratio = (K.action_of_length(b) - K.action_of_length(a)) / (b - a);
    EXPECT_GE(ratio, 1.0 - 1e-9);
    EXPECT_LE(ratio, K.r_max() + 1e-9);
  }
}

TEST(Profile, ScalingMonotone) {
  const auto P = ConvexProfile::quadratic(2.0);
  EXPECT_EQ(scaled_profile(P, 1.0).action_of_length(1.0), P.action_of_length(1.0));
  for (double s : {1.0, 2.0, 5.0, 10.0}) EXPECT_NEAR(scaled_profile(P, s).action_of_length(1.0), 1.0 + 0.25 / s, 1e-12);
  const std::vector<double> scales{1, 1.5, 2, 4, 8, 16};
  EXPECT_TRUE(check_scaling_monotone(P, scales, uniform_grid(0, 2, 101)));
  EXPECT_TRUE(check_scaling_monotone(kinked(), scales, uniform_grid(0, 2.5, 101)));
}

TEST(Profile, ScaledActionApproachesLength) {
  const auto K = kinked();
  double prev = kInfinity;
  for (double s : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
    double gap = 0.0;
    for (double t : uniform_grid(0, K.slope(), 101)) gap = std::max(gap, scaled_profile(K, s).action_of_length(t) - t);
    EXPECT_LE(gap, prev);
    prev = gap;
  }
  EXPECT_LT(prev, 0.15);
}

TEST(Profile, SpectrumToActions) {
  const auto P = ConvexProfile::quadratic(2.0);
  EXPECT_TRUE(spectrum_to_actions(P, ChordSpectrum({}, 5.0)).actions.empty());
  const auto one = spectrum_to_actions(P, ChordSpectrum({{1.0, 2}, {2.5, 1}}, 5.0));
  ASSERT_EQ(one.actions.entries().size(), 1u);
  EXPECT_EQ(one.actions.entries()[0].length, 1.25);
  EXPECT_EQ(one.actions.entries()[0].multiplicity, 2u);
  EXPECT_EQ(one.dropped, 1u);
}

TEST(Profile, ReparametrizesActionBarcodes) {
  const auto P = ConvexProfile::quadratic(2.0);
  const Barcode lengths = reparametrize(Barcode({{1.25, 3.0, 1}}), ActionMap(P));
  EXPECT_NEAR(lengths.bars()[0].birth, 1.0, 1e-11);
  EXPECT_EQ(lengths.bars()[0].death, 2.0);
}

TEST(ProfileIo, RoundTripAndErrors) {
  std::stringstream ss;
  write_profile(ss, kinked());
  const auto P = read_profile(ss);
  EXPECT_EQ(P.offset(), kinked().offset());
  std::stringstream bad("profile v1\nrmax 3\nknot 1 0\nknot 2 1\n");
  EXPECT_THROW(read_profile(bad), ParseError);
  std::stringstream nonmono("profile v1\nrmax 3\nknot 1 0\nknot 2 1\nknot 3 0.5\n");
  EXPECT_THROW(read_profile(nonmono), InvariantViolation);
}
