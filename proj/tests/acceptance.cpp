// Acceptance run: one PASS/FAIL line per criterion, with wall time against its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "support/random.hpp"
#include "wfbar/wfbar.hpp"

using namespace wfbar;
using wfbar::testing::Rng;
using wfbar::testing::uniform;
using wfbar::testing::uniform_int;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  v.back() = hi;
  return v;
}

const std::vector<double> kEps{1.0, 0.5, 0.25, 0.1};

// 1 --------------------------------------------------------------------------
Outcome reduction_matches_oracle() {
  Rng rng(1001);
  int bad = 0;
  std::size_t gens = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto C = wfbar::testing::random_complex(rng, 12);
    gens += C.size();
    if (reduce(C) != oracle_barcode(C)) ++bad;
  }
  return {bad == 0, fmt("%d/1000 mismatches, %zu generators total", bad, gens)};
}

// 2 --------------------------------------------------------------------------
Outcome stability() {
  Rng rng(1002);
  int bad = 0;
  double worst = -kInfinity;
  for (int trial = 0; trial < 500; ++trial) {
    const auto C = wfbar::testing::random_complex(rng, 12);
    const double delta = uniform(rng, 0.0, 0.6);
    const auto D = wfbar::testing::perturb_actions(C, delta, rng);
    double moved = 0.0;
    for (std::size_t i = 0; i < C.size(); ++i)
      moved = std::max(moved, std::abs(C.generator(i).action - D.generator(i).action));
    const double d = bottleneck(reduce(C), reduce(D));
    worst = std::max(worst, d - moved);
    if (d > moved + 1e-12) ++bad;
  }
  return {bad == 0, fmt("%d/500 violations, max(d_bot - delta) = %.3g", bad, worst)};
}

// 3 --------------------------------------------------------------------------
Outcome exact_triangle() {
  Rng rng(1003);
  const auto grid = linspace(0.05, 4.0, 10);
  int bad = 0, checks = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto C = wfbar::testing::random_complex(rng, 12);
    double tau;
    bool collides;
    do {
      tau = uniform(rng, -3.0, 9.0);
      collides = false;
      for (const auto& g : C.generators()) collides = collides || g.action == tau;
    } while (collides);
    const auto T = split_at(C, tau);
    const auto bc = reduce(C), ba = reduce(T.low), bq = reduce(T.quotient);
    for (double e : grid) {
      checks += 2;
      if (count_long_bars(bc, 2 * e) > count_long_bars(ba, e) + count_long_bars(bq, e)) ++bad;
      if (count_long_bars(bq, 2 * e) > count_long_bars(bc, e) + count_long_bars(ba, e)) ++bad;
    }
  }
  return {bad == 0, fmt("%d/%d violations", bad, checks)};
}

// 4 --------------------------------------------------------------------------
Outcome truncation_properties() {
  Rng rng(1004);
  int contraction = 0, sandwich = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Barcode X = wfbar::testing::random_real_barcode(rng, 6, 0.3);
    const Barcode Y = wfbar::testing::random_real_barcode(rng, 6, 0.3);
    const double T = uniform(rng, -2, 10);
    if (bottleneck(truncate(X, T), truncate(Y, T)) > bottleneck(X, Y) + 1e-12) ++contraction;

    const Barcode B = wfbar::testing::random_barcode(rng, 10);
    const double t = uniform(rng, -2, 10), e = uniform(rng, 0.05, 3.0);
    const auto n = count_long_bars(truncate(B, t), e);
    if (count_prefix_bars(B, e, t - e) > n || n > count_prefix_bars(B, e, t)) ++sandwich;
  }
  return {contraction + sandwich == 0,
          fmt("contraction %d/1000, sandwich %d/1000 violations", contraction, sandwich)};
}

// 5 --------------------------------------------------------------------------
Outcome reparametrization() {
  const auto P = ConvexProfile::quadratic(2.0);
  const auto grid = linspace(0.0, 2.0, 1000);
  double err = 0.0;
  for (double t : grid) err = std::max(err, std::abs(P.action_of_length(t) - (t + t * t / 4)));
  const bool bilip = static_cast<bool>(check_bilipschitz(P, grid));
  const std::vector<double> scales{1, 1.5, 2, 3, 5, 8, 13, 21};
  const bool mono = static_cast<bool>(check_scaling_monotone(P, scales, grid));
  return {err <= 1e-9 && bilip && mono,
          fmt("max |A(t) - t - t^2/4| = %.2g, bilipschitz %s, scaling monotone %s", err, bilip ? "ok" : "FAILED",
              mono ? "ok" : "FAILED")};
}

// 6 --------------------------------------------------------------------------
Outcome entropy_calibration() {
  const auto trivial = [](const ChordSpectrum& S, std::span<const double> levels) {
    return barcode_entropy(truncation_family(reduce(complex_from_spectrum(S, SpectrumModel::trivial(), 0)), levels),
                           kEps);
  };
  const auto exp_S = exp_spectrum(0.5, 22);
  const auto torus_S = torus_spectrum({0.1, 0.2}, {0.6, 0.4}, 200);
  const double exp_rate = trivial(exp_S, linspace(6, 22, 17)).headline;
  const double torus_rate = trivial(torus_S, linspace(20, 200, 37)).headline;

  // Positive part: planted short bars plus three action-zero generators.
  const auto members = [](const ChordSpectrum& S, std::span<const double> levels) {
    const auto model = SpectrumModel::planted(ExponentialGap{4.0}, 9);
    std::vector<ComplexMember> out;
    for (double t : levels) out.push_back({t, t, complex_from_spectrum(S.truncated(t), model, 3)});
    return out;
  };
  const auto exp_pos = positive_part_entropy(members(exp_S, linspace(10, 22, 13)), half_smallest_positive_action(),
                                             kEps, Normalization::truncation);
  const auto torus_pos = positive_part_entropy(members(torus_S, linspace(20, 200, 37)),
                                               half_smallest_positive_action(), kEps, Normalization::truncation);
  const bool ok = std::abs(exp_rate - 0.5) <= 0.05 && torus_rate <= 0.05 && exp_pos.headline_gap <= 0.02 &&
                  torus_pos.headline_gap <= 0.02;
  return {ok, fmt("exp %.4f, torus %.4f, positive-part gaps %.2g (exp) %.2g (torus)", exp_rate, torus_rate,
                  exp_pos.headline_gap, torus_pos.headline_gap)};
}

// 7 --------------------------------------------------------------------------
Outcome profile_independence() {
  const auto S = exp_spectrum(0.5, 24);
  const auto scales = linspace(6, 24, 19);
  double rate[2];
  int k = 0;
  for (double rmax : {2.0, 4.0}) {
    const auto P = ConvexProfile::linear_derivative(rmax, 1.0);
    const auto members = hamiltonian_members(P, S, scales, SpectrumModel::planted(UniformGap{0.05, 1.0}, 5), 0);
    rate[k++] = barcode_entropy(reduce_family(members, Normalization::scaling), kEps).headline;
  }
  const double gap = std::abs(rate[0] - rate[1]);
  return {gap <= 0.05, fmt("r_max=2: %.4f, r_max=4: %.4f, difference %.3g", rate[0], rate[1], gap)};
}

// 8 --------------------------------------------------------------------------

// Glues a low part L (actions <= 0) under an upper part U (actions > 0): each
// upper generator u gets the extra boundary phi(u) = d_L psi(u) + psi(d_U u)
// for a random psi: U -> L, which keeps d^2 = 0.
FilteredComplex glue(const FilteredComplex& L, const FilteredComplex& U, Rng& rng) {
  FilteredComplex C;
  for (const auto& g : L.generators()) C.add_generator("l:" + g.id, g.action);
  for (const auto& g : U.generators()) C.add_generator("u:" + g.id, g.action);
  for (std::size_t i = 0; i < L.size(); ++i) C.set_boundary(i, {L.boundary(i).begin(), L.boundary(i).end()});
  std::vector<std::vector<std::size_t>> psi(U.size());
  if (!L.empty())
    for (auto& p : psi)
      for (int k = uniform_int(rng, 0, 2); k > 0; --k) p.push_back(static_cast<std::size_t>(uniform_int(rng, 0, int(L.size()) - 1)));
  std::vector<char> parity(C.size());
  for (std::size_t u = 0; u < U.size(); ++u) {
    std::fill(parity.begin(), parity.end(), 0);
    for (std::size_t v : U.boundary(u)) {
      parity[L.size() + v] ^= 1;
      for (std::size_t l : psi[v]) parity[l] ^= 1;
    }
    for (std::size_t l : psi[u])
      for (std::size_t m : L.boundary(l)) parity[m] ^= 1;
    std::vector<std::size_t> terms;
    for (std::size_t i = 0; i < C.size(); ++i)
      if (parity[i]) terms.push_back(i);
    C.set_boundary(L.size() + u, std::move(terms));
  }
  return C;
}

FilteredComplex random_low_part(Rng& rng) {
  const auto R = wfbar::testing::random_complex(rng, 10);
  double top = -kInfinity;
  for (const auto& g : R.generators()) top = std::max(top, g.action);
  FilteredComplex L;
  const double shift = wfbar::testing::coin(rng) ? top : top + uniform(rng, 0.0, 2.0);
  for (const auto& g : R.generators()) L.add_generator(g.id, g.action - shift);
  for (std::size_t i = 0; i < R.size(); ++i) L.set_boundary(i, {R.boundary(i).begin(), R.boundary(i).end()});
  return L;
}

Barcode positive_births(const Barcode& B) {
  std::vector<Bar> out;
  for (const Bar& b : B.bars())
    if (b.birth > 0.0) out.push_back(b);
  return Barcode(std::move(out));
}

Outcome filling_independence() {
  Rng rng(1008);
  const auto S = exp_spectrum(0.6, 11);
  const auto levels = linspace(4, 11, 8);
  int bar_mismatch = 0, invalid = 0;
  double worst = 0.0;
  for (int pair = 0; pair < 200; ++pair) {
    const auto model = SpectrumModel::planted(ExponentialGap{uniform(rng, 0.2, 2.0)}, rng());
    const double eta = uniform(rng, 0.3, 3.0);
    const auto L1 = random_low_part(rng), L2 = random_low_part(rng);
    ScalingFamily F[2] = {{Normalization::truncation, {}}, {Normalization::truncation, {}}};
    for (double t : levels) {
      const auto U = complex_from_spectrum(S.truncated(t), model, 0);
      const auto C1 = glue(L1, U, rng), C2 = glue(L2, U, rng);
      if (!validate(C1) || !validate(C2)) ++invalid;
      const auto B1 = reduce(C1), B2 = reduce(C2);
      if (short_positive_bars(B1, eta) != short_positive_bars(B2, eta)) ++bar_mismatch;
      F[0].members.push_back({t, t, std::make_shared<const Barcode>(positive_births(B1))});
      F[1].members.push_back({t, t, std::make_shared<const Barcode>(positive_births(B2))});
    }
    worst = std::max(worst, std::abs(barcode_entropy(F[0], kEps).headline - barcode_entropy(F[1], kEps).headline));
  }
  return {bar_mismatch == 0 && invalid == 0 && worst == 0.0,
          fmt("%d/1600 short-bar mismatches, %d invalid gluings, max headline difference %.3g", bar_mismatch,
              invalid, worst)};
}

// 9 --------------------------------------------------------------------------
Outcome crofton() {
  const auto a = crofton_lines(curves::circle(1.0), 100000, 2024);
  const auto b = crofton_lines(curves::circle(1.0), 100000, 2024);
  const double target = 4 * std::numbers::pi;
  const bool circle_ok = std::abs(a.estimate - target) <= std::max(0.05 * target, 3 * a.stderr_);
  const bool repro = a.estimate == b.estimate && a.stderr_ == b.stderr_;

  const std::vector<std::pair<const char*, PlaneCurve>> family{
      {"circle", curves::circle(1.0)},
      {"ellipse", curves::ellipse(3.0, 0.5)},
      {"segment", curves::segment(2.0)},
      {"square", curves::regular_polygon(4, 1.0)},
      {"star", curves::star(5, 1.0, 0.35)},
      {"spiral", curves::spiral(0.1, 3.0)},
      {"sine", curves::sine_graph(4.0, 0.5, 3.0)},
      {"limacon", curves::limacon(1.0, 1.5)},
      {"lemniscate", curves::lemniscate(1.0)},
      {"zigzag", PlaneCurve::polyline({{0, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 0}, {5, 1}}, false)},
  };
  int bad = 0;
  double worst = 0.0;
  std::uint64_t seed = 1;
  for (const auto& [name, curve] : family) {
    const auto r = crofton_lines(curve, 100000, seed++);
    const double bound = 2.0 * 1.05 * r.length + 3 * r.stderr_;
    worst = std::max(worst, r.ratio);
    if (r.estimate > bound) {
      ++bad;
      std::printf("    crofton bound fails on %s: ratio %.4f\n", name, r.ratio);
    }
  }
  return {circle_ok && repro && bad == 0,
          fmt("circle %.4f (4pi = %.4f, se %.3g), reproducible %s, family violations %d/10, max ratio %.4f",
              a.estimate, target, a.stderr_, repro ? "yes" : "no", bad, worst)};
}

// 10 -------------------------------------------------------------------------
Outcome tomograph() {
  constexpr std::size_t d = 4;
  constexpr double r = 1.0;
  const auto cal = calibrate_tomograph(d, r, 2000, 77);
  const std::vector<TrigPolynomial> gs{
      {},
      {0.0, {}, {0.0, 0.3}},
      {0.0, {0.0, 0.0, 0.5}, {0.2}},
      {0.0, {0.0, 0.0, 0.0, 0.0, 0.1}, {}},
      {0.0, {0.0, 0.4}, {0.8}},
  };
  int bad = 0;
  double worst_degenerate = 0.0, worst_ratio = 0.0;
  std::uint64_t seed = 100;
  for (const auto& g : gs) {
    const auto res = tomograph_census(g, d, r, 100000, seed++);
    const double bound = cal.constant * g.derivative_graph_length();
    worst_degenerate = std::max(worst_degenerate, res.degenerate_fraction);
    worst_ratio = std::max(worst_ratio, res.mean_n / bound);
    if (res.degenerate_fraction >= 1e-3 || res.mean_n > bound) ++bad;
  }
  return {bad == 0, fmt("constant %.4f, max degenerate fraction %.2g, max mean N / bound %.4f, failures %d/5",
                        cal.constant, worst_degenerate, worst_ratio, bad)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reduction matches oracle", 10, reduction_matches_oracle},
      {2, "stability under action perturbation", 30, stability},
      {3, "exact triangle bar inequality", 30, exact_triangle},
      {4, "truncation contraction and sandwich", 10, truncation_properties},
      {5, "reparametrization calibration", 5, reparametrization},
      {6, "entropy calibration", 60, entropy_calibration},
      {7, "profile independence", 60, profile_independence},
      {8, "low-action independence", 30, filling_independence},
      {9, "Crofton estimator", 30, crofton},
      {10, "tomograph census", 60, tomograph},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs < c.budget_s;
    failed += !pass;
    std::printf("%s  [%2d] %-38s %6.2f s / %3.0f s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
