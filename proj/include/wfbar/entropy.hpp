#pragma once

// Barcode-entropy estimators.
//
// The entropy at scale eps is the exponential growth rate of the number of
// bars of length >= eps, along either a truncation family (one barcode cut at
// growing levels t, rate per unit t) or a Hamiltonian scaling family (the
// barcode of sH cut at sB, rate per unit sT). On finite data the limsup is
// estimated as the largest least-squares slope of log+ counts over sliding
// windows in the later part of the schedule.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfbar/barcode.hpp"
#include "wfbar/filtered_complex.hpp"
#include "wfbar/parallel.hpp"
#include "wfbar/profile.hpp"
#include "wfbar/reduction.hpp"
#include "wfbar/spectrum.hpp"
#include "wfbar/text.hpp"

namespace wfbar {

inline double log_plus(double x) { return x > 0.0 ? std::max(0.0, std::log(x)) : 0.0; }

struct CountPoint {
  double x = 0.0;
  std::uint64_t n = 0;
};

struct GrowthFit {
  double rate = 0.0;      // slope clamped below at 0
  double slope = 0.0;     // raw least-squares slope
  double intercept = 0.0;
  double residual = 0.0;  // RMS deviation of the fit
  double window_lo = 0.0, window_hi = 0.0;
  std::size_t points = 0;
};

namespace detail {

inline GrowthFit fit_log_line(std::span<const double> xs, std::span<const double> ys) {
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  GrowthFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (f.intercept + f.slope * xs[i]);
    ss += e * e;
  }
  f.residual = std::sqrt(ss / n);
  f.rate = std::max(0.0, f.slope);
  f.window_lo = xs.front();
  f.window_hi = xs.back();
  f.points = xs.size();
  return f;
}

}  // namespace detail

/// Least-squares slope of log n against x over points with n >= 1 in [lo, hi], clamped at 0.
inline GrowthFit growth_rate(std::span<const CountPoint> counts, double window_lo, double window_hi) {
  std::vector<double> xs, ys;
  for (const auto& c : counts)
    if (c.x >= window_lo && c.x <= window_hi && c.n >= 1) {
      xs.push_back(c.x);
      ys.push_back(std::log(static_cast<double>(c.n)));
    }
  if (xs.size() < 3) throw std::invalid_argument("growth_rate needs at least 3 points with n >= 1 in the window");
  return detail::fit_log_line(xs, ys);
}

// ---------------------------------------------------------------------------
// Families

enum class Normalization {
  truncation,  // abscissa t: rate of log+ b_eps(tru(B, t)) per unit t
  scaling,     // abscissa sT: rate of log+ b_eps(tru(B(sH), sB)) per unit sT
};

inline const char* to_string(Normalization n) { return n == Normalization::truncation ? "truncation" : "scaling"; }

struct FamilyMember {
  double x = 0.0;      // abscissa of the growth fit (t, or sT)
  double level = 0.0;  // truncation level (t, or sB)
  std::shared_ptr<const Barcode> barcode;
};

struct ScalingFamily {
  Normalization normalization = Normalization::truncation;
  std::vector<FamilyMember> members;
};

/// One barcode truncated at each of the given levels.
inline ScalingFamily truncation_family(Barcode B, std::span<const double> levels) {
  auto shared = std::make_shared<const Barcode>(std::move(B));
  ScalingFamily F{Normalization::truncation, {}};
  for (double t : levels) F.members.push_back({t, t, shared});
  return F;
}

struct ComplexMember {
  double x = 0.0;
  double level = 0.0;
  FilteredComplex complex;
};

/// Reduces every member (in parallel); failures propagate with the member index.
inline ScalingFamily reduce_family(std::span<const ComplexMember> members, Normalization normalization) {
  std::vector<std::shared_ptr<const Barcode>> barcodes(members.size());
  parallel_for(members.size(), [&](std::size_t i) {
    try {
      barcodes[i] = std::make_shared<const Barcode>(reduce(members[i].complex));
    } catch (const std::exception& e) {
      throw InvariantViolation("family member " + std::to_string(i) + ": " + e.what());
    }
  });
  ScalingFamily F{normalization, {}};
  for (std::size_t i = 0; i < members.size(); ++i) F.members.push_back({members[i].x, members[i].level, barcodes[i]});
  return F;
}

/// Complexes of the scaled Hamiltonians s_n H: chords of length <= s_n T pushed
/// through A_{s_n h}, modelled by `model`, truncated at s_n B, abscissa s_n T.
inline std::vector<ComplexMember> hamiltonian_members(const ConvexProfile& P, const ChordSpectrum& S,
                                                      std::span<const double> scales, const SpectrumModel& model,
                                                      long long zero_action_count) {
  std::vector<ComplexMember> out;
  for (double s : scales) {
    const ConvexProfile sp = scaled_profile(P, s);
    if (S.cutoff() < sp.slope())
      throw std::invalid_argument("spectrum cutoff " + text::format_real(S.cutoff()) + " below the slope " +
                                  text::format_real(sp.slope()) + " of the scaled profile");
    const auto actions = spectrum_to_actions(sp, S);
    out.push_back({sp.slope(), sp.offset(), complex_from_spectrum(actions.actions, model, zero_action_count)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct EntropyOptions {
  double window_fraction = 0.5;  // window length as a fraction of the schedule
  /// Count via the prefix count of bars born by level - eps instead of
  /// truncating; both give the same numbers.
  bool prefix_counts = false;
};

struct EntropyRow {
  double eps = 0.0;
  double rate = 0.0;      // monotone envelope over eps' >= eps of raw_rate
  double raw_rate = 0.0;  // best window slope at this eps, clamped at 0
  double window_lo = 0.0, window_hi = 0.0;
  double residual = 0.0;
  std::vector<std::uint64_t> counts;  // one per member, in schedule order
};

struct EntropyReport {
  Normalization normalization = Normalization::truncation;
  std::vector<double> xs;
  std::vector<EntropyRow> rows;  // eps decreasing
  double headline = 0.0;         // rate at the smallest eps
  bool raw_monotone = true;      // raw rates already non-decreasing as eps decreases

  const EntropyRow& row(double eps) const {
    for (const auto& r : rows)
      if (r.eps == eps) return r;
    throw std::out_of_range("no report row for eps = " + text::format_real(eps));
  }
};

namespace detail {

inline void require_eps_grid(std::span<const double> eps_grid) {
  if (eps_grid.empty()) throw std::invalid_argument("empty eps grid");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0)) throw std::invalid_argument("eps grid must be positive");
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1])) throw std::invalid_argument("eps grid must be strictly decreasing");
  }
}

// Max slope over windows of w consecutive points whose start lies in the later
// half of the admissible start positions.
inline GrowthFit sliding_limsup(std::span<const double> xs, std::span<const double> ys, double window_fraction) {
  const std::size_t n = xs.size();
  const std::size_t w = std::min(n, std::max<std::size_t>(3, static_cast<std::size_t>(
                                                                 std::ceil(window_fraction * static_cast<double>(n)))));
  const std::size_t last = n - w;
  GrowthFit best;
  best.slope = -std::numeric_limits<double>::infinity();
  for (std::size_t s = last / 2; s <= last; ++s) {
    const GrowthFit f = fit_log_line(xs.subspan(s, w), ys.subspan(s, w));
    if (f.slope > best.slope) best = f;
  }
  return best;
}

}  // namespace detail

/// Assembles a report from precomputed counts (counts[k][i] for eps_grid[k], member i).
inline EntropyReport entropy_from_counts(Normalization normalization, std::vector<double> xs,
                                         std::span<const double> eps_grid,
                                         std::vector<std::vector<std::uint64_t>> counts,
                                         const EntropyOptions& options = {}) {
  detail::require_eps_grid(eps_grid);
  if (xs.size() < 3) throw std::invalid_argument("entropy estimate needs at least 3 family members");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("family schedule must be strictly increasing");
  EntropyReport report;
  report.normalization = normalization;
  report.xs = xs;
  double envelope = 0.0;
  for (std::size_t k = 0; k < eps_grid.size(); ++k) {
    std::vector<double> ys;
    for (auto n : counts[k]) ys.push_back(log_plus(static_cast<double>(n)));
    const GrowthFit fit = detail::sliding_limsup(xs, ys, options.window_fraction);
    EntropyRow row;
    row.eps = eps_grid[k];
    row.raw_rate = fit.rate;
    row.window_lo = fit.window_lo;
    row.window_hi = fit.window_hi;
    row.residual = fit.residual;
    row.counts = std::move(counts[k]);
    if (row.raw_rate < envelope) report.raw_monotone = false;
    envelope = std::max(envelope, row.raw_rate);
    row.rate = envelope;
    report.rows.push_back(std::move(row));
  }
  report.headline = report.rows.back().rate;
  for (const auto& r : report.rows)
    if (r.rate < 0.0) throw std::logic_error("negative entropy rate");
  return report;
}

inline EntropyReport barcode_entropy(const ScalingFamily& F, std::span<const double> eps_grid,
                                     const EntropyOptions& options = {}) {
  detail::require_eps_grid(eps_grid);
  if (F.members.empty()) throw std::invalid_argument("empty family");
  std::vector<const FamilyMember*> members;
  for (const auto& m : F.members) members.push_back(&m);
  std::stable_sort(members.begin(), members.end(), [](auto* a, auto* b) { return a->x < b->x; });

  std::vector<std::vector<std::uint64_t>> counts(eps_grid.size(), std::vector<std::uint64_t>(members.size()));
  parallel_for(members.size(), [&](std::size_t i) {
    const FamilyMember& m = *members[i];
    if (options.prefix_counts) {
      for (std::size_t k = 0; k < eps_grid.size(); ++k)
        counts[k][i] = count_prefix_bars(*m.barcode, eps_grid[k], m.level - eps_grid[k]);
    } else {
      const Barcode cut = truncate(*m.barcode, m.level);
      for (std::size_t k = 0; k < eps_grid.size(); ++k) counts[k][i] = count_long_bars(cut, eps_grid[k]);
    }
  });
  std::vector<double> xs;
  for (auto* m : members) xs.push_back(m->x);
  return entropy_from_counts(F.normalization, std::move(xs), eps_grid, std::move(counts), options);
}

// ---------------------------------------------------------------------------
// Positive part

/// Threshold rule for the positive-part split: a value strictly between 0 and
/// the smallest positive action of the member complex.
using ThresholdRule = std::function<double(const FilteredComplex&)>;

inline double smallest_positive_action(const FilteredComplex& C) {
  double s = kInfinity;
  for (const auto& g : C.generators())
    if (g.action > 0.0) s = std::min(s, g.action);
  return s;
}

inline ThresholdRule half_smallest_positive_action() {
  return [](const FilteredComplex& C) {
    const double s = smallest_positive_action(C);
    return std::isinf(s) ? 1.0 : 0.5 * s;
  };
}

struct EntropyChainRow {
  double eps = 0.0;
  double positive_at_double = 0.0;  // positive-part rate at 2 eps
  double full = 0.0;                // full rate at eps
  double positive_at_half = 0.0;    // positive-part rate at eps / 2
  bool ok = true;
};

struct PositivePartComparison {
  EntropyReport full;
  EntropyReport positive;
  std::vector<EntropyChainRow> chain;
  double headline_gap = 0.0;  // |full.headline - positive.headline|
  bool ok = true;
};

inline constexpr double kEntropyChainTolerance = 0.02;

/// Entropy of the full barcodes against the barcodes of the quotient by the
/// part of action below the split threshold, with the finite-data check
/// rate+(2 eps) <= rate(eps) <= rate+(eps / 2) on the eps grid.
inline PositivePartComparison positive_part_entropy(std::span<const ComplexMember> members, const ThresholdRule& rule,
                                                    std::span<const double> eps_grid, Normalization normalization,
                                                    double tolerance = kEntropyChainTolerance,
                                                    const EntropyOptions& options = {}) {
  detail::require_eps_grid(eps_grid);
  std::vector<ComplexMember> positive(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const FilteredComplex& C = members[i].complex;
    const double tau = rule(C);
    const double smin = smallest_positive_action(C);
    if (!(tau > 0.0 && tau < smin))
      throw std::invalid_argument("member " + std::to_string(i) + ": split threshold " + text::format_real(tau) +
                                  " not strictly between 0 and the smallest positive action");
    positive[i] = {members[i].x, members[i].level, split_at(C, tau).quotient};
  }

  std::vector<double> grid;
  for (double e : eps_grid) grid.insert(grid.end(), {2.0 * e, e, 0.5 * e});
  std::sort(grid.begin(), grid.end(), std::greater<>());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  PositivePartComparison out;
  const auto full_family = reduce_family(members, normalization);
  const auto pos_family = reduce_family(positive, normalization);
  const auto full_ext = barcode_entropy(full_family, grid, options);
  const auto pos_ext = barcode_entropy(pos_family, grid, options);
  for (double e : eps_grid) {
    EntropyChainRow r{e, pos_ext.row(2.0 * e).rate, full_ext.row(e).rate, pos_ext.row(0.5 * e).rate, true};
    r.ok = r.positive_at_double <= r.full + tolerance && r.full <= r.positive_at_half + tolerance;
    out.ok = out.ok && r.ok;
    out.chain.push_back(r);
  }
  out.full = barcode_entropy(full_family, eps_grid, options);
  out.positive = barcode_entropy(pos_family, eps_grid, options);
  out.headline_gap = std::abs(out.full.headline - out.positive.headline);
  return out;
}

// ---------------------------------------------------------------------------
// TSV output

inline void write_entropy_tsv(std::ostream& out, const EntropyReport& report) {
  out << "epsilon\trate\twindow_lo\twindow_hi\tresidual\n";
  for (const auto& r : report.rows)
    out << text::format_real(r.eps) << '\t' << text::format_real(r.rate) << '\t' << text::format_real(r.window_lo)
        << '\t' << text::format_real(r.window_hi) << '\t' << text::format_real(r.residual) << '\n';
}

/// Gnuplot-ready table: abscissa then one count column per eps.
inline void write_counts_table(std::ostream& out, const EntropyReport& report) {
  out << "# x";
  for (const auto& r : report.rows) out << "\tb_eps=" << text::format_real(r.eps);
  out << '\n';
  for (std::size_t i = 0; i < report.xs.size(); ++i) {
    out << text::format_real(report.xs[i]);
    for (const auto& r : report.rows) out << '\t' << r.counts[i];
    out << '\n';
  }
}

}  // namespace wfbar
