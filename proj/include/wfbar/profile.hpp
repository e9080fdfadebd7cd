#pragma once

// Radial profiles of convex semi-admissible Hamiltonians and the map taking
// Reeb chord lengths to Hamiltonian chord actions.
//
// A profile is h on [1, r_max] with h(1) = h'(1) = 0, continued as rT - B for
// r >= r_max. It is specified by knots of h', which must be strictly
// increasing; h' is linear between knots, so h is piecewise quadratic and
// integrates exactly. A chord of length t = h'(r) has action
// A_h(t) = r h'(r) - h(r).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wfbar/error.hpp"
#include "wfbar/monotone_map.hpp"
#include "wfbar/spectrum.hpp"
#include "wfbar/text.hpp"

namespace wfbar {

struct ProfileKnot {
  double r;
  double hprime;
};

class ConvexProfile {
public:
  explicit ConvexProfile(std::vector<ProfileKnot> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw std::invalid_argument("profile needs at least two knots");
    if (knots_.front().r != 1.0 || knots_.front().hprime != 0.0)
      throw std::invalid_argument("profile must start at the knot r = 1, h' = 0");
    for (std::size_t i = 1; i < knots_.size(); ++i) {
      if (!std::isfinite(knots_[i].r) || !std::isfinite(knots_[i].hprime))
        throw std::invalid_argument("profile knots must be finite");
      if (!(knots_[i].r > knots_[i - 1].r)) throw std::invalid_argument("profile knot radii must increase strictly");
      if (!(knots_[i].hprime > knots_[i - 1].hprime)) throw std::invalid_argument("h' must be strictly increasing");
    }
    h_.assign(knots_.size(), 0.0);
    for (std::size_t i = 1; i < knots_.size(); ++i)
      h_[i] = h_[i - 1] + 0.5 * (knots_[i].r - knots_[i - 1].r) * (knots_[i].hprime + knots_[i - 1].hprime);
    offset_ = r_max() * slope() - h_.back();
    if (!(offset_ > 0.0)) throw std::invalid_argument("profile offset B = r_max T - h(r_max) must be positive");
  }

  /// h(r) = c (r - 1)^2 on [1, r_max]; c = 1 gives the textbook quadratic.
  static ConvexProfile quadratic(double r_max, double c = 1.0) {
    return ConvexProfile({{1.0, 0.0}, {r_max, 2.0 * c * (r_max - 1.0)}});
  }

  /// h' rising linearly from 0 to `slope` across [1, r_max].
  static ConvexProfile linear_derivative(double r_max, double slope) {
    return ConvexProfile({{1.0, 0.0}, {r_max, slope}});
  }

  double r_max() const { return knots_.back().r; }
  double slope() const { return knots_.back().hprime; }
  /// B in the linear tail rT - B; also A_h(T).
  double offset() const { return offset_; }
  std::span<const ProfileKnot> knots() const { return knots_; }

  double h(double r) const {
    if (r <= 1.0) return 0.0;
    if (r >= r_max()) return r * slope() - offset_;
    const std::size_t i = segment_by_r(r);
    return h_[i] + 0.5 * (r - knots_[i].r) * (knots_[i].hprime + hprime(r));
  }

  double hprime(double r) const {
    if (r <= 1.0) return 0.0;
    if (r >= r_max()) return slope();
    const std::size_t i = segment_by_r(r);
    const auto& a = knots_[i];
    const auto& b = knots_[i + 1];
    return a.hprime + (r - a.r) * (b.hprime - a.hprime) / (b.r - a.r);
  }

  /// The radius r in [1, r_max] with h'(r) = t.
  double radius_of_slope(double t) const {
    require_length(t);
    if (t == slope()) return r_max();
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                               [](double v, const ProfileKnot& k) { return v < k.hprime; });
    const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
    const auto& a = knots_[i];
    const auto& b = knots_[i + 1];
    return a.r + (t - a.hprime) * (b.r - a.r) / (b.hprime - a.hprime);
  }

  /// A_h(t) for a chord length t in [0, T].
  double action_of_length(double t) const {
    require_length(t);
    if (t == 0.0) return 0.0;
    if (t == slope()) return offset_;
    const double r = radius_of_slope(t);
    return r * t - h(r);
  }

  /// Inverse of action_of_length on [0, B], by bisection to 1e-12.
  double length_of_action(double a) const {
    if (!(a >= 0.0 && a <= offset_)) throw std::invalid_argument("action outside [0, B]");
    if (a == 0.0) return 0.0;
    if (a == offset_) return slope();
    double lo = 0.0, hi = slope();
    while (hi - lo > kInverseTolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (action_of_length(mid) < a) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
  }

private:
  void require_length(double t) const {
    if (!(t >= 0.0 && t <= slope()))
      throw std::invalid_argument("length " + text::format_real(t) + " outside [0, T]");
  }
  std::size_t segment_by_r(double r) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), r,
                               [](double v, const ProfileKnot& k) { return v < k.r; });
    return std::min(static_cast<std::size_t>(it - knots_.begin()) - 1, knots_.size() - 2);
  }

  std::vector<ProfileKnot> knots_;
  std::vector<double> h_;
  double offset_ = 0.0;
};

/// A_h as a MonotoneMap from lengths [0, T] onto actions [0, B]; feed it to
/// reparametrize() to turn an action barcode into a length barcode.
class ActionMap {
public:
  explicit ActionMap(ConvexProfile profile) : profile_(std::move(profile)) {}

  double operator()(double t) const { return profile_.action_of_length(std::clamp(t, 0.0, profile_.slope())); }
  double inverse(double a) const { return profile_.length_of_action(a); }
  double domain_lower() const { return 0.0; }
  double domain_upper() const { return profile_.slope(); }
  double range_lower() const { return 0.0; }
  double range_upper() const { return profile_.offset(); }

private:
  ConvexProfile profile_;
};

/// Profile of s h (slope sT, same r_max).
inline ConvexProfile scaled_profile(const ConvexProfile& P, double s) {
  if (!(s >= 1.0)) throw std::invalid_argument("scaling factor must be at least 1");
  std::vector<ProfileKnot> knots(P.knots().begin(), P.knots().end());
  for (auto& k : knots) k.hprime *= s;
  return ConvexProfile(std::move(knots));
}

// ---------------------------------------------------------------------------
// Runtime checks of the reparametrization's properties

inline constexpr double kProfileCheckTolerance = 1e-9;

struct ProfileCheck {
  bool ok = true;
  std::string detail;  // counterexample, if any
  double t = 0.0, t2 = 0.0;

  explicit operator bool() const { return ok; }
};

/// t' - t <= A(t') - A(t) <= r_max (t' - t) for all grid pairs t <= t'.
inline ProfileCheck check_bilipschitz(const ConvexProfile& P, std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= P.slope())) throw std::invalid_argument("grid leaves [0, T]");
    if (i > 0 && grid[i] < grid[i - 1]) throw std::invalid_argument("grid must be sorted");
  }
  std::vector<double> a(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) a[i] = P.action_of_length(grid[i]);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double dt = grid[j] - grid[i];
      const double da = a[j] - a[i];
      if (da < dt - kProfileCheckTolerance || da > P.r_max() * dt + kProfileCheckTolerance)
        return {false,
                "increment " + text::format_real(da) + " outside [" + text::format_real(dt) + ", " +
                    text::format_real(P.r_max() * dt) + "]",
                grid[i], grid[j]};
    }
  return {};
}

/// For ascending scales s <= s': t <= A_{s'h}(t) <= A_{sh}(t) at every grid length in [0, T].
inline ProfileCheck check_scaling_monotone(const ConvexProfile& P, std::span<const double> scales,
                                           std::span<const double> grid) {
  std::vector<ConvexProfile> profiles;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (i > 0 && !(scales[i] > scales[i - 1])) throw std::invalid_argument("scales must increase strictly");
    profiles.push_back(scaled_profile(P, scales[i]));
  }
  for (double t : grid) {
    if (!(t >= 0.0 && t <= P.slope())) throw std::invalid_argument("grid leaves [0, T]");
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const double a = profiles[i].action_of_length(t);
      if (a < t - kProfileCheckTolerance)
        return {false, "A_{sh}(t) < t at s = " + text::format_real(scales[i]), t, t};
      if (i > 0 && a > profiles[i - 1].action_of_length(t) + kProfileCheckTolerance)
        return {false, "A_{sh}(t) increased between scales " + text::format_real(scales[i - 1]) + " and " +
                           text::format_real(scales[i]),
                t, t};
    }
  }
  return {};
}

struct ActionSpectrum {
  ChordSpectrum actions;     // in action units, cutoff B
  std::uint64_t dropped = 0;  // multiplicity of chords longer than T
};

/// Pushes chord lengths <= T through A_h.
inline ActionSpectrum spectrum_to_actions(const ConvexProfile& P, const ChordSpectrum& S) {
  ActionSpectrum out;
  std::vector<ChordEntry> entries;
  for (const auto& e : S.entries()) {
    if (e.length > P.slope()) {
      out.dropped += e.multiplicity;
      continue;
    }
    const double a = P.action_of_length(e.length);
    if (!entries.empty() && entries.back().length == a) entries.back().multiplicity += e.multiplicity;
    else entries.push_back({a, e.multiplicity});
  }
  out.actions = ChordSpectrum(std::move(entries), P.offset());
  return out;
}

// ---------------------------------------------------------------------------
// Text format: `profile v1`, `rmax <v>`, `knot <r> <hprime>`...

inline ConvexProfile read_profile(std::istream& in) {
  bool header = false;
  std::optional<double> rmax;
  std::size_t rmax_line = 0;
  std::vector<ProfileKnot> knots;
  text::for_each_record(in, [&](std::size_t line, const auto& tok) {
    if (!header) {
      if (tok.size() != 2 || tok[0] != "profile" || tok[1] != "v1")
        throw ParseError(line, "expected header 'profile v1'");
      header = true;
      return;
    }
    if (tok[0] == "rmax") {
      if (tok.size() != 2) throw ParseError(line, "expected: rmax <value>");
      rmax = text::parse_real(tok[1], line);
      rmax_line = line;
    } else if (tok[0] == "knot") {
      if (tok.size() != 3) throw ParseError(line, "expected: knot <r> <hprime>");
      knots.push_back({text::parse_real(tok[1], line), text::parse_real(tok[2], line)});
    } else {
      throw ParseError(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  });
  if (!header) throw ParseError(0, "missing header 'profile v1'");
  if (!rmax) throw ParseError(0, "missing 'rmax' record");
  if (knots.empty() || knots.back().r != *rmax) throw ParseError(rmax_line, "rmax must equal the last knot radius");
  try {
    return ConvexProfile(std::move(knots));
  } catch (const std::invalid_argument& e) {
    throw InvariantViolation(e.what());
  }
}

inline void write_profile(std::ostream& out, const ConvexProfile& P) {
  out << "profile v1\nrmax " << text::format_real(P.r_max()) << '\n';
  for (const auto& k : P.knots()) out << "knot " << text::format_real(k.r) << ' ' << text::format_real(k.hprime) << '\n';
}

}  // namespace wfbar
