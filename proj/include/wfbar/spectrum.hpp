#pragma once

// Chord-length spectra of reference systems and their filtered-complex models.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wfbar/error.hpp"
#include "wfbar/filtered_complex.hpp"
#include "wfbar/text.hpp"

namespace wfbar {

struct ChordEntry {
  double length = 0.0;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const ChordEntry&, const ChordEntry&) = default;
};

/// Sorted multiset of positive chord lengths up to a cutoff.
class ChordSpectrum {
public:
  ChordSpectrum() = default;

  /// Entries must already be strictly ascending, positive and within the cutoff.
  ChordSpectrum(std::vector<ChordEntry> entries, double cutoff) : entries_(std::move(entries)), cutoff_(cutoff) {
    if (std::isnan(cutoff_) || cutoff_ < 0.0) throw std::invalid_argument("spectrum cutoff must be non-negative");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (!(e.length > 0.0) || !std::isfinite(e.length))
        throw std::invalid_argument("chord lengths must be positive and finite");
      if (e.length > cutoff_) throw std::invalid_argument("chord length exceeds the spectrum cutoff");
      if (e.multiplicity == 0) throw std::invalid_argument("chord multiplicity must be positive");
      if (i > 0 && !(entries_[i - 1].length < e.length))
        throw std::invalid_argument("chord lengths must be strictly ascending");
    }
  }

  /// Builds a spectrum from raw lengths; lengths equal after rounding to 12
  /// decimals merge into one entry. Non-positive lengths and lengths above the cutoff are dropped.
  static ChordSpectrum from_lengths(std::vector<double> lengths, double cutoff) {
    std::erase_if(lengths, [&](double l) { return !(l > 0.0) || l > cutoff; });
    for (double& l : lengths)
      if (l < 1e6) l = static_cast<double>(std::llround(l * 1e12)) / 1e12;
    std::sort(lengths.begin(), lengths.end());
    std::vector<ChordEntry> entries;
    for (double l : lengths) {
      // Rounding can push a value a hair above the cutoff.
      if (l > cutoff) break;
      if (!entries.empty() && entries.back().length == l) ++entries.back().multiplicity;
      else entries.push_back({l, 1});
    }
    return ChordSpectrum(std::move(entries), cutoff);
  }

  std::span<const ChordEntry> entries() const { return entries_; }
  double cutoff() const { return cutoff_; }
  bool empty() const { return entries_.empty(); }

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (const auto& e : entries_) n += e.multiplicity;
    return n;
  }

  /// N(t): total multiplicity of entries with length <= t.
  std::uint64_t count_up_to(double t) const {
    std::uint64_t n = 0;
    for (const auto& e : entries_) {
      if (e.length > t) break;
      n += e.multiplicity;
    }
    return n;
  }

  ChordSpectrum truncated(double t) const {
    std::vector<ChordEntry> kept;
    for (const auto& e : entries_)
      if (e.length <= t) kept.push_back(e);
    return ChordSpectrum(std::move(kept), std::min(t, cutoff_));
  }

  friend bool operator==(const ChordSpectrum&, const ChordSpectrum&) = default;

private:
  std::vector<ChordEntry> entries_;
  double cutoff_ = 0.0;
};

// ---------------------------------------------------------------------------
// Reference systems

struct Point2 {
  double x = 0.0, y = 0.0;
};

/// Geodesic chord lengths |q - p + m| (m integral, nonzero length) on the flat unit torus.
inline ChordSpectrum torus_spectrum(Point2 p, Point2 q, double t_max) {
  if (!(t_max > 0.0)) throw std::invalid_argument("torus spectrum needs t_max > 0");
  const double dx = q.x - p.x, dy = q.y - p.y;
  const auto reach = static_cast<long>(std::ceil(t_max + std::abs(dx) + std::abs(dy))) + 1;
  std::vector<double> lengths;
  for (long i = -reach; i <= reach; ++i) {
    const double x = dx + static_cast<double>(i);
    if (std::abs(x) > t_max) continue;
    for (long j = -reach; j <= reach; ++j) {
      const double y = dy + static_cast<double>(j);
      const double len = std::hypot(x, y);
      if (len > 0.0 && len <= t_max) lengths.push_back(len);
    }
  }
  return ChordSpectrum::from_lengths(std::move(lengths), t_max);
}

inline constexpr double kExpSpectrumMaxExponent = 30.0;
inline constexpr std::uint64_t kExpSpectrumMaxEntries = 20'000'000;

/// Lengths log(k)/h for k = 2, 3, ... up to t_max, so N(t) = floor(e^{ht}) - 1.
inline ChordSpectrum exp_spectrum(double h, double t_max) {
  if (!(h > 0.0)) throw std::invalid_argument("exp_spectrum needs h > 0");
  if (!(t_max > 0.0) || t_max * h > kExpSpectrumMaxExponent)
    throw std::invalid_argument("exp_spectrum size guard: need 0 < t_max * h <= 30");
  const double last = std::floor(std::exp(h * t_max));
  if (last > static_cast<double>(kExpSpectrumMaxEntries))
    throw std::invalid_argument("exp_spectrum size guard: more than 2e7 entries requested");
  std::vector<ChordEntry> entries;
  entries.reserve(static_cast<std::size_t>(last));
  for (std::uint64_t k = 2;; ++k) {
    const double t = std::log(static_cast<double>(k)) / h;
    if (t > t_max) break;
    entries.push_back({t, 1});
  }
  return ChordSpectrum(std::move(entries), t_max);
}

// ---------------------------------------------------------------------------
// Orbit distances of a free group of hyperbolic isometries of the upper half plane

struct SL2R {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const { return a * d - b * c; }
  SL2R inverse() const { return {d, -b, -c, a}; }
  std::complex<double> apply(std::complex<double> z) const { return (a * z + b) / (c * z + d); }
};

inline double hyperbolic_distance(std::complex<double> z, std::complex<double> w) {
  const double num = std::norm(z - w);
  return std::acosh(1.0 + num / (2.0 * z.imag() * w.imag()));
}

struct SchottkySpectrum {
  ChordSpectrum spectrum;
  /// Every orbit distance below this value is present in `spectrum`.
  double completeness_radius = 0.0;
  /// False when the isometric circles are not disjoint (or p, q lie inside one):
  /// then no radius can be certified and completeness_radius is 0.
  bool certified = false;
  std::uint64_t beyond_radius = 0;
  std::vector<std::uint64_t> words_per_length;
};

inline constexpr int kSchottkyMaxWordLength = 14;

namespace detail {

struct IsometricCircle {
  double center, radius;
};

inline IsometricCircle isometric_circle(const SL2R& g) { return {-g.d / g.c, 1.0 / std::abs(g.c)}; }

// Distance from z to the half-plane bounded by the geodesic over `circle`, z outside it.
inline double distance_to_geodesic(std::complex<double> z, const IsometricCircle& circle) {
  const double num = std::abs(std::norm(z - circle.center) - circle.radius * circle.radius);
  return std::asinh(num / (2.0 * circle.radius * z.imag()));
}

}  // namespace detail

/// d(p, w q) over reduced words w of length <= max_word_length in the given
/// generators and their inverses. When the isometric circles of the letters
/// are pairwise disjoint and p, q lie outside them (classical Schottky
/// position), ping-pong bounds the distance contributed by longer words from
/// below; that bound is the reported completeness radius.
inline SchottkySpectrum schottky_spectrum(std::span<const SL2R> generators, std::complex<double> p,
                                          std::complex<double> q, int max_word_length) {
  if (max_word_length < 0 || max_word_length > kSchottkyMaxWordLength)
    throw std::invalid_argument("schottky_spectrum word length bound must be in [0, 14]");
  if (!(p.imag() > 0.0) || !(q.imag() > 0.0)) throw std::invalid_argument("p and q must lie in the upper half plane");
  for (const auto& g : generators)
    if (std::abs(g.det() - 1.0) > 1e-9) throw std::invalid_argument("generator matrix does not have determinant 1");

  const std::size_t k = generators.size();
  std::vector<SL2R> letters(generators.begin(), generators.end());
  for (std::size_t i = 0; i < k; ++i) letters.push_back(generators[i].inverse());
  const std::size_t alphabet = letters.size();
  auto inverse_letter = [&](std::size_t l) { return (l + k) % alphabet; };

  SchottkySpectrum out;
  out.words_per_length.assign(static_cast<std::size_t>(max_word_length) + 1, 0);
  std::vector<double> lengths;

  // Depth-first over reduced words, extending on the left: (g w) q = g (w q).
  struct Frame {
    std::complex<double> z;
    std::size_t first;
    int len;
  };
  auto walk = [&](std::complex<double> start, auto&& visit) {
    std::vector<Frame> stack{{start, alphabet, 0}};
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      visit(f);
      if (f.len == max_word_length) continue;
      for (std::size_t l = alphabet; l-- > 0;) {
        if (f.first != alphabet && l == inverse_letter(f.first)) continue;
        stack.push_back({letters[l].apply(f.z), l, f.len + 1});
      }
    }
  };
  walk(q, [&](const Frame& f) {
    ++out.words_per_length[static_cast<std::size_t>(f.len)];
    lengths.push_back(hyperbolic_distance(p, f.z));
  });

  bool schottky_position = k > 0;
  std::vector<detail::IsometricCircle> circles;
  for (const auto& g : letters) {
    if (g.c == 0.0) {
      schottky_position = false;
      break;
    }
    circles.push_back(detail::isometric_circle(g));
  }
  if (schottky_position) {
    for (std::size_t i = 0; i < circles.size(); ++i) {
      for (std::size_t j = i + 1; j < circles.size(); ++j)
        if (std::abs(circles[i].center - circles[j].center) <= circles[i].radius + circles[j].radius)
          schottky_position = false;
      for (auto z : {p, q})
        if (std::abs(z - circles[i].center) <= circles[i].radius) schottky_position = false;
    }
  }
  if (schottky_position) {
    // A word longer than the bound is v u with |v| = bound; (v u) q lies in the
    // disc v(D) for D = interior of I(g^{-1}), g = first letter of u, g != last(v)^{-1}.
    // So d(p, v u q) >= d(v^{-1} p, D), and v^{-1} p is enumerated from p below.
    double radius = std::numeric_limits<double>::infinity();
    walk(p, [&](const Frame& f) {
      if (f.len != max_word_length) return;
      for (std::size_t g = 0; g < alphabet; ++g) {
        if (f.first != alphabet && g == f.first) continue;
        radius = std::min(radius, detail::distance_to_geodesic(f.z, circles[inverse_letter(g)]));
      }
    });
    out.completeness_radius = radius;
    out.certified = true;
  }

  double cutoff = 0.0;
  for (double l : lengths) cutoff = std::max(cutoff, l);
  out.spectrum = ChordSpectrum::from_lengths(std::move(lengths), cutoff);
  for (const auto& e : out.spectrum.entries())
    if (e.length > out.completeness_radius) out.beyond_radius += e.multiplicity;
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum -> filtered complex

struct ConstantGap {
  double gap;
};
struct UniformGap {
  double lo, hi;
};
struct ExponentialGap {
  double mean;
};
using GapDistribution = std::variant<ConstantGap, UniformGap, ExponentialGap>;

struct SpectrumModel {
  enum class Kind { trivial, planted };
  Kind kind = Kind::trivial;
  GapDistribution gaps = ConstantGap{0.1};
  std::uint64_t seed = 0;

  static SpectrumModel trivial() { return {}; }
  static SpectrumModel planted(GapDistribution gaps, std::uint64_t seed) { return {Kind::planted, gaps, seed}; }
};

namespace detail {
inline double sample_gap(const GapDistribution& dist, std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& d) -> double {
        using D = std::decay_t<decltype(d)>;
        double g = 0.0;
        if constexpr (std::is_same_v<D, ConstantGap>) g = d.gap;
        else if constexpr (std::is_same_v<D, UniformGap>) g = std::uniform_real_distribution<double>(d.lo, d.hi)(rng);
        else g = std::exponential_distribution<double>(1.0 / d.mean)(rng);
        if (!(g > 0.0)) throw std::invalid_argument("sampled gap must be positive");
        return g;
      },
      dist);
}
}  // namespace detail

/// One generator per chord (action = length) plus `zero_action_count`
/// generators at action 0. The planted model adds a partner generator per
/// chord at length + gap whose boundary is that chord, giving a finite bar.
inline FilteredComplex complex_from_spectrum(const ChordSpectrum& S, const SpectrumModel& model,
                                             long long zero_action_count) {
  if (zero_action_count < 0) throw std::invalid_argument("zero-action generator count must be non-negative");
  FilteredComplex C;
  for (long long i = 0; i < zero_action_count; ++i) C.add_generator("x" + std::to_string(i), 0.0);
  std::mt19937_64 rng(model.seed);
  std::uint64_t k = 0;
  for (const auto& e : S.entries()) {
    for (std::uint64_t m = 0; m < e.multiplicity; ++m, ++k) {
      const std::size_t chord = C.add_generator("c" + std::to_string(k), e.length);
      if (model.kind == SpectrumModel::Kind::planted) {
        const double gap = detail::sample_gap(model.gaps, rng);
        C.set_boundary(C.add_generator("p" + std::to_string(k), e.length + gap), {chord});
      }
    }
  }
  return C;
}

// ---------------------------------------------------------------------------
// Text format: `spectrum v1`, `chord <length> <multiplicity>`..., `cutoff <t_max>`.

inline ChordSpectrum read_spectrum(std::istream& in) {
  bool header = false, have_cutoff = false;
  double cutoff = 0.0;
  std::vector<ChordEntry> entries;
  text::for_each_record(in, [&](std::size_t line, const auto& tok) {
    if (!header) {
      if (tok.size() != 2 || tok[0] != "spectrum" || tok[1] != "v1")
        throw ParseError(line, "expected header 'spectrum v1'");
      header = true;
      return;
    }
    if (have_cutoff) throw ParseError(line, "records after the trailing cutoff line");
    if (tok[0] == "chord") {
      if (tok.size() != 3) throw ParseError(line, "expected: chord <length> <multiplicity>");
      const ChordEntry e{text::parse_real(tok[1], line), text::parse_count(tok[2], line)};
      if (!(e.length > 0.0) || !std::isfinite(e.length)) throw ParseError(line, "chord length must be positive");
      if (e.multiplicity == 0) throw ParseError(line, "chord multiplicity must be positive");
      if (!entries.empty() && !(entries.back().length < e.length))
        throw ParseError(line, "chords must be strictly ascending");
      entries.push_back(e);
    } else if (tok[0] == "cutoff") {
      if (tok.size() != 2) throw ParseError(line, "expected: cutoff <t_max>");
      cutoff = text::parse_real(tok[1], line);
      if (!entries.empty() && entries.back().length > cutoff)
        throw ParseError(line, "cutoff below the largest chord");
      have_cutoff = true;
    } else {
      throw ParseError(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  });
  if (!header) throw ParseError(0, "missing header 'spectrum v1'");
  if (!have_cutoff) throw ParseError(0, "missing trailing 'cutoff' line");
  return ChordSpectrum(std::move(entries), cutoff);
}

inline void write_spectrum(std::ostream& out, const ChordSpectrum& S) {
  out << "spectrum v1\n";
  for (const auto& e : S.entries()) out << "chord " << text::format_real(e.length) << ' ' << e.multiplicity << '\n';
  out << "cutoff " << text::format_real(S.cutoff()) << '\n';
}

}  // namespace wfbar
