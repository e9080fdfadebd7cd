#pragma once

// Barcodes of finitely interval-decomposable persistence modules.
//
// Bars are half-open intervals [birth, death), death possibly +inf. A module
// V = sum of interval modules has V_t spanned by the bars with birth <= t < death.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "wfbar/error.hpp"
#include "wfbar/monotone_map.hpp"
#include "wfbar/text.hpp"

namespace wfbar {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Bar {
  double birth = 0.0;
  double death = kInfinity;
  std::uint64_t multiplicity = 1;

  bool infinite() const { return std::isinf(death); }
  double length() const { return death - birth; }

  friend bool operator==(const Bar&, const Bar&) = default;
};

class Barcode {
public:
  Barcode() = default;

  /// Canonicalizes: zero-length bars vanish, equal intervals merge, order is (birth, death).
  explicit Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
    for (const Bar& b : bars_) {
      if (!std::isfinite(b.birth)) throw std::invalid_argument("bar birth must be finite");
      if (std::isnan(b.death) || b.death == -kInfinity) throw std::invalid_argument("bar death must be a real or +inf");
      if (b.death < b.birth) throw std::invalid_argument("bar death precedes its birth");
      if (b.multiplicity == 0) throw std::invalid_argument("bar multiplicity must be positive");
    }
    std::erase_if(bars_, [](const Bar& b) { return b.death == b.birth; });
    std::sort(bars_.begin(), bars_.end(), [](const Bar& a, const Bar& b) {
      return std::tie(a.birth, a.death) < std::tie(b.birth, b.death);
    });
    std::vector<Bar> merged;
    merged.reserve(bars_.size());
    for (const Bar& b : bars_) {
      if (!merged.empty() && merged.back().birth == b.birth && merged.back().death == b.death)
        merged.back().multiplicity += b.multiplicity;
      else
        merged.push_back(b);
    }
    bars_ = std::move(merged);
  }

  std::span<const Bar> bars() const { return bars_; }
  bool empty() const { return bars_.empty(); }
  std::size_t distinct() const { return bars_.size(); }

  /// Total multiplicity.
  std::uint64_t size() const {
    std::uint64_t n = 0;
    for (const Bar& b : bars_) n += b.multiplicity;
    return n;
  }
  std::uint64_t infinite_count() const {
    std::uint64_t n = 0;
    for (const Bar& b : bars_) if (b.infinite()) n += b.multiplicity;
    return n;
  }
  std::uint64_t finite_count() const { return size() - infinite_count(); }

  friend bool operator==(const Barcode&, const Barcode&) = default;

private:
  std::vector<Bar> bars_;
};

namespace detail {
inline void require_positive_eps(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
}
}  // namespace detail

inline std::uint64_t dim_at(const Barcode& B, double t) {
  std::uint64_t n = 0;
  for (const Bar& b : B.bars())
    if (b.birth <= t && t < b.death) n += b.multiplicity;
  return n;
}

/// Rank of the structure map V_s -> V_t.
inline std::uint64_t rank_between(const Barcode& B, double s, double t) {
  if (s > t) throw std::invalid_argument("rank_between requires s <= t");
  std::uint64_t n = 0;
  for (const Bar& b : B.bars())
    if (b.birth <= s && b.death > t) n += b.multiplicity;
  return n;
}

/// Barcode of tru(V, T): V_t for t < T, zero from T on.
inline Barcode truncate(const Barcode& B, double T) {
  std::vector<Bar> out;
  for (const Bar& b : B.bars())
    if (b.birth < T) out.push_back({b.birth, std::min(b.death, T), b.multiplicity});
  return Barcode(std::move(out));
}

/// Barcode of V[c], i.e. the module t -> V_{t+c}.
inline Barcode shift(const Barcode& B, double c) {
  std::vector<Bar> out;
  out.reserve(B.distinct());
  for (const Bar& b : B.bars()) out.push_back({b.birth - c, b.death - c, b.multiplicity});
  return Barcode(std::move(out));
}

/// Barcode of V^f with (V^f)_t = V_{f(t)}: each bar I becomes f^{-1}(I).
template <MonotoneMap F>
Barcode reparametrize(const Barcode& B, const F& f) {
  if (B.empty()) return B;
  const double lo = f.range_lower(), hi = f.range_upper();
  double first = kInfinity, last = -kInfinity;
  for (const Bar& b : B.bars()) {
    if (b.birth < lo || b.birth >= hi || (!b.infinite() && b.death > hi))
      throw std::invalid_argument("bar [" + text::format_real(b.birth) + ", " + text::format_real(b.death) +
                                  ") lies outside the range of the reparametrization");
    if (b.infinite() && !std::isinf(hi))
      throw std::invalid_argument("infinite bar needs a reparametrization onto an unbounded range");
    first = std::min(first, b.birth);
    last = std::max(last, b.infinite() ? b.birth : b.death);
  }
  const double a = f.inverse(first), z = f.inverse(last);
  if (!(a <= z) || !sampled_strictly_increasing(f, a, z))
    throw std::invalid_argument("reparametrization is not strictly increasing on the bar range");
  std::vector<Bar> out;
  out.reserve(B.distinct());
  for (const Bar& b : B.bars()) out.push_back({f.inverse(b.birth), f.inverse(b.death), b.multiplicity});
  return Barcode(std::move(out));
}

/// b_eps: number of bars with length >= eps (infinite bars always count).
inline std::uint64_t count_long_bars(const Barcode& B, double eps) {
  detail::require_positive_eps(eps);
  std::uint64_t n = 0;
  for (const Bar& b : B.bars())
    if (b.length() >= eps) n += b.multiplicity;
  return n;
}

/// Bars with length >= eps and birth <= t.
inline std::uint64_t count_prefix_bars(const Barcode& B, double eps, double t) {
  detail::require_positive_eps(eps);
  std::uint64_t n = 0;
  for (const Bar& b : B.bars()) {
    if (b.birth > t) break;
    if (b.length() >= eps) n += b.multiplicity;
  }
  return n;
}

/// Census of bars born in (0, t], split by length against eps and death against t.
struct BarCensus {
  std::uint64_t type_i = 0;    // long, dies after t
  std::uint64_t type_ii = 0;   // long, dies by t
  std::uint64_t type_iii = 0;  // short, dies after t
  std::uint64_t type_iv = 0;   // short, dies by t

  std::uint64_t total() const { return type_i + type_ii + type_iii + type_iv; }
  friend bool operator==(const BarCensus&, const BarCensus&) = default;
};

inline BarCensus bar_type_census(const Barcode& B, double eps, double t) {
  detail::require_positive_eps(eps);
  if (!(t > 0.0)) throw std::invalid_argument("census level t must be positive");
  BarCensus c;
  for (const Bar& b : B.bars()) {
    if (!(b.birth > 0.0 && b.birth <= t)) continue;
    const bool is_long = b.length() >= eps;
    const bool crosses = b.death > t;
    auto& slot = is_long ? (crosses ? c.type_i : c.type_ii) : (crosses ? c.type_iii : c.type_iv);
    slot += b.multiplicity;
  }
  return c;
}

/// Bars with positive birth and length < eta.
inline Barcode short_positive_bars(const Barcode& B, double eta) {
  std::vector<Bar> out;
  for (const Bar& b : B.bars())
    if (b.birth > 0.0 && b.length() < eta) out.push_back(b);
  return Barcode(std::move(out));
}

// ---------------------------------------------------------------------------
// Text format: one `bar <birth> <death|inf> <multiplicity>` per line.

inline Barcode read_barcode(std::istream& in) {
  std::vector<Bar> bars;
  text::for_each_record(in, [&](std::size_t line, const auto& tok) {
    if (tok[0] != "bar") throw ParseError(line, "unknown record '" + std::string(tok[0]) + "'");
    if (tok.size() != 4) throw ParseError(line, "expected: bar <birth> <death|inf> <multiplicity>");
    Bar b{text::parse_real(tok[1], line), text::parse_real(tok[2], line), text::parse_count(tok[3], line)};
    if (!std::isfinite(b.birth)) throw ParseError(line, "bar birth must be finite");
    if (b.death < b.birth) throw ParseError(line, "bar death precedes its birth");
    if (b.multiplicity == 0) throw ParseError(line, "bar multiplicity must be positive");
    bars.push_back(b);
  });
  return Barcode(std::move(bars));
}

inline void write_barcode(std::ostream& out, const Barcode& B) {
  for (const Bar& b : B.bars())
    out << "bar " << text::format_real(b.birth) << ' ' << text::format_real(b.death) << ' ' << b.multiplicity
        << '\n';
}

}  // namespace wfbar
