#pragma once

// Strictly increasing real maps used to reparametrize persistence modules.
//
// Two flavours: PiecewiseLinearMap (exact inversion segment by segment) and
// BracketedMap (any callable on a bracket, inverted by bisection).

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wfbar {

inline constexpr double kInverseTolerance = 1e-12;

template <typename F>
concept MonotoneMap = requires(const F& f, double t) {
  { f(t) } -> std::convertible_to<double>;
  { f.inverse(t) } -> std::convertible_to<double>;
  { f.domain_lower() } -> std::convertible_to<double>;
  { f.domain_upper() } -> std::convertible_to<double>;
  { f.range_lower() } -> std::convertible_to<double>;
  { f.range_upper() } -> std::convertible_to<double>;
};

class PiecewiseLinearMap {
public:
  /// Knots must be strictly increasing in both coordinates. With
  /// `extend` the first and last segments continue linearly to infinity.
  PiecewiseLinearMap(std::vector<std::pair<double, double>> knots, bool extend = false)
      : knots_(std::move(knots)), extend_(extend) {
    if (knots_.size() < 2) throw std::invalid_argument("piecewise-linear map needs at least two knots");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
      const auto [x, y] = knots_[i];
      if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("piecewise-linear map knots must be finite");
      if (i > 0 && (x <= knots_[i - 1].first || y <= knots_[i - 1].second))
        throw std::invalid_argument("piecewise-linear map is not strictly increasing");
    }
  }

  static PiecewiseLinearMap identity() { return PiecewiseLinearMap({{0.0, 0.0}, {1.0, 1.0}}, true); }

  static PiecewiseLinearMap linear(double slope, double offset = 0.0) {
    if (!(slope > 0.0)) throw std::invalid_argument("linear map needs a positive slope");
    return PiecewiseLinearMap({{0.0, offset}, {1.0, offset + slope}}, true);
  }

  double operator()(double t) const {
    if (std::isinf(t)) return t;
    const std::size_t i = segment_by_x(t);
    const auto [x0, y0] = knots_[i];
    const auto [x1, y1] = knots_[i + 1];
    return y0 + (t - x0) * ((y1 - y0) / (x1 - x0));
  }

  double inverse(double y) const {
    if (std::isinf(y)) return y;
    const std::size_t i = segment_by_y(y);
    const auto [x0, y0] = knots_[i];
    const auto [x1, y1] = knots_[i + 1];
    return x0 + (y - y0) * ((x1 - x0) / (y1 - y0));
  }

  double domain_lower() const { return extend_ ? -kInf : knots_.front().first; }
  double domain_upper() const { return extend_ ? kInf : knots_.back().first; }
  double range_lower() const { return extend_ ? -kInf : knots_.front().second; }
  double range_upper() const { return extend_ ? kInf : knots_.back().second; }

  const std::vector<std::pair<double, double>>& knots() const { return knots_; }
  bool extended() const { return extend_; }

private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  std::size_t segment_by_x(double t) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                               [](double v, const auto& k) { return v < k.first; });
    return clamp_segment(it);
  }
  std::size_t segment_by_y(double y) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), y,
                               [](double v, const auto& k) { return v < k.second; });
    return clamp_segment(it);
  }
  std::size_t clamp_segment(std::vector<std::pair<double, double>>::const_iterator it) const {
    const auto idx = static_cast<std::ptrdiff_t>(it - knots_.begin()) - 1;
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(knots_.size()) - 2));
  }

  std::vector<std::pair<double, double>> knots_;
  bool extend_;
};

/// A callable assumed strictly increasing on [lo, hi]; infinite ends mean the
/// map is onto the corresponding unbounded range.
class BracketedMap {
public:
  BracketedMap(std::function<double(double)> f, double lo, double hi)
      : f_(std::move(f)), lo_(lo), hi_(hi) {
    if (!(lo < hi) || std::isnan(lo) || std::isnan(hi))
      throw std::invalid_argument("bracketed map needs lo < hi");
  }

  double operator()(double t) const { return std::isinf(t) ? t : f_(t); }

  double inverse(double y) const {
    if (std::isinf(y)) return y;
    double a = lo_, b = hi_;
    double step = 1.0;
    if (std::isinf(a)) {
      a = std::isinf(b) ? 0.0 : b - 1.0;
      while (f_(a) > y) { a -= step; step *= 2.0; }
    }
    step = 1.0;
    if (std::isinf(b)) {
      b = a + 1.0;
      while (f_(b) < y) { b += step; step *= 2.0; }
    }
    while (b - a > kInverseTolerance) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (f_(mid) < y) a = mid; else b = mid;
    }
    return 0.5 * (a + b);
  }

  double domain_lower() const { return lo_; }
  double domain_upper() const { return hi_; }
  double range_lower() const { return std::isinf(lo_) ? lo_ : f_(lo_); }
  double range_upper() const { return std::isinf(hi_) ? hi_ : f_(hi_); }

private:
  std::function<double(double)> f_;
  double lo_, hi_;
};

/// Sampled strict-monotonicity test of `f` on [a, b] with `samples` points.
template <MonotoneMap F>
bool sampled_strictly_increasing(const F& f, double a, double b, std::size_t samples = 1025) {
  if (!(a < b)) return true;
  double prev = f(a);
  for (std::size_t i = 1; i < samples; ++i) {
    const double t = a + (b - a) * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double v = f(t);
    if (!(v > prev)) return false;
    prev = v;
  }
  return true;
}

}  // namespace wfbar
