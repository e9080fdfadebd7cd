#pragma once

// Numerical checks of the two integral-geometry inputs: the Crofton bound for
// plane curves and the intersection census of a finite tomograph on the
// circle, plus the generator/bar counting bound for filtered complexes.
//
// Monte Carlo runs are split into fixed-size chunks, each seeded from
// (seed, chunk index); chunk results are summed in index order, so output
// depends only on the seed and never on the thread count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfbar/barcode.hpp"
#include "wfbar/filtered_complex.hpp"
#include "wfbar/parallel.hpp"
#include "wfbar/reduction.hpp"
#include "wfbar/spectrum.hpp"
#include "wfbar/text.hpp"

namespace wfbar {

inline constexpr std::size_t kRootPanels = 2048;
inline constexpr double kRootTolerance = 1e-10;
inline constexpr double kDegeneracyThreshold = 1e-8;
inline constexpr std::size_t kMonteCarloChunk = 4096;
inline constexpr std::size_t kMinCroftonSamples = 10'000;

namespace detail {

inline std::mt19937_64 chunk_rng(std::uint64_t seed, std::size_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline Point2 minus(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Plane curves

class PlaneCurve {
public:
  /// Polyline through `points` (closed adds the last-to-first segment).
  /// Rejects non-finite points, repeated consecutive points and segments that
  /// overlap along a common line.
  static PlaneCurve polyline(std::vector<Point2> points, bool closed) {
    if (points.size() < 2) throw std::invalid_argument("curve table needs at least two points");
    for (const auto& p : points)
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("curve table is unbounded");
    PlaneCurve c;
    c.points_ = std::move(points);
    c.closed_ = closed;
    c.check_segments();
    return c;
  }

  /// Parametric curve u -> f(u) on [0, 1]; closed curves have f(0) = f(1).
  static PlaneCurve parametric(std::function<Point2(double)> f, bool closed) {
    PlaneCurve c;
    c.param_ = std::move(f);
    c.closed_ = closed;
    for (std::size_t i = 0; i <= 64; ++i) {
      const Point2 p = c.param_(static_cast<double>(i) / 64.0);
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("curve is unbounded");
    }
    return c;
  }

  bool closed() const { return closed_; }

  /// Vertices of the polyline used for intersection counting; parametric
  /// curves are sampled on `panels` equal parameter steps.
  std::vector<Point2> vertices(std::size_t panels = kRootPanels) const {
    std::vector<Point2> v;
    if (param_) {
      for (std::size_t i = 0; i <= panels; ++i) v.push_back(param_(static_cast<double>(i) / static_cast<double>(panels)));
    } else {
      v = points_;
      if (closed_) v.push_back(points_.front());
    }
    return v;
  }

  /// Exact for polylines; adaptive chord refinement with Richardson
  /// extrapolation for parametric curves.
  double length() const {
    if (!param_) {
      const auto v = vertices();
      double L = 0.0;
      for (std::size_t i = 1; i < v.size(); ++i) L += detail::dist(v[i - 1], v[i]);
      return L;
    }
    double L = 0.0;
    constexpr int kInitial = 256;
    for (int i = 0; i < kInitial; ++i) {
      const double a = static_cast<double>(i) / kInitial, b = static_cast<double>(i + 1) / kInitial;
      L += adaptive_length(a, b, param_(a), param_(b), 0);
    }
    return L;
  }

  PlaneCurve scaled(double lambda) const {
    PlaneCurve c = *this;
    if (param_) {
      auto f = param_;
      c.param_ = [f, lambda](double u) {
        const Point2 p = f(u);
        return Point2{lambda * p.x, lambda * p.y};
      };
    } else {
      for (auto& p : c.points_) p = {lambda * p.x, lambda * p.y};
    }
    return c;
  }

private:
  double adaptive_length(double a, double b, Point2 pa, Point2 pb, int depth) const {
    const double m = 0.5 * (a + b);
    const Point2 pm = param_(m);
    const double coarse = detail::dist(pa, pb);
    const double fine = detail::dist(pa, pm) + detail::dist(pm, pb);
    if (depth >= 30 || std::abs(fine - coarse) < 1e-13 * std::max(1.0, fine)) return fine + (fine - coarse) / 3.0;
    return adaptive_length(a, m, pa, pm, depth + 1) + adaptive_length(m, b, pm, pb, depth + 1);
  }

  void check_segments() const {
    const auto v = vertices();
    const std::size_t m = v.size() - 1;
    for (std::size_t i = 0; i < m; ++i)
      if (v[i].x == v[i + 1].x && v[i].y == v[i + 1].y)
        throw std::invalid_argument("curve table repeats a point (zero-length segment)");
    for (std::size_t i = 0; i < m; ++i) {
      const Point2 a = v[i], b = v[i + 1];
      const Point2 dir = detail::minus(b, a);
      const double len2 = dir.x * dir.x + dir.y * dir.y;
      for (std::size_t j = i + 1; j < m; ++j) {
        const Point2 c = v[j], d = v[j + 1];
        const double scale = 1e-12 * len2;
        if (std::abs(detail::cross(dir, detail::minus(c, a))) > scale ||
            std::abs(detail::cross(dir, detail::minus(d, a))) > scale)
          continue;
        // Collinear: overlap of the projections onto the segment direction.
        auto proj = [&](Point2 p) { return (detail::minus(p, a).x * dir.x + detail::minus(p, a).y * dir.y) / len2; };
        const double lo = std::min(proj(c), proj(d)), hi = std::max(proj(c), proj(d));
        if (std::min(1.0, hi) - std::max(0.0, lo) > 1e-12)
          throw std::invalid_argument("curve table overlaps itself along segments " + std::to_string(i) + " and " +
                                      std::to_string(j));
      }
    }
  }

  std::vector<Point2> points_;
  std::function<Point2(double)> param_;
  bool closed_ = false;
};

namespace curves {

inline PlaneCurve circle(double radius = 1.0, Point2 center = {}) {
  return PlaneCurve::parametric(
      [=](double u) {
        const double a = 2.0 * std::numbers::pi * u;
        return Point2{center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
      },
      true);
}

inline PlaneCurve ellipse(double a, double b) {
  return PlaneCurve::parametric(
      [=](double u) {
        const double t = 2.0 * std::numbers::pi * u;
        return Point2{a * std::cos(t), b * std::sin(t)};
      },
      true);
}

inline PlaneCurve segment(double length) { return PlaneCurve::polyline({{0.0, 0.0}, {length, 0.0}}, false); }

inline PlaneCurve regular_polygon(std::size_t sides, double radius) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < sides; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(sides);
    pts.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return PlaneCurve::polyline(std::move(pts), true);
}

/// Non-convex star polygon alternating between two radii.
inline PlaneCurve star(std::size_t points, double outer, double inner) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < 2 * points; ++i) {
    const double a = std::numbers::pi * static_cast<double>(i) / static_cast<double>(points);
    const double r = i % 2 == 0 ? outer : inner;
    pts.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return PlaneCurve::polyline(std::move(pts), true);
}

/// Archimedean spiral r = a * theta over `turns` turns.
inline PlaneCurve spiral(double a, double turns) {
  return PlaneCurve::parametric(
      [=](double u) {
        const double t = 2.0 * std::numbers::pi * turns * u;
        return Point2{a * t * std::cos(t), a * t * std::sin(t)};
      },
      false);
}

/// Graph of amplitude * sin(frequency * x) over [0, width].
inline PlaneCurve sine_graph(double width, double amplitude, double frequency) {
  return PlaneCurve::parametric(
      [=](double u) {
        const double x = width * u;
        return Point2{x, amplitude * std::sin(frequency * x)};
      },
      false);
}

/// Limacon r = b + a cos(theta); a > b gives an inner loop.
inline PlaneCurve limacon(double a, double b) {
  return PlaneCurve::parametric(
      [=](double u) {
        const double t = 2.0 * std::numbers::pi * u;
        const double r = b + a * std::cos(t);
        return Point2{r * std::cos(t), r * std::sin(t)};
      },
      true);
}

/// Lemniscate of Bernoulli (figure eight).
inline PlaneCurve lemniscate(double a) {
  return PlaneCurve::parametric(
      [=](double u) {
        const double t = 2.0 * std::numbers::pi * u;
        const double s = std::sin(t), c = std::cos(t);
        const double den = 1.0 + s * s;
        return Point2{a * c / den, a * s * c / den};
      },
      true);
}

}  // namespace curves

// ---------------------------------------------------------------------------
// Crofton

struct CroftonResult {
  double estimate = 0.0;  // Monte Carlo value of the integral of N(p, theta) dp dtheta
  double stderr_ = 0.0;
  double length = 0.0;
  double ratio = 0.0;  // estimate / length; 2 for the kinematic measure used here
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Lines {x : <x, (cos theta, sin theta)> = p} with theta uniform on [0, pi)
/// and p uniform on [-R, R] about the bounding-disc centre; N counts the
/// polyline segments whose endpoints fall on opposite sides of the line.
inline CroftonResult crofton_lines(const PlaneCurve& curve, std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < kMinCroftonSamples) throw std::invalid_argument("crofton_lines needs at least 1e4 samples");
  const auto v = curve.vertices();
  double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& p : v) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const Point2 center{0.5 * (xmin + xmax), 0.5 * (ymin + ymax)};
  double R = 0.0;
  for (const auto& p : v) R = std::max(R, detail::dist(p, center));
  R = R * 1.01 + 1e-12;
  std::vector<Point2> local;
  for (const auto& p : v) local.push_back(detail::minus(p, center));

  const std::size_t chunks = (n_samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<double> sum(chunks, 0.0), sum_sq(chunks, 0.0);
  parallel_for(chunks, [&](std::size_t c) {
    auto rng = detail::chunk_rng(seed, c);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t begin = c * kMonteCarloChunk, end = std::min(n_samples, begin + kMonteCarloChunk);
    std::vector<char> side(local.size());
    for (std::size_t s = begin; s < end; ++s) {
      const double theta = std::numbers::pi * unit(rng);
      const double p = R * (2.0 * unit(rng) - 1.0);
      const double cx = std::cos(theta), sy = std::sin(theta);
      for (std::size_t k = 0; k < local.size(); ++k) side[k] = local[k].x * cx + local[k].y * sy > p;
      double n = 0.0;
      for (std::size_t k = 1; k < local.size(); ++k) n += side[k] != side[k - 1];
      sum[c] += n;
      sum_sq[c] += n * n;
    }
  });
  double total = 0.0, total_sq = 0.0;
  for (std::size_t c = 0; c < chunks; ++c) {
    total += sum[c];
    total_sq += sum_sq[c];
  }
  const double ns = static_cast<double>(n_samples);
  const double measure = std::numbers::pi * 2.0 * R;
  const double mean = total / ns;
  const double var = std::max(0.0, total_sq / ns - mean * mean);
  CroftonResult r;
  r.estimate = measure * mean;
  r.stderr_ = measure * std::sqrt(var / ns);
  r.length = curve.length();
  r.ratio = r.estimate / r.length;
  r.n_samples = n_samples;
  r.seed = seed;
  return r;
}

// ---------------------------------------------------------------------------
// Tomograph on the circle
//
// The family f_s = sum_i s_i eta_i with eta = (cos x, sin x, cos 2x, sin 2x, ...)
// perturbs the zero section of T*S^1; graph(d f_s) meets graph(dg) at the
// critical points of f_s - g.

/// g(x) = a0 + sum_k a_k cos(kx) + b_k sin(kx), k = 1..
struct TrigPolynomial {
  double a0 = 0.0;
  std::vector<double> a, b;

  double derivative(double x) const {
    double v = 0.0;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
      const double m = static_cast<double>(k + 1);
      if (k < a.size()) v -= m * a[k] * std::sin(m * x);
      if (k < b.size()) v += m * b[k] * std::cos(m * x);
    }
    return v;
  }
  double second_derivative(double x) const {
    double v = 0.0;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
      const double m = static_cast<double>(k + 1);
      if (k < a.size()) v -= m * m * a[k] * std::cos(m * x);
      if (k < b.size()) v -= m * m * b[k] * std::sin(m * x);
    }
    return v;
  }
  /// Length of the graph of g' over one period (composite Simpson, 4096 panels).
  double derivative_graph_length() const {
    constexpr std::size_t n = 4096;
    const double h = 2.0 * std::numbers::pi / n;
    auto speed = [&](double x) { return std::sqrt(1.0 + std::pow(second_derivative(x), 2)); };
    double s = speed(0.0) + speed(2.0 * std::numbers::pi);
    for (std::size_t i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * speed(h * static_cast<double>(i));
    return s * h / 3.0;
  }
};

namespace detail {

// eta_i'(x) and eta_i''(x) for the trigonometric basis.
inline double basis_d1(std::size_t i, double x) {
  const double m = static_cast<double>(i / 2 + 1);
  return i % 2 == 0 ? -m * std::sin(m * x) : m * std::cos(m * x);
}
inline double basis_d2(std::size_t i, double x) {
  const double m = static_cast<double>(i / 2 + 1);
  return i % 2 == 0 ? -m * m * std::cos(m * x) : -m * m * std::sin(m * x);
}

inline void sample_ball(std::mt19937_64& rng, double radius, std::vector<double>& s) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& v : s) {
      v = gauss(rng);
      norm += v * v;
    }
  } while (norm == 0.0);
  const double scale = radius * std::pow(unit(rng), 1.0 / static_cast<double>(s.size())) / std::sqrt(norm);
  for (double& v : s) v *= scale;
}

}  // namespace detail

struct TomographResult {
  double mean_n = 0.0;
  std::size_t max_n = 0;
  double degenerate_fraction = 0.0;
  double stderr_ = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Derivatives of the first d basis functions must span the cotangent line at every point.
inline void require_tomograph_span(std::size_t d) {
  if (d == 0) throw std::invalid_argument("tomograph basis is empty");
  for (std::size_t j = 0; j < kRootPanels; ++j) {
    const double x = 2.0 * std::numbers::pi * static_cast<double>(j) / kRootPanels;
    double best = 0.0;
    for (std::size_t i = 0; i < d; ++i) best = std::max(best, std::abs(detail::basis_d1(i, x)));
    if (best < 1e-12)
      throw std::invalid_argument("tomograph basis of size " + std::to_string(d) +
                                  " does not span the cotangent directions (all derivatives vanish at x = " +
                                  text::format_real(x) + ")");
  }
}

/// Zeros of (f_s - g)' on the circle for s uniform in the radius-r ball of R^d.
inline TomographResult tomograph_census(const TrigPolynomial& g, std::size_t d, double r, std::size_t n_samples,
                                        std::uint64_t seed) {
  require_tomograph_span(d);
  if (!(r > 0.0)) throw std::invalid_argument("tomograph radius must be positive");
  if (n_samples == 0) throw std::invalid_argument("tomograph needs samples");

  const std::size_t P = kRootPanels;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(P);
  std::vector<double> basis(d * P), gprime(P);
  for (std::size_t j = 0; j < P; ++j) {
    const double x = h * static_cast<double>(j);
    for (std::size_t i = 0; i < d; ++i) basis[i * P + j] = detail::basis_d1(i, x);
    gprime[j] = g.derivative(x);
  }

  struct Acc {
    double sum = 0.0, sum_sq = 0.0;
    std::size_t max_n = 0, degenerate = 0;
  };
  const std::size_t chunks = (n_samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<Acc> acc(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    auto rng = detail::chunk_rng(seed, c);
    std::vector<double> s(d), F(P);
    const std::size_t begin = c * kMonteCarloChunk, end = std::min(n_samples, begin + kMonteCarloChunk);
    auto F_at = [&](double x) {
      double v = -g.derivative(x);
      for (std::size_t i = 0; i < d; ++i) v += s[i] * detail::basis_d1(i, x);
      return v;
    };
    auto dF_at = [&](double x) {
      double v = -g.second_derivative(x);
      for (std::size_t i = 0; i < d; ++i) v += s[i] * detail::basis_d2(i, x);
      return v;
    };
    for (std::size_t k = begin; k < end; ++k) {
      detail::sample_ball(rng, r, s);
      for (std::size_t j = 0; j < P; ++j) {
        double v = -gprime[j];
        for (std::size_t i = 0; i < d; ++i) v += s[i] * basis[i * P + j];
        F[j] = v;
      }
      std::size_t n = 0;
      bool degenerate = false;
      for (std::size_t j = 0; j < P; ++j) {
        const double fa = F[j], fb = F[(j + 1) % P];
        if ((fa > 0.0) == (fb > 0.0)) continue;
        double lo = h * static_cast<double>(j), hi = lo + h;
        double flo = fa;
        while (hi - lo > kRootTolerance) {
          const double mid = 0.5 * (lo + hi);
          const double fm = F_at(mid);
          if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        if (std::abs(dF_at(0.5 * (lo + hi))) < kDegeneracyThreshold) degenerate = true;
        else ++n;
      }
      auto& a = acc[c];
      a.sum += static_cast<double>(n);
      a.sum_sq += static_cast<double>(n * n);
      a.max_n = std::max(a.max_n, n);
      a.degenerate += degenerate;
    }
  });
  Acc total;
  for (const auto& a : acc) {
    total.sum += a.sum;
    total.sum_sq += a.sum_sq;
    total.max_n = std::max(total.max_n, a.max_n);
    total.degenerate += a.degenerate;
  }
  const double ns = static_cast<double>(n_samples);
  TomographResult res;
  res.mean_n = total.sum / ns;
  res.max_n = total.max_n;
  res.degenerate_fraction = static_cast<double>(total.degenerate) / ns;
  res.stderr_ = std::sqrt(std::max(0.0, total.sum_sq / ns - res.mean_n * res.mean_n) / ns);
  res.n_samples = n_samples;
  res.seed = seed;
  return res;
}

struct TomographCalibration {
  double constant = 0.0;  // sup over probes of expected crossings per unit probe length
  double probe_length = 0.0;
  std::size_t probes = 0;
};

/// Crofton constant of the tomograph family: the largest expected number of
/// crossings per unit length of a short probe segment with graph(d f_s),
/// maximized over probe positions and directions in the band the family
/// sweeps. Integrating that density along any curve bounds its mean
/// intersection count by constant * length.
inline TomographCalibration calibrate_tomograph(std::size_t d, double r, std::size_t samples_per_probe,
                                                std::uint64_t seed, double probe_length = 0.05) {
  require_tomograph_span(d);
  double band = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double m = static_cast<double>(i / 2 + 1);
    band += m * m;
  }
  band = r * std::sqrt(band);
  constexpr std::size_t kX = 8, kY = 9, kDir = 8, kSub = 16;
  const std::size_t probes = kX * kY * kDir;
  std::vector<double> density(probes, 0.0);
  parallel_for(probes, [&](std::size_t idx) {
    const std::size_t ix = idx / (kY * kDir), iy = idx / kDir % kY, id = idx % kDir;
    const double x0 = 2.0 * std::numbers::pi * static_cast<double>(ix) / kX;
    const double y0 = -band + 2.0 * band * static_cast<double>(iy) / (kY - 1);
    const double ang = std::numbers::pi * static_cast<double>(id) / kDir;
    const double ux = std::cos(ang), uy = std::sin(ang);
    auto rng = detail::chunk_rng(seed, idx);
    std::vector<double> s(d);
    std::size_t hits = 0;
    for (std::size_t k = 0; k < samples_per_probe; ++k) {
      detail::sample_ball(rng, r, s);
      bool prev = false;
      for (std::size_t q = 0; q <= kSub; ++q) {
        const double tau = probe_length * static_cast<double>(q) / kSub;
        const double x = x0 + tau * ux, y = y0 + tau * uy;
        double v = -y;
        for (std::size_t i = 0; i < d; ++i) v += s[i] * detail::basis_d1(i, x);
        const bool side = v > 0.0;
        if (q > 0 && side != prev) ++hits;
        prev = side;
      }
    }
    density[idx] = static_cast<double>(hits) / static_cast<double>(samples_per_probe) / probe_length;
  });
  return {*std::max_element(density.begin(), density.end()), probe_length, probes};
}

// ---------------------------------------------------------------------------
// Generators versus bars

struct IntersectionBound {
  bool ok = true;
  std::uint64_t generators = 0, bars = 0, long_bars = 0, finite_bars = 0, infinite_bars = 0;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// #generators >= #bars >= b_eps, and #generators = 2 #finite bars + #infinite bars.
inline IntersectionBound intersection_bound_check(const FilteredComplex& C, double eps) {
  const Barcode B = reduce(C);
  IntersectionBound r;
  r.generators = C.size();
  r.bars = B.size();
  r.long_bars = count_long_bars(B, eps);
  r.finite_bars = B.finite_count();
  r.infinite_bars = B.infinite_count();
  if (!(r.generators >= r.bars && r.bars >= r.long_bars)) {
    r.ok = false;
    r.message = "generator count does not bound the bar counts";
  } else if (r.generators != 2 * r.finite_bars + r.infinite_bars) {
    r.ok = false;
    r.message = "generators != 2 * finite bars + infinite bars";
  }
  return r;
}

// ---------------------------------------------------------------------------
// TSV output

inline void write_crofton_tsv(std::ostream& out, const CroftonResult& r, bool header = true) {
  if (header) out << "estimate\tstderr\tlength\tratio\tn_samples\tseed\n";
  out << text::format_real(r.estimate) << '\t' << text::format_real(r.stderr_) << '\t' << text::format_real(r.length)
      << '\t' << text::format_real(r.ratio) << '\t' << r.n_samples << '\t' << r.seed << '\n';
}

inline void write_tomograph_tsv(std::ostream& out, const TomographResult& r, bool header = true) {
  if (header) out << "mean_n\tmax_n\tdegenerate_fraction\tstderr\tn_samples\tseed\n";
  out << text::format_real(r.mean_n) << '\t' << r.max_n << '\t' << text::format_real(r.degenerate_fraction) << '\t'
      << text::format_real(r.stderr_) << '\t' << r.n_samples << '\t' << r.seed << '\n';
}

}  // namespace wfbar
