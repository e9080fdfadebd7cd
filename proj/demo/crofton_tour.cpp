// Crofton counts for a handful of curves, then the tomograph census against its calibrated bound.

#include <cstdio>

#include "wfbar/geometry.hpp"

using namespace wfbar;

int main() {
  const std::vector<std::pair<const char*, PlaneCurve>> family{
      {"circle", curves::circle()},          {"ellipse 3x0.5", curves::ellipse(3, 0.5)},
      {"segment", curves::segment(2)},       {"star", curves::star(5, 1.0, 0.35)},
      {"spiral", curves::spiral(0.1, 3)},    {"limacon", curves::limacon(1.0, 1.5)},
      {"lemniscate", curves::lemniscate(1)},
  };
  std::printf("%-14s %-10s %-10s %-8s\n", "curve", "length", "integral", "ratio");
  std::uint64_t seed = 1;
  for (const auto& [name, c] : family) {
    const auto r = crofton_lines(c, 100000, seed++);
    std::printf("%-14s %-10.4f %-10.4f %.4f +- %.4f\n", name, r.length, r.estimate, r.ratio, r.stderr_ / r.length);
  }

  const auto cal = calibrate_tomograph(4, 1.0, 1000, 5);
  std::printf("\ntomograph, d = 4, r = 1, crossing density constant %.3f\n", cal.constant);
  const std::vector<std::pair<const char*, TrigPolynomial>> gs{
      {"g = 0", {}},
      {"g = 0.3 sin 2x", {0.0, {}, {0.0, 0.3}}},
      {"g = 0.8 sin x + 0.4 cos 2x", {0.0, {0.0, 0.4}, {0.8}}},
  };
  for (const auto& [name, g] : gs) {
    const auto r = tomograph_census(g, 4, 1.0, 50000, 11);
    const double bound = cal.constant * g.derivative_graph_length();
    std::printf("%-28s mean N %.3f (max %zu), bound %.3f\n", name, r.mean_n, r.max_n, bound);
  }
}
