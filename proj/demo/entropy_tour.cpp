// Growth rates of bar counts for three chord spectra: exponential, flat torus, Schottky orbit.

#include <cmath>
#include <cstdio>

#include "wfbar/wfbar.hpp"

using namespace wfbar;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

void print_report(const char* name, const EntropyReport& r) {
  std::printf("%s\n  %-8s %-10s %-10s %s\n", name, "eps", "rate", "raw", "window");
  for (const auto& row : r.rows)
    std::printf("  %-8g %-10.4f %-10.4f [%g, %g]\n", row.eps, row.rate, row.raw_rate, row.window_lo, row.window_hi);
  std::printf("  headline %.4f\n\n", r.headline);
}

}  // namespace

int main() {
  const std::vector<double> eps{1.0, 0.5, 0.25, 0.1};
  const auto model = SpectrumModel::planted(UniformGap{0.05, 1.5}, 3);

  const auto exp_S = exp_spectrum(0.5, 20);
  const auto exp_levels = linspace(6, 20, 15);
  print_report("exp spectrum, h = 0.5",
               barcode_entropy(truncation_family(reduce(complex_from_spectrum(exp_S, model, 0)), exp_levels), eps));

  const auto torus_S = torus_spectrum({0.1, 0.2}, {0.6, 0.4}, 150);
  print_report("flat torus",
               barcode_entropy(truncation_family(reduce(complex_from_spectrum(torus_S, model, 0)), linspace(15, 150, 28)),
                               eps));

  // Two hyperbolic generators whose isometric circles sit at +-1 and +-3.
  const double rho = 0.9;
  const std::vector<SL2R> gens{{3 / rho, 9 / rho - rho, 1 / rho, 3 / rho}, {1 / rho, 1 / rho - rho, 1 / rho, 1 / rho}};
  const auto sch = schottky_spectrum(gens, {0, 2}, {0, 2}, 12);
  std::printf("Schottky orbit: %zu distinct distances, complete up to %.3f\n", sch.spectrum.entries().size(),
              sch.completeness_radius);
  const double R = sch.completeness_radius;
  const auto S = sch.spectrum.truncated(R);
  print_report("Schottky orbit",
               barcode_entropy(truncation_family(reduce(complex_from_spectrum(S, model, 0)), linspace(R / 3, R, 20)), eps));

  // Same exponential spectrum through two Hamiltonian profiles.
  for (double rmax : {2.0, 4.0}) {
    const auto P = ConvexProfile::linear_derivative(rmax, 1.0);
    const auto members = hamiltonian_members(P, exp_S, exp_levels, model, 0);
    char name[64];
    std::snprintf(name, sizeof name, "profile r_max = %g, scaling normalization", rmax);
    print_report(name, barcode_entropy(reduce_family(members, Normalization::scaling), eps));
  }
}
