#pragma once

// Brute-force barcode of a small filtered complex.
//
// Computes ranks r(i, j) of H(C^{<=a_i}) -> H(C^{<=a_j}) for all pairs of
// distinct action values by exact elimination over the two-element field,
// then recovers bar multiplicities by inclusion-exclusion. Shares no code
// with the column reduction in reduction.hpp.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wfbar/barcode.hpp"
#include "wfbar/filtered_complex.hpp"

namespace wfbar {

inline constexpr std::size_t kOracleMaxGenerators = 16;

namespace detail {

using Mask = std::uint32_t;

// XOR basis kept in echelon form keyed by highest bit.
class Gf2Span {
public:
  bool insert(Mask v) {
    for (int b = 31; b >= 0 && v; --b) {
      if (!(v >> b & 1u)) continue;
      if (!basis_[b]) {
        basis_[b] = v;
        ++dim_;
        return true;
      }
      v ^= basis_[b];
    }
    return false;
  }
  int dim() const { return dim_; }

private:
  Mask basis_[32] = {};
  int dim_ = 0;
};

}  // namespace detail

inline Barcode oracle_barcode(const FilteredComplex& C) {
  using detail::Mask;
  require_valid(C);
  const std::size_t n = C.size();
  if (n > kOracleMaxGenerators) throw std::invalid_argument("oracle_barcode is limited to 16 generators");

  std::vector<Mask> d(n, 0);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t t : C.boundary(g)) d[g] ^= Mask{1} << t;

  std::vector<double> levels;
  for (const auto& g : C.generators()) levels.push_back(g.action);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::size_t k = levels.size();

  auto sublevel = [&](std::size_t i) {
    std::vector<std::size_t> gens;
    for (std::size_t g = 0; g < n; ++g)
      if (C.generator(g).action <= levels[i]) gens.push_back(g);
    return gens;
  };

  // Cycle basis of each sublevel complex: eliminate (boundary | chain) pairs.
  std::vector<std::vector<Mask>> cycles(k);
  std::vector<std::vector<Mask>> boundaries(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::pair<Mask, Mask>> rows;
    for (std::size_t g : sublevel(i)) {
      rows.push_back({d[g], Mask{1} << g});
      if (d[g]) boundaries[i].push_back(d[g]);
    }
    std::size_t r = 0;
    for (int b = 31; b >= 0; --b) {
      std::size_t p = r;
      while (p < rows.size() && !(rows[p].first >> b & 1u)) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[r], rows[p]);
      for (std::size_t q = 0; q < rows.size(); ++q)
        if (q != r && (rows[q].first >> b & 1u)) {
          rows[q].first ^= rows[r].first;
          rows[q].second ^= rows[r].second;
        }
      ++r;
    }
    for (std::size_t q = r; q < rows.size(); ++q) cycles[i].push_back(rows[q].second);
  }

  // rank(i, j) = dim(Z_i + B_j) - dim B_j, with Z_i inside Z_j.
  std::vector<std::vector<long>> rank(k, std::vector<long>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    detail::Gf2Span bj;
    for (Mask b : boundaries[j]) bj.insert(b);
    for (std::size_t i = 0; i <= j; ++i) {
      detail::Gf2Span sum = bj;
      for (Mask z : cycles[i]) sum.insert(z);
      rank[i][j] = sum.dim() - bj.dim();
    }
  }
  auto r = [&](std::size_t i1, std::size_t j1) -> long {  // 1-based, i1 = 0 means the zero space
    return i1 == 0 ? 0 : rank[i1 - 1][j1 - 1];
  };

  std::vector<Bar> bars;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      const long mu = r(i, j - 1) - r(i, j) - r(i - 1, j - 1) + r(i - 1, j);
      if (mu < 0) throw std::logic_error("oracle_barcode: negative multiplicity");
      if (mu > 0) bars.push_back({levels[i - 1], levels[j - 1], static_cast<std::uint64_t>(mu)});
    }
    const long mu_inf = r(i, k) - r(i - 1, k);
    if (mu_inf < 0) throw std::logic_error("oracle_barcode: negative multiplicity");
    if (mu_inf > 0) bars.push_back({levels[i - 1], kInfinity, static_cast<std::uint64_t>(mu_inf)});
  }
  return Barcode(std::move(bars));
}

}  // namespace wfbar
