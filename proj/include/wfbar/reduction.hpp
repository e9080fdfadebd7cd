#pragma once

// Persistence pairing of a filtered complex by column reduction.
//
// Columns are stored sparse; the column under reduction lives in a dense
// bit-packed buffer so that each column addition is a run of word XORs.
// When the longest-boundary-chain levels form a grading (every boundary
// term sits exactly one level down) columns are processed level by level
// from the top and the pivot rows found at one level are cleared before the
// level below is touched. Otherwise plain left-to-right reduction is used.
// Both orders produce the same pairing.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "wfbar/barcode.hpp"
#include "wfbar/filtered_complex.hpp"

namespace wfbar {

namespace detail {

class PackedColumn {
public:
  explicit PackedColumn(std::size_t n) : words_((n + 63) / 64, 0) {}

  void load(const std::vector<std::uint32_t>& rows) {
    for (auto r : rows) flip(r);
  }
  void add(const std::vector<std::uint32_t>& rows) {
    for (auto r : rows) flip(r);
  }

  /// Highest set row, or -1.
  std::int64_t pivot() {
    while (top_ >= 0 && words_[static_cast<std::size_t>(top_)] == 0) --top_;
    if (top_ < 0) return -1;
    const auto w = words_[static_cast<std::size_t>(top_)];
    return top_ * 64 + (63 - std::countl_zero(w));
  }

  /// Moves the contents out as ascending row indices and leaves the buffer zeroed.
  std::vector<std::uint32_t> extract() {
    std::vector<std::uint32_t> rows;
    for (std::int64_t w = 0; w <= top_; ++w) {
      auto bits = words_[static_cast<std::size_t>(w)];
      while (bits) {
        const int b = std::countr_zero(bits);
        rows.push_back(static_cast<std::uint32_t>(w * 64 + b));
        bits &= bits - 1;
      }
      words_[static_cast<std::size_t>(w)] = 0;
    }
    top_ = -1;
    return rows;
  }

private:
  void flip(std::uint32_t r) {
    words_[r / 64] ^= std::uint64_t{1} << (r % 64);
    top_ = std::max<std::int64_t>(top_, r / 64);
  }

  std::vector<std::uint64_t> words_;
  std::int64_t top_ = -1;
};

struct Pairing {
  // pivot_row[j] = row paired with column j, or -1; column indices are filtration ranks.
  std::vector<std::int64_t> pivot_row;
  std::vector<char> is_pivot_row;
};

inline Pairing reduce_columns(std::vector<std::vector<std::uint32_t>> columns) {
  const std::size_t n = columns.size();
  Pairing p{std::vector<std::int64_t>(n, -1), std::vector<char>(n, 0)};
  if (n == 0) return p;

  std::vector<std::uint32_t> level(n, 0);
  bool graded = true;
  std::uint32_t max_level = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t lo = UINT32_MAX, hi = 0;
    for (auto r : columns[j]) {
      lo = std::min(lo, level[r]);
      hi = std::max(hi, level[r]);
    }
    if (!columns[j].empty()) {
      level[j] = hi + 1;
      graded = graded && lo == hi;
    }
    max_level = std::max(max_level, level[j]);
  }

  std::vector<std::int64_t> owner(n, -1);  // row -> column whose reduced pivot it is
  std::vector<char> cleared(n, 0);
  PackedColumn work(n);

  auto reduce_one = [&](std::size_t j) {
    if (cleared[j] || columns[j].empty()) {
      columns[j].clear();
      return;
    }
    work.load(columns[j]);
    std::int64_t piv = work.pivot();
    while (piv >= 0 && owner[static_cast<std::size_t>(piv)] >= 0) {
      work.add(columns[static_cast<std::size_t>(owner[static_cast<std::size_t>(piv)])]);
      piv = work.pivot();
    }
    columns[j] = work.extract();
    if (piv >= 0) {
      owner[static_cast<std::size_t>(piv)] = static_cast<std::int64_t>(j);
      p.pivot_row[j] = piv;
      p.is_pivot_row[static_cast<std::size_t>(piv)] = 1;
      cleared[static_cast<std::size_t>(piv)] = 1;
    }
  };

  if (graded) {
    std::vector<std::vector<std::size_t>> by_level(max_level + 1);
    for (std::size_t j = 0; j < n; ++j) by_level[level[j]].push_back(j);
    for (std::uint32_t L = max_level; L >= 1; --L)
      for (std::size_t j : by_level[L]) reduce_one(j);
  } else {
    for (std::size_t j = 0; j < n; ++j) reduce_one(j);
  }
  return p;
}

}  // namespace detail

/// Barcode of the persistence module a -> H(C^{<=a}) presented by `C`.
/// Throws InvariantViolation when `C` is not a valid filtered complex.
inline Barcode reduce(const FilteredComplex& C) {
  require_valid(C);
  const auto order = C.filtration_order();
  std::vector<std::uint32_t> rank(C.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<std::uint32_t>(r);

  std::vector<std::vector<std::uint32_t>> columns(C.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    auto& col = columns[r];
    for (std::size_t t : C.boundary(order[r])) col.push_back(rank[t]);
  }

  const auto pairing = detail::reduce_columns(std::move(columns));
  std::vector<Bar> bars;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const double action = C.generator(order[j]).action;
    if (pairing.pivot_row[j] >= 0) {
      const double birth = C.generator(order[static_cast<std::size_t>(pairing.pivot_row[j])]).action;
      bars.push_back({birth, action, 1});
    } else if (!pairing.is_pivot_row[j]) {
      bars.push_back({action, kInfinity, 1});
    }
  }
  return Barcode(std::move(bars));
}

}  // namespace wfbar
