#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "wfbar/barcode.hpp"

namespace wfbar {

namespace detail {

struct Interval {
  double birth, death;
};

inline double match_cost(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}
inline double delete_cost(const Interval& a) { return (a.death - a.birth) / 2.0; }

// Hopcroft-Karp on an explicit bipartite graph with equal sides.
class BipartiteMatcher {
public:
  explicit BipartiteMatcher(std::size_t n) : adj_(n), match_l_(n, kNone), match_r_(n, kNone), dist_(n) {}

  void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

  std::size_t max_matching() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t l = 0; l < adj_.size(); ++l)
        if (match_l_[l] == kNone && dfs(l)) ++size;
    return size;
  }

private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      dist_[l] = match_l_[l] == kNone ? 0 : kNone;
      if (dist_[l] == 0) q.push(l);
    }
    while (!q.empty()) {
      const std::size_t l = q.front();
      q.pop();
      for (std::size_t r : adj_[l]) {
        const std::size_t next = match_r_[r];
        if (next == kNone) found = true;
        else if (dist_[next] == kNone) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t l) {
    for (std::size_t r : adj_[l]) {
      const std::size_t next = match_r_[r];
      if (next == kNone || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_l_[l] = r;
        match_r_[r] = l;
        return true;
      }
    }
    dist_[l] = kNone;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_l_, match_r_, dist_;
};

// Perfect matching of the diagonal-augmented graph at threshold delta.
inline bool matchable(const std::vector<Interval>& x, const std::vector<Interval>& y, double delta) {
  const std::size_t n = x.size(), m = y.size();
  BipartiteMatcher g(n + m);
  // left: x[0..n) then diagonal copies of y; right: y[0..m) then diagonal copies of x.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (match_cost(x[i], y[j]) <= delta) g.add_edge(i, j);
    if (delete_cost(x[i]) <= delta) g.add_edge(i, m + i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (delete_cost(y[j]) <= delta) g.add_edge(n + j, j);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(n + j, m + i);
  }
  return g.max_matching() == n + m;
}

inline void expand(const Barcode& B, std::vector<Interval>& finite, std::vector<double>& infinite_births) {
  for (const Bar& b : B.bars())
    for (std::uint64_t k = 0; k < b.multiplicity; ++k) {
      if (b.infinite()) infinite_births.push_back(b.birth);
      else finite.push_back({b.birth, b.death});
    }
}

}  // namespace detail

/// Bottleneck distance with the diagonal convention: matching [a,d) to [a',d')
/// costs max(|a-a'|, |d-d'|), leaving a finite bar unmatched costs half its length.
/// Infinite bars only match infinite bars; differing counts give +inf.
inline double bottleneck(const Barcode& B1, const Barcode& B2) {
  std::vector<detail::Interval> x, y;
  std::vector<double> xi, yi;
  detail::expand(B1, x, xi);
  detail::expand(B2, y, yi);
  if (xi.size() != yi.size()) return kInfinity;

  // On the line, sorted order is an optimal bottleneck matching of the infinite bars.
  double inf_part = 0.0;
  for (std::size_t k = 0; k < xi.size(); ++k) inf_part = std::max(inf_part, std::abs(xi[k] - yi[k]));

  double upper = 0.0;
  for (const auto& a : x) upper = std::max(upper, detail::delete_cost(a));
  for (const auto& b : y) upper = std::max(upper, detail::delete_cost(b));

  std::vector<double> candidates{0.0, upper};
  for (const auto& a : x) {
    if (detail::delete_cost(a) <= upper) candidates.push_back(detail::delete_cost(a));
    for (const auto& b : y)
      if (const double c = detail::match_cost(a, b); c <= upper) candidates.push_back(c);
  }
  for (const auto& b : y) candidates.push_back(detail::delete_cost(b));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;  // candidates[hi] = upper is always feasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (detail::matchable(x, y, candidates[mid])) hi = mid;
    else lo = mid + 1;
  }
  return std::max(inf_part, candidates[lo]);
}

/// Interleaving distance of the interval-decomposable modules with these
/// barcodes; equal to the bottleneck distance by the isometry theorem.
inline double interleaving(const Barcode& B1, const Barcode& B2) { return bottleneck(B1, B2); }

}  // namespace wfbar
