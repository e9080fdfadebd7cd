#pragma once

// Action-filtered chain complexes over the two-element field.
//
// A generator carries an action value; the differential is given as data
// (a set of generator indices per generator) and must strictly lower action
// and square to zero.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wfbar/barcode.hpp"
#include "wfbar/error.hpp"
#include "wfbar/text.hpp"

namespace wfbar {

struct Generator {
  std::string id;
  double action = 0.0;
};

class FilteredComplex {
public:
  std::size_t add_generator(std::string id, double action) {
    if (!std::isfinite(action)) throw std::invalid_argument("generator '" + id + "' has a non-finite action");
    if (id.empty() || id.find_first_of(" \t\r\n#") != std::string::npos)
      throw std::invalid_argument("generator id '" + id + "' is empty or contains blanks or '#'");
    if (index_.contains(id)) throw std::invalid_argument("duplicate generator '" + id + "'");
    const std::size_t idx = generators_.size();
    index_.emplace(id, idx);
    generators_.push_back({std::move(id), action});
    boundary_.emplace_back();
    return idx;
  }

  /// Sets the boundary of `gen` to the mod-2 sum of `terms` (repeats cancel).
  void set_boundary(std::size_t gen, std::vector<std::size_t> terms) {
    if (gen >= generators_.size()) throw std::out_of_range("generator index out of range");
    for (std::size_t t : terms)
      if (t >= generators_.size()) throw std::out_of_range("boundary term index out of range");
    std::sort(terms.begin(), terms.end());
    std::vector<std::size_t> reduced;
    for (std::size_t i = 0; i < terms.size();) {
      std::size_t j = i;
      while (j < terms.size() && terms[j] == terms[i]) ++j;
      if ((j - i) % 2 == 1) reduced.push_back(terms[i]);
      i = j;
    }
    boundary_[gen] = std::move(reduced);
  }

  void set_boundary(std::string_view gen, std::span<const std::string> terms) {
    std::vector<std::size_t> idx;
    idx.reserve(terms.size());
    for (const auto& t : terms) idx.push_back(index_of(t));
    set_boundary(index_of(gen), std::move(idx));
  }

  std::size_t index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw std::invalid_argument("unknown generator '" + std::string(id) + "'");
    return it->second;
  }
  bool contains(std::string_view id) const { return index_.contains(std::string(id)); }

  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  const Generator& generator(std::size_t i) const { return generators_[i]; }
  std::span<const Generator> generators() const { return generators_; }
  std::span<const std::size_t> boundary(std::size_t i) const { return boundary_[i]; }

  /// Indices ordered by (action, id); the filtration order used by reduction.
  std::vector<std::size_t> filtration_order() const {
    std::vector<std::size_t> order(size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& ga = generators_[a];
      const auto& gb = generators_[b];
      if (ga.action != gb.action) return ga.action < gb.action;
      return ga.id < gb.id;
    });
    return order;
  }

private:
  std::vector<Generator> generators_;
  std::vector<std::vector<std::size_t>> boundary_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Validation

struct Validation {
  enum class Kind { ok, strict_action_decrease, boundary_squared_nonzero };

  Kind kind = Kind::ok;
  std::string message;
  std::vector<std::string> ids;

  bool ok() const { return kind == Kind::ok; }
  explicit operator bool() const { return ok(); }
};

/// Reports the first violated invariant. Unique ids and declared boundary
/// references are enforced by FilteredComplex itself.
inline Validation validate(const FilteredComplex& C) {
  for (std::size_t g = 0; g < C.size(); ++g) {
    for (std::size_t t : C.boundary(g)) {
      if (!(C.generator(t).action < C.generator(g).action)) {
        const auto& gid = C.generator(g).id;
        const auto& tid = C.generator(t).id;
        return {Validation::Kind::strict_action_decrease,
                "strict action decrease violated: '" + tid + "' (action " + text::format_real(C.generator(t).action) +
                    ") appears in the boundary of '" + gid + "' (action " +
                    text::format_real(C.generator(g).action) + ")",
                {gid, tid}};
      }
    }
  }
  std::vector<char> parity(C.size(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t g = 0; g < C.size(); ++g) {
    touched.clear();
    for (std::size_t t : C.boundary(g))
      for (std::size_t u : C.boundary(t)) {
        if (!parity[u]) touched.push_back(u);
        parity[u] ^= 1;
      }
    std::vector<std::string> bad;
    for (std::size_t u : touched) {
      if (parity[u]) bad.push_back(C.generator(u).id);
      parity[u] = 0;
    }
    if (!bad.empty()) {
      std::sort(bad.begin(), bad.end());
      std::vector<std::string> ids{C.generator(g).id};
      ids.insert(ids.end(), bad.begin(), bad.end());
      return {Validation::Kind::boundary_squared_nonzero,
              "boundary of the boundary of '" + C.generator(g).id + "' is nonzero (contains '" + bad.front() + "')",
              std::move(ids)};
    }
  }
  return {};
}

inline void require_valid(const FilteredComplex& C) {
  if (auto v = validate(C); !v) throw InvariantViolation(v.message);
}

// ---------------------------------------------------------------------------
// Sub/quotient complexes

/// Short exact sequence low -> C -> quotient split at an action threshold.
struct TriangleDecomposition {
  FilteredComplex low;       // generators with action < threshold
  FilteredComplex quotient;  // generators with action >= threshold, boundary taken mod low
  double threshold = 0.0;
};

inline TriangleDecomposition split_at(const FilteredComplex& C, double tau) {
  require_valid(C);
  for (const auto& g : C.generators())
    if (g.action == tau)
      throw std::invalid_argument("split threshold " + text::format_real(tau) + " collides with the action of '" +
                                  g.id + "'");
  TriangleDecomposition out;
  out.threshold = tau;
  std::vector<std::size_t> where(C.size());
  for (std::size_t g = 0; g < C.size(); ++g) {
    const auto& gen = C.generator(g);
    where[g] = gen.action < tau ? out.low.add_generator(gen.id, gen.action)
                                : out.quotient.add_generator(gen.id, gen.action);
  }
  for (std::size_t g = 0; g < C.size(); ++g) {
    const bool in_low = C.generator(g).action < tau;
    std::vector<std::size_t> terms;
    for (std::size_t t : C.boundary(g)) {
      const bool t_low = C.generator(t).action < tau;
      if (t_low == in_low) terms.push_back(where[t]);
    }
    (in_low ? out.low : out.quotient).set_boundary(where[g], std::move(terms));
  }
  return out;
}

/// Complex whose barcode is exactly `bars`: a birth generator per bar copy and,
/// for finite bars, a death generator bounding it. Births must avoid all death values.
inline FilteredComplex planted_barcode_complex(const Barcode& bars) {
  std::vector<double> births, deaths;
  for (const Bar& b : bars.bars()) {
    births.push_back(b.birth);
    if (!b.infinite()) deaths.push_back(b.death);
  }
  std::sort(deaths.begin(), deaths.end());
  for (double b : births)
    if (std::binary_search(deaths.begin(), deaths.end(), b))
      throw std::invalid_argument("planted barcode has a birth equal to a death value (" + text::format_real(b) +
                                  "); perturb endpoints first");
  FilteredComplex C;
  std::size_t k = 0;
  for (const Bar& b : bars.bars()) {
    for (std::uint64_t m = 0; m < b.multiplicity; ++m, ++k) {
      const std::size_t birth = C.add_generator("b" + std::to_string(k), b.birth);
      if (!b.infinite()) C.set_boundary(C.add_generator("d" + std::to_string(k), b.death), {birth});
    }
  }
  return C;
}

// ---------------------------------------------------------------------------
// Text format:
//   filtered-complex v1
//   gen <id> <action>
//   bnd <id> <id>+

inline FilteredComplex read_complex(std::istream& in) {
  FilteredComplex C;
  bool header = false;
  std::map<std::size_t, std::size_t> bnd_line;  // generator -> line of its bnd record
  text::for_each_record(in, [&](std::size_t line, const auto& tok) {
    if (!header) {
      if (tok.size() != 2 || tok[0] != "filtered-complex" || tok[1] != "v1")
        throw ParseError(line, "expected header 'filtered-complex v1'");
      header = true;
      return;
    }
    if (tok[0] == "gen") {
      if (tok.size() != 3) throw ParseError(line, "expected: gen <id> <action>");
      const std::string id(tok[1]);
      if (C.contains(id)) throw ParseError(line, "duplicate generator '" + id + "'");
      const double action = text::parse_real(tok[2], line);
      if (!std::isfinite(action)) throw ParseError(line, "generator action must be finite");
      C.add_generator(id, action);
    } else if (tok[0] == "bnd") {
      if (tok.size() < 3) throw ParseError(line, "expected: bnd <id> <id>+");
      if (!C.contains(tok[1])) throw ParseError(line, "unknown generator '" + std::string(tok[1]) + "'");
      const std::size_t g = C.index_of(tok[1]);
      if (bnd_line.contains(g)) throw ParseError(line, "second bnd record for '" + std::string(tok[1]) + "'");
      std::vector<std::size_t> terms;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (!C.contains(tok[i])) throw ParseError(line, "unknown generator '" + std::string(tok[i]) + "'");
        terms.push_back(C.index_of(tok[i]));
      }
      C.set_boundary(g, std::move(terms));
      bnd_line[g] = line;
    } else {
      throw ParseError(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  });
  if (!header) throw ParseError(0, "missing header 'filtered-complex v1'");
  if (auto v = validate(C); !v) {
    const std::size_t g = C.index_of(v.ids.front());
    const auto it = bnd_line.find(g);
    throw InvariantViolation(it != bnd_line.end() ? "line " + std::to_string(it->second) + ": " + v.message
                                                  : v.message);
  }
  return C;
}

inline void write_complex(std::ostream& out, const FilteredComplex& C) {
  out << "filtered-complex v1\n";
  for (const auto& g : C.generators()) out << "gen " << g.id << ' ' << text::format_real(g.action) << '\n';
  for (std::size_t g = 0; g < C.size(); ++g) {
    if (C.boundary(g).empty()) continue;
    out << "bnd " << C.generator(g).id;
    for (std::size_t t : C.boundary(g)) out << ' ' << C.generator(t).id;
    out << '\n';
  }
}

}  // namespace wfbar
