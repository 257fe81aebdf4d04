#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contig/complex.hpp"
#include "contig/contiguity.hpp"

namespace contig {

enum class tri : std::uint8_t { good, bad, unknown };

// Value of an invariant: a non-negative integer, infinity, or unknown
// (budget exhaustion; never conflated with infinity).
class extended_value {
 public:
  enum class kind : std::uint8_t { finite, infinite, unknown };

  static extended_value of(std::int64_t n) { return extended_value(kind::finite, n); }
  static extended_value infinity() { return extended_value(kind::infinite, 0); }
  static extended_value unknown() { return extended_value(kind::unknown, 0); }

  kind k() const { return k_; }
  bool is_finite() const { return k_ == kind::finite; }
  bool is_infinite() const { return k_ == kind::infinite; }
  bool is_unknown() const { return k_ == kind::unknown; }
  std::int64_t n() const;  // finite only

  std::string str() const;  // "3" | "inf" | "unknown"

  friend bool operator==(const extended_value&, const extended_value&) = default;

  // three-valued order: nullopt when either side is unknown
  static std::optional<bool> le(const extended_value& a, const extended_value& b);

 private:
  extended_value(kind k, std::int64_t n) : k_(k), n_(n) {}
  kind k_;
  std::int64_t n_;
};

// Monotone-decreasing goodness: if T is good then every subcomplex of T is
// good.  Declared by construction; spot-checked in tests.
struct goodness_predicate {
  std::function<tri(const subcomplex_ref&)> evaluate;
};

struct cover_solution {
  extended_value value = extended_value::unknown();
  std::vector<subcomplex_ref> pieces;       // present iff finite; |pieces| == value+1
  std::optional<simplex> infeasible_facet;  // certificate when infinite
  std::uint64_t predicate_calls = 0;
  std::string note;                         // progress report when unknown
};

// Least k such that k+1 good facet-generated subcomplexes cover k.  Exact:
// any cover by arbitrary subcomplexes induces one by facet-generated pieces,
// each a subcomplex of an original piece and hence good by monotonicity.
// Procedure: singleton facets first (a bad singleton proves infinity), then
// maximal good facet-sets by monotone lattice expansion with memoized calls,
// then exact branch-and-bound set cover seeded with the greedy bound.
cover_solution minimum_good_cover(const complex_ptr& k, const goodness_predicate& p,
                                  const search_budget& budget = {});

}  // namespace contig
