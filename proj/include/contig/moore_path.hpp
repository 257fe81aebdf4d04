#pragma once

#include <utility>
#include <vector>

#include "contig/complex.hpp"

namespace contig {

// Eventually constant vertex sequence indexed by the integers, with support
// [lo, hi]; values extend constantly outside.  Consecutive values are equal
// or span an edge of the target.  make() canonicalizes (tight support,
// constants at [0,0]); product applies the concatenation formula verbatim
// and may leave slack, which tighten() removes.
class moore_path {
 public:
  static moore_path make(complex_ptr target, int start, std::vector<vertex_id> values);
  static moore_path raw(complex_ptr target, int start, std::vector<vertex_id> values);

  const complex& target() const { return *target_; }
  const complex_ptr& target_ptr() const { return target_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int length() const { return hi_ - lo_; }
  bool constant() const;
  vertex_id at(int i) const;  // constant extension outside the support
  const std::vector<vertex_id>& values() const { return vals_; }

  std::pair<vertex_id, vertex_id> endpoints() const;  // (initial, final)

  friend bool operator==(const moore_path& a, const moore_path& b);

 private:
  moore_path() = default;
  complex_ptr target_;
  int lo_ = 0, hi_ = 0;
  std::vector<vertex_id> vals_;  // size hi-lo+1
};

moore_path reverse(const moore_path& g);    // i -> g(-i), support negated
moore_path normalize(const moore_path& g);  // shifted to start at 0
moore_path tighten(const moore_path& g);

// Concatenation: (g*d)(i) = g(i - d.lo) for i <= g.hi + d.lo, d(i - g.hi)
// past the junction; support [g.lo+d.lo, g.hi+d.hi].  Requires the final
// vertex of g to equal the initial vertex of d.  Strictly associative with
// constant paths as two-sided units.
moore_path product(const moore_path& g, const moore_path& d);

// Whether at every step i the combined vertex set {p(i)} ∪ {p(i+1)} over the
// given paths is a simplex of the shared target.  The window must contain
// every support; outside it the condition holds by constancy.
bool paths_form_simplex(const std::vector<moore_path>& paths, int window_lo, int window_hi);

}  // namespace contig
