#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contig/cover.hpp"

namespace contig {

// Every invariant here is a minimum cover by subcomplexes satisfying a
// per-piece contiguity condition restricted to maps from m-dimensional test
// complexes.  That quantifier is decided exactly on the m-skeleton of the
// piece: the image of an m-dimensional complex lands in the m-skeleton, so
// every test map factors through it, and the skeleton inclusion is itself
// such a test map.  m absent (nullopt) means the un-truncated invariant.
struct invariant_result {
  std::string name;  // sd | scat | scat-map | tc | secat | hsecat
  extended_value value = extended_value::unknown();
  cover_solution witness;
  std::optional<int> m;
  std::vector<std::pair<std::string, extended_value>> routes;  // independent routes, when computed
};

// Minimum cover of the common domain by pieces on which f and g agree up to
// contiguity class after restriction to the piece's m-skeleton.
invariant_result sd_m(const simplicial_map& f, const simplicial_map& g, std::optional<int> m,
                      const search_budget& budget = {});

// Simplicial LS category, computed as sd_m(identity, constant at base).
// base defaults to the least vertex id; the value is independent of the
// choice when k is connected.  dual_route additionally runs the categorical
// cover definition directly and reports both.
invariant_result scat_m(const complex_ptr& k, std::optional<int> m, const search_budget& budget = {},
                        std::optional<vertex_id> base = {}, bool dual_route = false);

// LS category of a map: cover of the domain by pieces on which f restricted
// to the m-skeleton is in the class of a constant.
invariant_result scat_m_of_map(const simplicial_map& f, std::optional<int> m,
                               const search_budget& budget = {},
                               std::optional<vertex_id> base = {});

// Discrete topological complexity.  Route (a), the reported value, is
// sd_m(pr1, pr2) over K×K; with farber_route the direct definition is also
// computed: a piece of K×K is good iff some simplicial map sigma from the
// piece to K has diag∘sigma contiguity-equivalent to the inclusion on the
// piece's m-skeleton.
invariant_result tc_m(const complex_ptr& k, std::optional<int> m, const search_budget& budget = {},
                      bool farber_route = false);

// Svarc genus of f: minimum cover of the codomain by pieces admitting a
// section over the m-skeleton, up to equality (strict, homotopy=false) or up
// to contiguity class (homotopy=true).
invariant_result secat_m(const simplicial_map& f, std::optional<int> m, bool homotopy,
                         const search_budget& budget = {});

}  // namespace contig
