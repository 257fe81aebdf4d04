#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "contig/simplicial_map.hpp"

namespace contig {

struct search_budget {
  std::uint64_t max_maps = 1'000'000;         // BFS visited-set / enumeration cap
  std::optional<std::uint64_t> max_steps;     // cap on chain length
  std::uint64_t max_predicate_evals = 20'000; // cover-solver evaluation cap
};

enum class reach : std::uint8_t { connected, disconnected, budget_exhausted };

struct contiguity_verdict {
  reach status = reach::budget_exhausted;
  std::optional<std::uint64_t> steps;  // present iff connected; 0 iff f == g
  std::uint64_t explored = 0;          // maps whose neighbors were expanded
};

const char* to_string(reach r);

// All valid maps g != f contiguous to f, in canonical (lexicographic
// assignment) order.
std::vector<simplicial_map> contiguous_neighbors(const simplicial_map& f);

// BFS over the contiguity graph from f.  Connected carries the graph
// distance (minimal chain length); disconnected is reported only after the
// component is exhausted; the budget verdict is distinct from both.
contiguity_verdict same_contiguity_class(const simplicial_map& f, const simplicial_map& g,
                                         const search_budget& budget = {});

// All valid simplicial maps domain -> codomain in canonical order.  Throws
// resource_exhausted (carrying the partial count) past budget.max_maps.
std::vector<simplicial_map> enumerate_hom(const complex_ptr& domain, const complex_ptr& codomain,
                                          const search_budget& budget = {});

std::uint64_t hom_count(const complex_ptr& domain, const complex_ptr& codomain,
                        const search_budget& budget = {});

enum class hom_enum : std::uint8_t { completed, stopped, budget_exhausted };

// Streaming enumeration in a fixed deterministic search order (most
// constrained vertex first).  Returning false from the visitor stops early.
hom_enum for_each_hom(const complex_ptr& domain, const complex_ptr& codomain,
                      const search_budget& budget,
                      const std::function<bool(const simplicial_map&)>& visit);

}  // namespace contig
