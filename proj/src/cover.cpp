#include "contig/cover.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace contig {

std::int64_t extended_value::n() const {
  if (k_ != kind::finite) throw malformed_input("extended_value: not finite");
  return n_;
}

std::string extended_value::str() const {
  switch (k_) {
    case kind::finite: return std::to_string(n_);
    case kind::infinite: return "inf";
    case kind::unknown: return "unknown";
  }
  return "?";
}

std::optional<bool> extended_value::le(const extended_value& a, const extended_value& b) {
  if (a.is_unknown() || b.is_unknown()) return std::nullopt;
  if (a.is_infinite()) return b.is_infinite();
  if (b.is_infinite()) return true;
  return a.n() <= b.n();
}

namespace {

struct solver {
  const complex_ptr& k;
  const goodness_predicate& pred;
  const search_budget& budget;
  std::size_t n;  // facet count
  std::unordered_map<std::uint64_t, tri> memo;
  std::uint64_t calls = 0;
  bool budget_hit = false;
  bool unknown_hit = false;
  std::uint64_t good_sets = 0;

  subcomplex_ref ref_of(std::uint64_t mask) const {
    subcomplex_ref r;
    r.parent = k;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) r.facet_indices.push_back(i);
    return r;
  }

  // memoized; budget/unknown conditions are latched in the flags
  tri eval(std::uint64_t mask) {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    if (calls >= budget.max_predicate_evals) {
      budget_hit = true;
      return tri::unknown;
    }
    ++calls;
    tri t = pred.evaluate(ref_of(mask));
    if (t == tri::unknown) unknown_hit = true;
    if (t == tri::good) ++good_sets;
    memo.emplace(mask, t);
    return t;
  }
};

// Exact minimum set cover by branch and bound, uncovered-element-first,
// greedy upper bound, deterministic tie-breaking by candidate order.
struct set_cover {
  std::uint64_t universe;
  const std::vector<std::uint64_t>& sets;
  std::size_t best_count = SIZE_MAX;
  std::vector<std::size_t> best, chosen;
  std::size_t max_set_size = 1;

  set_cover(std::uint64_t u, const std::vector<std::uint64_t>& s) : universe(u), sets(s) {
    for (auto m : sets)
      max_set_size = std::max<std::size_t>(max_set_size, std::popcount(m));
    greedy();
    descend(0);
  }

  void greedy() {
    std::uint64_t covered = 0;
    std::vector<std::size_t> pick;
    while (covered != universe) {
      std::size_t best_i = SIZE_MAX;
      int best_gain = 0;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        int gain = std::popcount(sets[i] & ~covered);
        if (gain > best_gain) {
          best_gain = gain;
          best_i = i;
        }
      }
      if (best_i == SIZE_MAX) return;  // not coverable
      pick.push_back(best_i);
      covered |= sets[best_i];
    }
    best_count = pick.size();
    best = std::move(pick);
  }

  void descend(std::uint64_t covered) {
    if (covered == universe) {
      if (chosen.size() < best_count) {
        best_count = chosen.size();
        best = chosen;
      }
      return;
    }
    const auto uncovered = static_cast<std::size_t>(std::popcount(universe & ~covered));
    const std::size_t lower = (uncovered + max_set_size - 1) / max_set_size;
    if (chosen.size() + lower >= best_count) return;

    // least-covered element first
    int pick = -1;
    std::size_t fewest = SIZE_MAX;
    std::uint64_t todo = universe & ~covered;
    for (int e = 0; e < 64; ++e) {
      if (!(todo >> e & 1)) continue;
      std::size_t cnt = 0;
      for (auto m : sets)
        if (m >> e & 1) ++cnt;
      if (cnt < fewest) {
        fewest = cnt;
        pick = e;
      }
    }
    if (pick < 0 || fewest == 0) return;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!(sets[i] >> pick & 1)) continue;
      chosen.push_back(i);
      descend(covered | sets[i]);
      chosen.pop_back();
    }
  }
};

}  // namespace

cover_solution minimum_good_cover(const complex_ptr& k, const goodness_predicate& p,
                                  const search_budget& budget) {
  if (!k) throw malformed_input("minimum_good_cover: missing complex");
  cover_solution out;
  const std::size_t n = k->facets().size();
  if (n > 64) {
    out.note = "cover solver limited to 64 facets (" + std::to_string(n) + " given)";
    return out;
  }
  solver s{k, p, budget, n, {}, 0, false, false, 0};
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  auto unknown_result = [&](const char* stage) {
    out.value = extended_value::unknown();
    out.predicate_calls = s.calls;
    std::ostringstream note;
    note << (s.budget_hit ? "predicate evaluation budget exhausted" : "predicate returned unknown")
         << " during " << stage << " after " << s.calls << " calls, " << s.good_sets
         << " good sets seen";
    out.note = note.str();
    return out;
  };

  // single-piece covers must use every facet
  if (s.eval(full) == tri::good) {
    out.value = extended_value::of(0);
    out.pieces = {s.ref_of(full)};
    out.predicate_calls = s.calls;
    return out;
  }

  // a bad singleton blocks every piece containing that facet
  for (std::size_t i = 0; i < n; ++i) {
    if (s.eval(std::uint64_t{1} << i) == tri::bad) {
      out.value = extended_value::infinity();
      out.infeasible_facet = k->facets()[i];
      out.predicate_calls = s.calls;
      return out;
    }
  }
  if (s.budget_hit || s.unknown_hit) return unknown_result("singleton tests");

  // monotone lattice expansion from the singletons; a good set is maximal
  // when every one-facet extension is bad
  std::vector<std::uint64_t> maximal;
  std::unordered_set<std::uint64_t> enqueued;
  std::deque<std::uint64_t> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    frontier.push_back(std::uint64_t{1} << i);
    enqueued.insert(std::uint64_t{1} << i);
  }
  while (!frontier.empty()) {
    const std::uint64_t m = frontier.front();
    frontier.pop_front();
    bool is_maximal = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1) continue;
      const std::uint64_t ext = m | (std::uint64_t{1} << i);
      tri t = s.eval(ext);
      if (s.budget_hit || t == tri::unknown) return unknown_result("lattice expansion");
      if (t == tri::good) {
        is_maximal = false;
        if (enqueued.insert(ext).second) frontier.push_back(ext);
      }
    }
    if (is_maximal) maximal.push_back(m);
  }
  std::sort(maximal.begin(), maximal.end());

  set_cover sc(full, maximal);
  if (sc.best_count == SIZE_MAX) {
    out.note = "no cover found over maximal good sets";
    out.predicate_calls = s.calls;
    return out;
  }
  out.value = extended_value::of(static_cast<std::int64_t>(sc.best_count) - 1);
  for (std::size_t i : sc.best) out.pieces.push_back(s.ref_of(maximal[i]));
  out.predicate_calls = s.calls;
  return out;
}

}  // namespace contig
