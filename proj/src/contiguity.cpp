#include "contig/contiguity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

namespace contig {

const char* to_string(reach r) {
  switch (r) {
    case reach::connected: return "connected";
    case reach::disconnected: return "disconnected";
    case reach::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

// Fixed view of one Hom(domain, codomain) problem.  Codomain vertex sets are
// 64-bit masks over codomain vertex indices, so the engine is limited to 64
// codomain vertices.
struct engine {
  const complex& dom;
  const complex& cod;
  int n_dom, n_cod;
  std::vector<std::vector<int>> facets;     // domain facets as index lists
  std::vector<std::vector<int>> facets_of;  // domain vertex index -> facet indices
  std::vector<std::uint64_t> cod_facets;

  engine(const complex& d, const complex& c) : dom(d), cod(c) {
    n_dom = static_cast<int>(dom.vertex_count());
    n_cod = static_cast<int>(cod.vertex_count());
    if (n_cod > 64)
      throw resource_exhausted("contiguity engine: codomain exceeds 64 vertices",
                               static_cast<std::uint64_t>(n_cod));
    facets.reserve(dom.facets().size());
    facets_of.assign(static_cast<std::size_t>(n_dom), {});
    for (const auto& f : dom.facets()) {
      std::vector<int> idx;
      idx.reserve(f.size());
      for (vertex_id v : f.vertices()) {
        int i = dom.vertex_index(v);
        idx.push_back(i);
        facets_of[static_cast<std::size_t>(i)].push_back(static_cast<int>(facets.size()));
      }
      facets.push_back(std::move(idx));
    }
    cod_facets.reserve(cod.facets().size());
    for (const auto& f : cod.facets()) {
      std::uint64_t m = 0;
      for (vertex_id v : f.vertices()) m |= std::uint64_t{1} << cod.vertex_index(v);
      cod_facets.push_back(m);
    }
  }

  bool mask_is_simplex(std::uint64_t m) const {
    for (std::uint64_t f : cod_facets)
      if ((m & ~f) == 0) return true;
    return false;
  }
};

// assignment encoded as one byte (codomain vertex index) per domain vertex
using enc = std::string;

enc encode(const engine& e, const simplicial_map& f) {
  enc a(static_cast<std::size_t>(e.n_dom), char(0));
  for (int i = 0; i < e.n_dom; ++i)
    a[static_cast<std::size_t>(i)] =
        static_cast<char>(e.cod.vertex_index(f.assignment()[static_cast<std::size_t>(i)]));
  return a;
}

simplicial_map decode(const engine& e, const complex_ptr& dom, const complex_ptr& cod,
                      const enc& a) {
  std::vector<vertex_id> assign;
  assign.reserve(a.size());
  for (char c : a) assign.push_back(e.cod.vertices()[static_cast<std::size_t>(c)]);
  return simplicial_map::build("", dom, cod, std::move(assign));
}

std::vector<std::uint64_t> facet_images(const engine& e, const enc& a) {
  std::vector<std::uint64_t> img(e.facets.size(), 0);
  for (std::size_t fi = 0; fi < e.facets.size(); ++fi)
    for (int v : e.facets[fi])
      img[fi] |= std::uint64_t{1} << static_cast<unsigned char>(a[static_cast<std::size_t>(v)]);
  return img;
}

// Enumerate, in canonical (lexicographic assignment) order, every valid map
// n != f contiguous to f.  Backtracking over domain vertices: a candidate
// image w of vertex v survives iff for every facet s containing v the mask
// f(s) | n(s-so-far) | {w} still fits inside a codomain facet.  on_neighbor
// receives the encoding plus n's own facet images; returning false aborts.
template <typename Fn>
bool for_each_contiguous_neighbor(const engine& e, const enc& f, Fn&& on_neighbor) {
  const auto f_img = facet_images(e, f);
  const std::size_t nf = e.facets.size();
  std::vector<std::uint64_t> acc_fn = f_img;     // f union n-so-far, per facet
  std::vector<std::uint64_t> acc_n(nf, 0);       // n-so-far alone
  enc cur(static_cast<std::size_t>(e.n_dom), char(0));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> saved;  // per-vertex undo stack entries

  auto rec = [&](auto&& self, int v) -> bool {
    if (v == e.n_dom) {
      if (cur == f) return true;  // the map itself is not its own neighbor
      return on_neighbor(static_cast<const enc&>(cur), acc_n);
    }
    const auto& owner = e.facets_of[static_cast<std::size_t>(v)];
    for (int w = 0; w < e.n_cod; ++w) {
      const std::uint64_t bit = std::uint64_t{1} << w;
      bool ok = true;
      for (int fi : owner)
        if (!e.mask_is_simplex(acc_fn[static_cast<std::size_t>(fi)] | bit)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur[static_cast<std::size_t>(v)] = static_cast<char>(w);
      const std::size_t mark = saved.size();
      for (int fi : owner) {
        auto i = static_cast<std::size_t>(fi);
        saved.emplace_back(acc_fn[i], acc_n[i]);
        acc_fn[i] |= bit;
        acc_n[i] |= bit;
      }
      bool keep_going = self(self, v + 1);
      for (std::size_t j = owner.size(); j-- > 0;) {
        auto i = static_cast<std::size_t>(owner[j]);
        acc_fn[i] = saved[mark + j].first;
        acc_n[i] = saved[mark + j].second;
      }
      saved.resize(mark);
      if (!keep_going) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace

std::vector<simplicial_map> contiguous_neighbors(const simplicial_map& f) {
  if (!validate(f)) throw malformed_input("contiguous_neighbors: map is not simplicial");
  engine e(f.domain(), f.codomain());
  std::vector<simplicial_map> out;
  for_each_contiguous_neighbor(e, encode(e, f),
                               [&](const enc& n, const std::vector<std::uint64_t>&) {
                                 out.push_back(decode(e, f.domain_ptr(), f.codomain_ptr(), n));
                                 return true;
                               });
  return out;
}

contiguity_verdict same_contiguity_class(const simplicial_map& f, const simplicial_map& g,
                                         const search_budget& budget) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw malformed_input("same_contiguity_class: maps must share domain and codomain");
  if (!validate(f) || !validate(g))
    throw malformed_input("same_contiguity_class: maps must be simplicial");

  engine e(f.domain(), f.codomain());
  const enc fe = encode(e, f);
  const enc ge = encode(e, g);
  contiguity_verdict out;
  if (fe == ge) {
    out.status = reach::connected;
    out.steps = 0;
    return out;
  }

  const auto g_img = facet_images(e, ge);
  auto adjacent_to_g = [&](const std::vector<std::uint64_t>& masks) {
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (!e.mask_is_simplex(masks[i] | g_img[i])) return false;
    return true;
  };
  if (adjacent_to_g(facet_images(e, fe))) {
    out.status = reach::connected;
    out.steps = 1;
    return out;
  }

  // BFS; each generated map is tested for adjacency to g on the spot.  When
  // the test first fires while expanding depth d, every map of depth <= d+1
  // generated so far tested negative, so the distance is exactly d+2.
  std::unordered_set<enc> visited{fe};
  std::deque<std::pair<enc, std::uint64_t>> queue;
  queue.emplace_back(fe, 0);
  bool truncated = false;
  while (!queue.empty()) {
    auto [h, d] = std::move(queue.front());
    queue.pop_front();
    ++out.explored;
    if (budget.max_steps && d + 2 > *budget.max_steps) {
      truncated = true;
      continue;
    }
    std::optional<std::uint64_t> found;
    bool over_budget = false;
    for_each_contiguous_neighbor(
        e, h, [&](const enc& n, const std::vector<std::uint64_t>& n_img) {
          if (visited.contains(n)) return true;
          if (adjacent_to_g(n_img)) {
            found = d + 2;
            return false;
          }
          if (visited.size() >= budget.max_maps) {
            over_budget = true;
            return false;
          }
          visited.insert(n);
          queue.emplace_back(n, d + 1);
          return true;
        });
    if (found) {
      out.status = reach::connected;
      out.steps = found;
      return out;
    }
    if (over_budget) {
      out.status = reach::budget_exhausted;
      return out;
    }
  }
  out.status = truncated ? reach::budget_exhausted : reach::disconnected;
  return out;
}

namespace {

// Valid-map enumeration: backtracking in a fixed most-constrained-first
// vertex order, pruning partial facet images that already fail to fit in a
// codomain facet.  emit() gets canonical encodings; returns false to stop.
template <typename Fn>
hom_enum for_each_hom_impl(const engine& e, std::uint64_t max_count, Fn&& emit) {
  std::vector<int> order(static_cast<std::size_t>(e.n_dom));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return e.facets_of[static_cast<std::size_t>(a)].size() >
           e.facets_of[static_cast<std::size_t>(b)].size();
  });

  std::vector<std::uint64_t> acc(e.facets.size(), 0);
  enc cur(static_cast<std::size_t>(e.n_dom), char(0));
  std::uint64_t count = 0;
  hom_enum result = hom_enum::completed;

  auto rec = [&](auto&& self, std::size_t at) -> bool {
    if (at == order.size()) {
      if (count >= max_count) {
        result = hom_enum::budget_exhausted;
        return false;
      }
      ++count;
      if (!emit(static_cast<const enc&>(cur))) {
        result = hom_enum::stopped;
        return false;
      }
      return true;
    }
    const int v = order[at];
    const auto& owner = e.facets_of[static_cast<std::size_t>(v)];
    for (int w = 0; w < e.n_cod; ++w) {
      const std::uint64_t bit = std::uint64_t{1} << w;
      bool ok = true;
      for (int fi : owner)
        if (!e.mask_is_simplex(acc[static_cast<std::size_t>(fi)] | bit)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur[static_cast<std::size_t>(v)] = static_cast<char>(w);
      std::vector<std::uint64_t> saved;
      saved.reserve(owner.size());
      for (int fi : owner) {
        saved.push_back(acc[static_cast<std::size_t>(fi)]);
        acc[static_cast<std::size_t>(fi)] |= bit;
      }
      bool keep_going = self(self, at + 1);
      for (std::size_t j = 0; j < owner.size(); ++j)
        acc[static_cast<std::size_t>(owner[j])] = saved[j];
      if (!keep_going) return false;
    }
    return true;
  };
  rec(rec, 0);
  return result;
}

}  // namespace

std::vector<simplicial_map> enumerate_hom(const complex_ptr& domain, const complex_ptr& codomain,
                                          const search_budget& budget) {
  engine e(*domain, *codomain);
  std::vector<enc> found;
  hom_enum r = for_each_hom_impl(e, budget.max_maps, [&](const enc& a) {
    found.push_back(a);
    return true;
  });
  if (r == hom_enum::budget_exhausted)
    throw resource_exhausted("enumerate_hom: budget exceeded", found.size());
  std::sort(found.begin(), found.end());
  std::vector<simplicial_map> out;
  out.reserve(found.size());
  for (const auto& a : found) out.push_back(decode(e, domain, codomain, a));
  return out;
}

std::uint64_t hom_count(const complex_ptr& domain, const complex_ptr& codomain,
                        const search_budget& budget) {
  engine e(*domain, *codomain);
  std::uint64_t count = 0;
  hom_enum r = for_each_hom_impl(e, budget.max_maps, [&](const enc&) {
    ++count;
    return true;
  });
  if (r == hom_enum::budget_exhausted)
    throw resource_exhausted("hom_count: budget exceeded", count);
  return count;
}

hom_enum for_each_hom(const complex_ptr& domain, const complex_ptr& codomain,
                      const search_budget& budget,
                      const std::function<bool(const simplicial_map&)>& visit) {
  engine e(*domain, *codomain);
  return for_each_hom_impl(e, budget.max_maps, [&](const enc& a) {
    return visit(decode(e, domain, codomain, a));
  });
}

}  // namespace contig
