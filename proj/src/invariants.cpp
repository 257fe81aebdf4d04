#include "contig/invariants.hpp"

#include <algorithm>

namespace contig {

namespace {

complex_ptr skeleton_of_piece(const complex& piece, std::optional<int> m) {
  if (!m || *m >= piece.dim()) return share(piece);
  return share(skeleton(piece, *m));
}

tri verdict_to_tri(const contiguity_verdict& v) {
  switch (v.status) {
    case reach::connected: return tri::good;
    case reach::disconnected: return tri::bad;
    case reach::budget_exhausted: return tri::unknown;
  }
  return tri::unknown;
}

// Piece is good iff f and g, restricted to the piece's m-skeleton, lie in
// the same contiguity class.  Monotone: a chain on a bigger piece restricts
// to any smaller one.
goodness_predicate agreement_predicate(simplicial_map f, simplicial_map g, std::optional<int> m,
                                       search_budget budget) {
  return {[f = std::move(f), g = std::move(g), m, budget](const subcomplex_ref& ref) -> tri {
    complex_ptr skel = skeleton_of_piece(ref.materialize(), m);
    try {
      return verdict_to_tri(
          same_contiguity_class(restrict_map(f, skel), restrict_map(g, skel), budget));
    } catch (const resource_exhausted&) {
      return tri::unknown;
    }
  }};
}

void check_parallel_pair(const simplicial_map& f, const simplicial_map& g, const char* who) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw malformed_input(std::string(who) + ": maps must share domain and codomain");
  if (!validate(f) || !validate(g))
    throw malformed_input(std::string(who) + ": maps must be simplicial");
}

vertex_id base_or_least(const complex& k, std::optional<vertex_id> base, const char* who) {
  if (!base) return k.vertices().front();
  if (!k.has_vertex(*base)) throw malformed_input(std::string(who) + ": base vertex not present");
  return *base;
}

}  // namespace

invariant_result sd_m(const simplicial_map& f, const simplicial_map& g, std::optional<int> m,
                      const search_budget& budget) {
  check_parallel_pair(f, g, "sd_m");
  invariant_result r;
  r.name = "sd";
  r.m = m;
  r.witness = minimum_good_cover(f.domain_ptr(), agreement_predicate(f, g, m, budget), budget);
  r.value = r.witness.value;
  return r;
}

invariant_result scat_m(const complex_ptr& k, std::optional<int> m, const search_budget& budget,
                        std::optional<vertex_id> base, bool dual_route) {
  if (!k) throw malformed_input("scat_m: missing complex");
  const vertex_id v0 = base_or_least(*k, base, "scat_m");
  invariant_result r = sd_m(identity_map(k), constant_map(k, k, v0), m, budget);
  r.name = "scat";
  r.routes.emplace_back("sd(id,const)", r.value);
  if (dual_route) {
    // categorical-cover definition, built from explicit inclusions
    goodness_predicate pred{[k, v0, m, budget](const subcomplex_ref& ref) -> tri {
      complex_ptr skel = skeleton_of_piece(ref.materialize(), m);
      try {
        return verdict_to_tri(same_contiguity_class(inclusion_map(skel, k),
                                                    constant_map(skel, k, v0), budget));
      } catch (const resource_exhausted&) {
        return tri::unknown;
      }
    }};
    cover_solution direct = minimum_good_cover(k, pred, budget);
    r.routes.emplace_back("categorical-cover", direct.value);
  }
  return r;
}

invariant_result scat_m_of_map(const simplicial_map& f, std::optional<int> m,
                               const search_budget& budget, std::optional<vertex_id> base) {
  if (!validate(f)) throw malformed_input("scat_m_of_map: map must be simplicial");
  const vertex_id v0 = base_or_least(f.codomain(), base, "scat_m_of_map");
  const complex_ptr& k = f.domain_ptr();
  // piece good iff f composed with the skeleton inclusion is in the class of
  // the constant at v0
  goodness_predicate pred{[f, k, v0, m, budget](const subcomplex_ref& ref) -> tri {
    complex_ptr skel = skeleton_of_piece(ref.materialize(), m);
    try {
      return verdict_to_tri(same_contiguity_class(
          compose(f, inclusion_map(skel, k)), constant_map(skel, f.codomain_ptr(), v0), budget));
    } catch (const resource_exhausted&) {
      return tri::unknown;
    }
  }};
  invariant_result r;
  r.name = "scat-map";
  r.m = m;
  r.witness = minimum_good_cover(k, pred, budget);
  r.value = r.witness.value;
  return r;
}

invariant_result tc_m(const complex_ptr& k, std::optional<int> m, const search_budget& budget,
                      bool farber_route) {
  if (!k) throw malformed_input("tc_m: missing complex");
  simplicial_map pr1 = projection_map(k, k, 1);
  simplicial_map pr2 = projection_map(k, k, 2);
  invariant_result r = sd_m(pr1, pr2, m, budget);
  r.name = "tc";
  r.routes.emplace_back("sd(pr1,pr2)", r.value);

  if (farber_route) {
    const complex_ptr square = pr1.domain_ptr();
    simplicial_map diag = diagonal_map(k);
    // piece good iff some sigma: piece -> K has diag∘sigma in the class of
    // the inclusion on the piece's m-skeleton; sigma candidates start with
    // the two projections, then the full Hom enumeration
    goodness_predicate pred{[k, square, diag, m, budget](const subcomplex_ref& ref) -> tri {
      complex_ptr piece = share(ref.materialize());
      complex_ptr skel = skeleton_of_piece(*piece, m);
      bool saw_unknown = false;
      try {
        simplicial_map incl = inclusion_map(skel, square);
        auto attempt = [&](const simplicial_map& sigma) -> bool {
          contiguity_verdict v = same_contiguity_class(
              restrict_map(compose(diag, sigma), skel), incl, budget);
          if (v.status == reach::budget_exhausted) saw_unknown = true;
          return v.status == reach::connected;
        };
        simplicial_map p1 = restrict_map(projection_map(k, k, 1), piece);
        simplicial_map p2 = restrict_map(projection_map(k, k, 2), piece);
        if (attempt(p1)) return tri::good;
        if (!(p2 == p1) && attempt(p2)) return tri::good;
        bool found = false;
        hom_enum he = for_each_hom(piece, k, budget, [&](const simplicial_map& sigma) {
          if (sigma == p1 || sigma == p2) return true;
          if (attempt(sigma)) {
            found = true;
            return false;
          }
          return true;
        });
        if (found) return tri::good;
        if (he == hom_enum::budget_exhausted || saw_unknown) return tri::unknown;
        return tri::bad;
      } catch (const resource_exhausted&) {
        return tri::unknown;
      }
    }};
    cover_solution farber = minimum_good_cover(square, pred, budget);
    r.routes.emplace_back("farber", farber.value);
  }
  return r;
}

invariant_result secat_m(const simplicial_map& f, std::optional<int> m, bool homotopy,
                         const search_budget& budget) {
  if (!validate(f)) throw malformed_input("secat_m: map must be simplicial");
  const complex_ptr& k = f.domain_ptr();
  const complex_ptr& l = f.codomain_ptr();
  // cover of the codomain; a piece is good iff some s: skel -> K is a
  // section over the piece's m-skeleton, on the nose (strict) or up to
  // contiguity class (homotopy)
  goodness_predicate pred{[f, k, l, m, homotopy, budget](const subcomplex_ref& ref) -> tri {
    complex_ptr skel = skeleton_of_piece(ref.materialize(), m);
    bool saw_unknown = false;
    try {
      simplicial_map incl = inclusion_map(skel, l);
      bool found = false;
      hom_enum he = for_each_hom(skel, k, budget, [&](const simplicial_map& s) {
        simplicial_map fs = compose(f, s);
        if (homotopy) {
          contiguity_verdict v = same_contiguity_class(fs, incl, budget);
          if (v.status == reach::budget_exhausted) saw_unknown = true;
          if (v.status != reach::connected) return true;
        } else if (!(fs.assignment() == incl.assignment())) {
          return true;
        }
        found = true;
        return false;
      });
      if (found) return tri::good;
      if (he == hom_enum::budget_exhausted || saw_unknown) return tri::unknown;
      return tri::bad;
    } catch (const resource_exhausted&) {
      return tri::unknown;
    }
  }};
  invariant_result r;
  r.name = homotopy ? "hsecat" : "secat";
  r.m = m;
  r.witness = minimum_good_cover(l, pred, budget);
  r.value = r.witness.value;
  return r;
}

}  // namespace contig
