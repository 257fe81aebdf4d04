#include "contig/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace contig {

namespace {

std::string m_str(std::optional<int> m) { return m ? std::to_string(*m) : "inf"; }

std::string describe(const simplicial_map& f) {
  std::ostringstream s;
  s << (f.name().empty() ? "map" : f.name()) << "[";
  for (std::size_t i = 0; i < f.assignment().size(); ++i)
    s << (i ? "," : "") << f.domain().label(f.domain().vertices()[i]) << ">"
      << f.codomain().label(f.assignment()[i]);
  s << "]";
  return s.str();
}

std::string fingerprint(const complex& k) {
  std::ostringstream s;
  s << k.name() << "/";
  for (const auto& f : k.facets()) {
    for (vertex_id v : f.vertices()) s << v << ".";
    s << ";";
  }
  return s.str();
}

std::string fingerprint(const simplicial_map& f) {
  std::ostringstream s;
  s << fingerprint(f.domain()) << "->" << fingerprint(f.codomain()) << ":";
  for (vertex_id v : f.assignment()) s << v << ",";
  return s.str();
}

// (a+1)(b+1)-1 with infinity absorbing and unknown propagating
extended_value product_bound(const extended_value& a, const extended_value& b) {
  if (a.is_unknown() || b.is_unknown()) return extended_value::unknown();
  if (a.is_infinite() || b.is_infinite()) return extended_value::infinity();
  return extended_value::of((a.n() + 1) * (b.n() + 1) - 1);
}

struct ctx {
  const corpus& c;
  const verify_options& opt;
  verify_result res;
  std::map<std::string, extended_value> cache;

  bool enabled(const std::string& theorem) const {
    if (opt.suite == "all" || opt.suite.empty()) return true;
    std::istringstream in(opt.suite);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty() && theorem.rfind(tok, 0) == 0) return true;
    return false;
  }

  void record(const std::string& theorem, const std::string& instance, check_status st,
              const std::string& detail) {
    res.records.push_back({theorem, instance, st, detail});
    if (st == check_status::pass) ++res.passed;
    else if (st == check_status::fail) ++res.failed;
    else ++res.skipped;
  }

  void check_le(const std::string& thm, const std::string& inst, const extended_value& a,
                const extended_value& b, const std::string& expr) {
    auto le = extended_value::le(a, b);
    std::string detail = expr + ": " + a.str() + " vs " + b.str();
    if (!le) record(thm, inst, check_status::skip, detail + " (unknown)");
    else if (*le) record(thm, inst, check_status::pass, detail);
    else record(thm, inst, check_status::fail, "VIOLATION " + detail);
  }

  void check_eq(const std::string& thm, const std::string& inst, const extended_value& a,
                const extended_value& b, const std::string& expr) {
    std::string detail = expr + ": " + a.str() + " vs " + b.str();
    if (a.is_unknown() || b.is_unknown())
      record(thm, inst, check_status::skip, detail + " (unknown)");
    else if (a == b) record(thm, inst, check_status::pass, detail);
    else record(thm, inst, check_status::fail, "VIOLATION " + detail);
  }

  // cached invariant values; the fault-injection test hooks live here, not
  // in the library
  extended_value sd_val(const simplicial_map& f, const simplicial_map& g, std::optional<int> m) {
    if (opt.inject_fault == "pred-always-good") return extended_value::of(0);
    std::string key = "sd|" + m_str(m) + "|" + fingerprint(f) + "|" + fingerprint(g);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    extended_value v = sd_m(f, g, m, opt.budget).value;
    cache.emplace(std::move(key), v);
    return v;
  }

  extended_value scat_val(const complex_ptr& k, std::optional<int> m) {
    std::string key = "scat|" + m_str(m) + "|" + fingerprint(*k);
    extended_value v = [&] {
      if (auto it = cache.find(key); it != cache.end()) return it->second;
      extended_value w = scat_m(k, m, opt.budget).value;
      cache.emplace(key, w);
      return w;
    }();
    if (opt.inject_fault == "off-by-one-scat" && v.is_finite())
      return extended_value::of(v.n() + 1);
    return v;
  }

  extended_value tc_val(const complex_ptr& k, std::optional<int> m) {
    std::string key = "tc|" + m_str(m) + "|" + fingerprint(*k);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    extended_value v = tc_m(k, m, opt.budget).value;
    cache.emplace(std::move(key), v);
    return v;
  }

  extended_value secat_val(const simplicial_map& f, std::optional<int> m, bool homotopy) {
    std::string key = (homotopy ? "hsecat|" : "secat|") + m_str(m) + "|" + fingerprint(f);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    extended_value v = secat_m(f, m, homotopy, opt.budget).value;
    cache.emplace(std::move(key), v);
    return v;
  }

  bool cover_ok(const complex& k) const { return k.facets().size() <= opt.cover_facet_cap; }
  bool engine_ok(const complex& k) const { return k.vertex_count() <= opt.engine_vertex_cap; }
};

std::vector<std::optional<int>> sorted_grid(const verify_options& opt) {
  std::vector<int> finite;
  bool has_inf = false;
  for (auto m : opt.m_grid) {
    if (m) finite.push_back(*m);
    else has_inf = true;
  }
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
  std::vector<std::optional<int>> grid;
  for (int m : finite) grid.emplace_back(m);
  if (has_inf) grid.emplace_back(std::nullopt);
  return grid;
}

void run_pair_checks(ctx& x) {
  const auto grid = sorted_grid(x.opt);
  std::mt19937_64 rng(x.c.seed ^ 0xa24baed4963ee407ull);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<corpus_item> small;
  for (const auto& it : x.c.complexes)
    if (it.cx->vertex_count() <= 3) small.push_back(it);

  std::size_t done = 0;
  for (const auto& p : x.c.pairs) {
    if (x.opt.max_pairs_per_check && done >= x.opt.max_pairs_per_check) break;
    ++done;
    const std::string inst = p.tag;
    const complex_ptr& dom = p.f.domain_ptr();
    const complex_ptr& cod = p.f.codomain_ptr();

    // the sampled side maps are fixed per pair so reruns are reproducible
    std::optional<simplicial_map> alpha, beta;
    if (!small.empty()) {
      const auto& m_item = small[pick(small.size())];
      auto homs = enumerate_hom(m_item.cx, dom, search_budget{4096, {}, 0});
      if (!homs.empty()) alpha = homs[pick(homs.size())];
      const auto& n_item = small[pick(small.size())];
      auto homs2 = enumerate_hom(cod, n_item.cx, search_budget{4096, {}, 0});
      if (!homs2.empty()) beta = homs2[pick(homs2.size())];
    }

    if (x.enabled("prop-3.2-monotone")) {
      for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        x.check_le("prop-3.2-monotone", inst, x.sd_val(p.f, p.g, grid[i]),
                   x.sd_val(p.f, p.g, grid[i + 1]),
                   "sd_" + m_str(grid[i]) + " <= sd_" + m_str(grid[i + 1]));
    }

    if (x.enabled("stability-limit")) {
      const int d = dom->dim();
      for (int extra = 0; extra <= 1; ++extra)
        x.check_eq("stability-limit", inst, x.sd_val(p.f, p.g, d + extra),
                   x.sd_val(p.f, p.g, std::nullopt),
                   "sd_" + std::to_string(d + extra) + " == sd_inf (dim=" + std::to_string(d) + ")");
    }

    if (x.enabled("symmetry-sd")) {
      for (auto m : grid)
        x.check_eq("symmetry-sd", inst, x.sd_val(p.f, p.g, m), x.sd_val(p.g, p.f, m),
                   "sd_" + m_str(m) + "(f,g) == sd_" + m_str(m) + "(g,f)");
    }

    if (x.enabled("prop-3.2-precompose")) {
      if (alpha) {
        auto fa = compose(p.f, *alpha);
        auto ga = compose(p.g, *alpha);
        for (auto m : grid)
          x.check_le("prop-3.2-precompose", inst + " alpha=" + describe(*alpha),
                     x.sd_val(fa, ga, m), x.sd_val(p.f, p.g, m),
                     "sd_" + m_str(m) + "(fa,ga) <= sd_" + m_str(m) + "(f,g)");
      } else {
        x.record("prop-3.2-precompose", inst, check_status::skip, "no alpha sample");
      }
    }

    if (x.enabled("prop-3.2-postcompose")) {
      if (beta) {
        auto bf = compose(*beta, p.f);
        auto bg = compose(*beta, p.g);
        for (auto m : grid)
          x.check_le("prop-3.2-postcompose", inst + " beta=" + describe(*beta),
                     x.sd_val(bf, bg, m), x.sd_val(p.f, p.g, m),
                     "sd_" + m_str(m) + "(bf,bg) <= sd_" + m_str(m) + "(f,g)");
      } else {
        x.record("prop-3.2-postcompose", inst, check_status::skip, "no beta sample");
      }
    }

    if (x.enabled("lemma-3.5")) {
      if (cod->is_connected()) {
        for (auto m : grid)
          x.check_le("lemma-3.5", inst, x.sd_val(p.f, p.g, m), x.scat_val(dom, m),
                     "sd_" + m_str(m) + "(f,g) <= scat_" + m_str(m) + "(domain)");
      } else {
        x.record("lemma-3.5", inst, check_status::skip, "codomain disconnected");
      }
    }

    if (x.enabled("thm-3.13")) {
      const bool small_enough = dom->all_simplices().size() <= x.opt.sd_simplex_cap &&
                                cod->all_simplices().size() <= x.opt.sd_simplex_cap;
      if (small_enough) {
        auto sf = sd_map(p.f);
        auto sg = sd_map(p.g);
        if (x.cover_ok(sf.domain()) && sf.codomain().vertex_count() <= 64 &&
            x.engine_ok(sf.domain())) {
          for (auto m : grid)
            x.check_le("thm-3.13", inst, x.sd_val(sf, sg, m), x.sd_val(p.f, p.g, m),
                       "sd_" + m_str(m) + "(sd f, sd g) <= sd_" + m_str(m) + "(f,g)");
        } else {
          x.record("thm-3.13", inst, check_status::skip, "subdivision beyond caps");
        }
      } else {
        x.record("thm-3.13", inst, check_status::skip, "simplex count beyond cap");
      }
    }

    if (x.enabled("remark-5.6")) {
      if (x.cover_ok(*cod)) {
        for (auto m : grid)
          x.check_le("remark-5.6", inst, x.secat_val(p.f, m, true), x.secat_val(p.f, m, false),
                     "hsecat_" + m_str(m) + "(f) <= secat_" + m_str(m) + "(f)");
      } else {
        x.record("remark-5.6", inst, check_status::skip, "codomain facet count beyond cap");
      }
    }
  }
}

void run_product_checks(ctx& x) {
  if (!x.enabled("thm-4.3")) return;
  const auto grid = sorted_grid(x.opt);
  std::mt19937_64 rng(x.c.seed ^ 0x94d049bb133111ebull);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  if (x.c.pairs.empty()) return;
  const std::size_t combos = std::min<std::size_t>(8, x.c.pairs.size());
  for (std::size_t t = 0; t < combos; ++t) {
    const map_pair& p = x.c.pairs[pick(x.c.pairs.size())];
    const map_pair& q = x.c.pairs[pick(x.c.pairs.size())];
    std::string inst = p.tag + " x " + q.tag;
    const std::size_t prod_facets = p.f.domain().facets().size() * q.f.domain().facets().size();
    const std::size_t prod_verts = p.f.domain().vertex_count() * q.f.domain().vertex_count();
    const std::size_t cod_verts = p.f.codomain().vertex_count() * q.f.codomain().vertex_count();
    if (prod_facets > x.opt.cover_facet_cap || prod_verts > x.opt.engine_vertex_cap ||
        cod_verts > 64) {
      x.record("thm-4.3", inst, check_status::skip, "product beyond caps");
      continue;
    }
    auto ff = product_map(p.f, q.f);
    auto gg = product_map(p.g, q.g);
    for (auto m : grid)
      x.check_le("thm-4.3", inst, x.sd_val(ff, gg, m),
                 product_bound(x.sd_val(p.f, p.g, m), x.sd_val(q.f, q.g, m)),
                 "sd_" + m_str(m) + "(fxf',gxg') <= (sd+1)(sd'+1)-1");
  }
}

void run_complex_checks(ctx& x) {
  const auto grid = sorted_grid(x.opt);
  for (const auto& item : x.c.complexes) {
    const complex_ptr& k = item.cx;
    const std::string inst = item.expr;
    const bool connected = k->is_connected();
    const std::size_t sq_verts = k->vertex_count() * k->vertex_count();
    const std::size_t sq_facets = k->facets().size() * k->facets().size();

    if (x.enabled("remark-3.4")) {
      for (auto m : grid)
        if (m)
          x.check_le("remark-3.4", inst, x.scat_val(k, m), x.scat_val(k, std::nullopt),
                     "scat_" + m_str(m) + " <= scat");
    }

    if (x.enabled("thm-3.6")) {
      if (connected && sq_verts <= 64 && x.cover_ok(*k)) {
        vertex_id v0 = k->vertices().front();
        auto i1 = axis_inclusion_map(k, v0, 1);
        auto i2 = axis_inclusion_map(k, v0, 2);
        for (auto m : grid)
          x.check_eq("thm-3.6", inst, x.sd_val(i1, i2, m), x.scat_val(k, m),
                     "sd_" + m_str(m) + "(i1,i2) == scat_" + m_str(m));
      } else {
        x.record("thm-3.6", inst, check_status::skip,
                 connected ? "square beyond caps" : "disconnected");
      }
    }

    if (x.enabled("thm-3.7")) {
      if (connected && x.cover_ok(*k)) {
        for (auto m : grid) {
          auto r = scat_m(k, m, x.opt.budget, {}, true);
          extended_value direct = r.routes.back().second;
          extended_value via_sd =
              x.opt.inject_fault == "off-by-one-scat" && r.value.is_finite()
                  ? extended_value::of(r.value.n() + 1)
                  : r.value;
          x.check_eq("thm-3.7", inst, via_sd, direct,
                     "sd_" + m_str(m) + "(id,const) == categorical cover value");
        }
      } else {
        x.record("thm-3.7", inst, check_status::skip,
                 connected ? "facet count beyond cap" : "disconnected");
      }
    }

    if (x.enabled("thm-6.2")) {
      if (sq_verts <= x.opt.routeb_vertex_cap && sq_facets <= x.opt.cover_facet_cap) {
        for (auto m : grid) {
          auto r = tc_m(k, m, x.opt.budget, true);
          x.check_eq("thm-6.2", inst, r.routes[0].second, r.routes[1].second,
                     "tc_" + m_str(m) + " sd route == farber route");
        }
      } else {
        x.record("thm-6.2", inst, check_status::skip, "square beyond farber caps");
      }
    }

    if (x.enabled("cor-6.3")) {
      if (sq_verts <= 64 && sq_facets <= x.opt.cover_facet_cap) {
        for (auto m : grid)
          if (m)
            x.check_le("cor-6.3", inst, x.tc_val(k, m), x.tc_val(k, std::nullopt),
                       "tc_" + m_str(m) + " <= tc");
      } else {
        x.record("cor-6.3", inst, check_status::skip, "square beyond caps");
      }
    }

    if (x.enabled("thm-6.5")) {
      if (connected && sq_verts <= 64 && sq_facets <= x.opt.cover_facet_cap) {
        complex_ptr sq = share(categorical_product(*k, *k));
        for (auto m : grid) {
          x.check_le("thm-6.5", inst, x.scat_val(k, m), x.tc_val(k, m),
                     "scat_" + m_str(m) + " <= tc_" + m_str(m));
          x.check_le("thm-6.5", inst, x.tc_val(k, m), x.scat_val(sq, m),
                     "tc_" + m_str(m) + " <= scat_" + m_str(m) + "(K^2)");
        }
      } else {
        x.record("thm-6.5", inst, check_status::skip,
                 connected ? "square beyond caps" : "disconnected");
      }
    }

    if (x.enabled("thm-6.6")) {
      if (sq_verts <= x.opt.routeb_vertex_cap && sq_facets <= x.opt.cover_facet_cap) {
        auto diag = diagonal_map(k);
        for (auto m : grid)
          x.check_eq("thm-6.6", inst, x.tc_val(k, m), x.secat_val(diag, m, true),
                     "tc_" + m_str(m) + " == hsecat_" + m_str(m) + "(diagonal)");
      } else {
        x.record("thm-6.6", inst, check_status::skip, "square beyond farber caps");
      }
    }
  }
}

}  // namespace

verify_result run_verify(const corpus& c, const verify_options& opt) {
  ctx x{c, opt, {}, {}};
  run_pair_checks(x);
  run_product_checks(x);
  run_complex_checks(x);
  return x.res;
}

}  // namespace contig
