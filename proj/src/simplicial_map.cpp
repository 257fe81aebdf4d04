#include "contig/simplicial_map.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace contig {

simplicial_map simplicial_map::build(std::string name, complex_ptr domain, complex_ptr codomain,
                                     std::vector<vertex_id> assignment_by_index) {
  if (!domain || !codomain) throw malformed_input("map: missing domain or codomain");
  if (assignment_by_index.size() != domain->vertex_count())
    throw malformed_input("map '" + name + "': assignment must cover every domain vertex");
  for (vertex_id w : assignment_by_index)
    if (!codomain->has_vertex(w))
      throw malformed_input("map '" + name + "': image vertex not in codomain");
  simplicial_map f;
  f.name_ = std::move(name);
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.assign_ = std::move(assignment_by_index);
  return f;
}

simplicial_map simplicial_map::from_pairs(
    std::string name, complex_ptr domain, complex_ptr codomain,
    const std::vector<std::pair<vertex_id, vertex_id>>& sends) {
  if (!domain) throw malformed_input("map: missing domain");
  std::vector<vertex_id> assign(domain->vertex_count(), -1);
  for (auto [v, w] : sends) {
    int i = domain->vertex_index(v);
    if (i < 0) throw malformed_input("map '" + name + "': send from unknown vertex");
    if (assign[static_cast<std::size_t>(i)] != -1)
      throw malformed_input("map '" + name + "': vertex sent twice");
    assign[static_cast<std::size_t>(i)] = w;
  }
  for (vertex_id w : assign)
    if (w == -1) throw malformed_input("map '" + name + "': assignment must cover every domain vertex");
  return build(std::move(name), std::move(domain), std::move(codomain), std::move(assign));
}

vertex_id simplicial_map::operator()(vertex_id v) const {
  int i = domain_->vertex_index(v);
  if (i < 0) throw malformed_input("map: vertex not in domain");
  return assign_[static_cast<std::size_t>(i)];
}

simplex simplicial_map::image(const simplex& s) const {
  std::set<vertex_id> out;
  for (vertex_id v : s.vertices()) out.insert((*this)(v));
  return simplex::from_sorted({out.begin(), out.end()});
}

bool operator==(const simplicial_map& a, const simplicial_map& b) {
  return a.assign_ == b.assign_ && *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_;
}

bool validate(const simplicial_map& f) {
  for (const auto& facet : f.domain().facets())
    if (!f.codomain().has_simplex(f.image(facet))) return false;
  return true;
}

simplicial_map compose(const simplicial_map& g, const simplicial_map& f) {
  if (!(f.codomain() == g.domain()))
    throw malformed_input("compose: codomain of inner map differs from domain of outer map");
  std::vector<vertex_id> assign;
  assign.reserve(f.assignment().size());
  for (vertex_id w : f.assignment()) assign.push_back(g(w));
  return simplicial_map::build("(" + g.name() + "o" + f.name() + ")", f.domain_ptr(),
                               g.codomain_ptr(), std::move(assign));
}

simplicial_map restrict_map(const simplicial_map& f, complex_ptr sub) {
  if (!sub) throw malformed_input("restrict: missing subcomplex");
  for (vertex_id v : sub->vertices())
    if (!f.domain().has_vertex(v))
      throw malformed_input("restrict: subcomplex vertex not in the map's domain");
  for (const auto& facet : sub->facets())
    if (!f.domain().has_simplex(facet))
      throw malformed_input("restrict: subcomplex is not contained in the map's domain");
  std::vector<vertex_id> assign;
  assign.reserve(sub->vertex_count());
  for (vertex_id v : sub->vertices()) assign.push_back(f(v));
  std::string nm = f.name() + "|" + sub->name();
  return simplicial_map::build(std::move(nm), std::move(sub), f.codomain_ptr(),
                               std::move(assign));
}

simplicial_map restrict_map(const simplicial_map& f, const subcomplex_ref& sub) {
  if (!sub.parent || !(*sub.parent == f.domain()))
    throw malformed_input("restrict: subcomplex reference does not point at the map's domain");
  return restrict_map(f, share(sub.materialize()));
}

simplicial_map sd_map(const simplicial_map& f) {
  complex_ptr sdom = share(barycentric_subdivision(f.domain()));
  complex_ptr scod = share(barycentric_subdivision(f.codomain()));
  const auto dom_simplices = f.domain().all_simplices();
  const auto cod_simplices = f.codomain().all_simplices();
  std::map<simplex, vertex_id> cod_id;
  for (std::size_t i = 0; i < cod_simplices.size(); ++i)
    cod_id[cod_simplices[i]] = static_cast<vertex_id>(i);

  std::vector<vertex_id> assign;
  assign.reserve(dom_simplices.size());
  for (const auto& s : dom_simplices) assign.push_back(cod_id.at(f.image(s)));
  return simplicial_map::build("sd(" + f.name() + ")", std::move(sdom), std::move(scod),
                               std::move(assign));
}

simplicial_map product_map(const simplicial_map& f, const simplicial_map& g) {
  complex_ptr dom = share(categorical_product(f.domain(), g.domain()));
  complex_ptr cod = share(categorical_product(f.codomain(), g.codomain()));
  std::vector<vertex_id> assign;
  assign.reserve(dom->vertex_count());
  for (vertex_id p : dom->vertices()) {
    auto [v, w] = product_vertex_factors(f.domain(), g.domain(), p);
    assign.push_back(product_vertex(f.codomain(), g.codomain(), f(v), g(w)));
  }
  return simplicial_map::build("(" + f.name() + "x" + g.name() + ")", std::move(dom),
                               std::move(cod), std::move(assign));
}

bool is_contiguous(const simplicial_map& f, const simplicial_map& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw malformed_input("is_contiguous: maps must share domain and codomain");
  for (const auto& facet : f.domain().facets())
    if (!f.codomain().has_simplex(f.image(facet).united(g.image(facet)))) return false;
  return true;
}

simplicial_map identity_map(complex_ptr k) {
  std::vector<vertex_id> assign(k->vertices().begin(), k->vertices().end());
  std::string nm = "id(" + k->name() + ")";
  complex_ptr cod = k;
  return simplicial_map::build(std::move(nm), std::move(k), std::move(cod), std::move(assign));
}

simplicial_map constant_map(complex_ptr domain, complex_ptr codomain, vertex_id v0) {
  if (!codomain->has_vertex(v0)) throw malformed_input("constant: base vertex not in codomain");
  std::vector<vertex_id> assign(domain->vertex_count(), v0);
  std::string nm = "const(" + codomain->label(v0) + ")";
  return simplicial_map::build(std::move(nm), std::move(domain), std::move(codomain),
                               std::move(assign));
}

simplicial_map inclusion_map(complex_ptr sub, complex_ptr whole) {
  for (const auto& facet : sub->facets())
    if (!whole->has_simplex(facet))
      throw malformed_input("inclusion: not a subcomplex");
  std::vector<vertex_id> assign(sub->vertices().begin(), sub->vertices().end());
  std::string nm = "incl(" + sub->name() + ")";
  return simplicial_map::build(std::move(nm), std::move(sub), std::move(whole), std::move(assign));
}

simplicial_map diagonal_map(complex_ptr k) {
  complex_ptr sq = share(categorical_product(*k, *k));
  std::vector<vertex_id> assign;
  assign.reserve(k->vertex_count());
  for (vertex_id v : k->vertices()) assign.push_back(product_vertex(*k, *k, v, v));
  std::string nm = "diag(" + k->name() + ")";
  return simplicial_map::build(std::move(nm), std::move(k), std::move(sq), std::move(assign));
}

simplicial_map projection_map(complex_ptr k, complex_ptr l, int which) {
  if (which != 1 && which != 2) throw malformed_input("projection: which must be 1 or 2");
  complex_ptr prod = share(categorical_product(*k, *l));
  std::vector<vertex_id> assign;
  assign.reserve(prod->vertex_count());
  for (vertex_id p : prod->vertices()) {
    auto [v, w] = product_vertex_factors(*k, *l, p);
    assign.push_back(which == 1 ? v : w);
  }
  std::string nm = "pr" + std::to_string(which) + "(" + prod->name() + ")";
  return simplicial_map::build(std::move(nm), std::move(prod), which == 1 ? k : l,
                               std::move(assign));
}

simplicial_map axis_inclusion_map(complex_ptr k, vertex_id v0, int which) {
  if (which != 1 && which != 2) throw malformed_input("axis inclusion: which must be 1 or 2");
  if (!k->has_vertex(v0)) throw malformed_input("axis inclusion: base vertex not in complex");
  complex_ptr sq = share(categorical_product(*k, *k));
  std::vector<vertex_id> assign;
  assign.reserve(k->vertex_count());
  for (vertex_id v : k->vertices())
    assign.push_back(which == 1 ? product_vertex(*k, *k, v, v0) : product_vertex(*k, *k, v0, v));
  std::string nm = "i" + std::to_string(which) + "(" + k->name() + ")";
  return simplicial_map::build(std::move(nm), std::move(k), std::move(sq), std::move(assign));
}

simplicial_map canonical_map(const std::string& name, complex_ptr k,
                             std::optional<vertex_id> base) {
  auto need_base = [&]() {
    if (!base) throw malformed_input("canonical map '" + name + "' needs a base vertex");
    return *base;
  };
  if (name == "identity") return identity_map(std::move(k));
  if (name == "constant") {
    vertex_id v0 = need_base();
    complex_ptr cod = k;
    return constant_map(std::move(k), std::move(cod), v0);
  }
  if (name == "diagonal") return diagonal_map(std::move(k));
  if (name == "pr1") {
    complex_ptr l = k;
    return projection_map(std::move(k), std::move(l), 1);
  }
  if (name == "pr2") {
    complex_ptr l = k;
    return projection_map(std::move(k), std::move(l), 2);
  }
  if (name == "i1") return axis_inclusion_map(std::move(k), need_base(), 1);
  if (name == "i2") return axis_inclusion_map(std::move(k), need_base(), 2);
  throw malformed_input("canonical map: unknown name '" + name + "'");
}

}  // namespace contig
