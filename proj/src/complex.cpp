#include "contig/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace contig {

simplex::simplex(std::vector<vertex_id> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) throw malformed_input("simplex: vertex set must be nonempty");
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw malformed_input("simplex: duplicate vertex");
  for (vertex_id v : verts_)
    if (v < 0) throw malformed_input("simplex: vertex ids must be non-negative");
}

simplex simplex::from_sorted(std::vector<vertex_id> vertices) {
  simplex s;
  s.verts_ = std::move(vertices);
  return s;
}

bool simplex::contains(vertex_id v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool simplex::subset_of(const simplex& other) const {
  return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
}

simplex simplex::united(const simplex& other) const {
  std::vector<vertex_id> out;
  out.reserve(verts_.size() + other.verts_.size());
  std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

namespace {

// Keep only maximal sets: sort by size descending, keep those not contained
// in an already-kept one.
std::vector<simplex> absorb(std::vector<simplex> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const simplex& a, const simplex& b) { return a.size() > b.size(); });
  std::vector<simplex> kept;
  for (auto& c : candidates) {
    bool dominated = false;
    for (const auto& k : kept)
      if (c.subset_of(k)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

complex complex::build(std::string name, std::vector<simplex> facets,
                       std::vector<vertex_id> isolated,
                       std::vector<std::pair<vertex_id, std::string>> labels) {
  for (vertex_id v : isolated) {
    if (v < 0) throw malformed_input("complex: vertex ids must be non-negative");
    facets.push_back(simplex::from_sorted({v}));
  }
  if (facets.empty()) throw malformed_input("complex: empty complexes are not supported");

  complex k;
  k.name_ = std::move(name);
  k.facets_ = absorb(std::move(facets));

  std::set<vertex_id> vs;
  for (const auto& f : k.facets_) vs.insert(f.vertices().begin(), f.vertices().end());
  k.vertices_.assign(vs.begin(), vs.end());

  std::map<vertex_id, std::string> lab;
  for (auto& [v, s] : labels) {
    if (!vs.count(v)) throw malformed_input("complex: label for unknown vertex");
    lab[v] = std::move(s);
  }
  std::set<std::string> seen;
  k.labels_.reserve(k.vertices_.size());
  for (vertex_id v : k.vertices_) {
    auto it = lab.find(v);
    std::string s = it != lab.end() ? it->second : std::to_string(v);
    if (!seen.insert(s).second) throw malformed_input("complex: duplicate vertex label '" + s + "'");
    k.labels_.push_back(std::move(s));
  }
  return k;
}

int complex::dim() const {
  int d = 0;
  for (const auto& f : facets_) d = std::max(d, f.dim());
  return d;
}

int complex::vertex_index(vertex_id v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

const std::string& complex::label(vertex_id v) const {
  int i = vertex_index(v);
  if (i < 0) throw malformed_input("complex: no such vertex");
  return labels_[static_cast<std::size_t>(i)];
}

std::optional<vertex_id> complex::vertex_by_label(std::string_view lab) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == lab) return vertices_[i];
  return std::nullopt;
}

bool complex::has_simplex(const simplex& s) const {
  for (const auto& f : facets_)
    if (s.subset_of(f)) return true;
  return false;
}

std::vector<vertex_id> complex::isolated_vertices() const {
  std::vector<vertex_id> out;
  for (const auto& f : facets_)
    if (f.size() == 1) out.push_back(f.vertices()[0]);
  return out;
}

std::vector<simplex> complex::all_simplices() const {
  std::set<simplex> acc;
  for (const auto& f : facets_) {
    const auto& vs = f.vertices();
    const std::size_t n = vs.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<vertex_id> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) sub.push_back(vs[i]);
      acc.insert(simplex::from_sorted(std::move(sub)));
    }
  }
  return {acc.begin(), acc.end()};
}

std::vector<std::size_t> complex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dim()) + 1, 0);
  for (const auto& s : all_simplices()) ++f[static_cast<std::size_t>(s.dim())];
  return f;
}

bool complex::is_connected() const {
  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : facets_) {
    int r = find(vertex_index(f.vertices()[0]));
    for (vertex_id v : f.vertices()) parent[find(vertex_index(v))] = r;
  }
  int r0 = find(0);
  for (std::size_t i = 1; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) != r0) return false;
  return true;
}

bool complex::same_structure(const complex& other) const {
  return vertices_ == other.vertices_ && facets_ == other.facets_;
}

complex subcomplex_ref::materialize() const {
  if (!parent) throw malformed_input("subcomplex: missing parent");
  std::vector<simplex> fs;
  for (std::size_t i : facet_indices) {
    if (i >= parent->facets().size()) throw malformed_input("subcomplex: facet index out of range");
    fs.push_back(parent->facets()[i]);
  }
  std::vector<vertex_id> extra;
  for (vertex_id v : extra_vertices) {
    if (!parent->has_vertex(v)) throw malformed_input("subcomplex: extra vertex not in parent");
    extra.push_back(v);
  }
  if (fs.empty() && extra.empty()) throw malformed_input("subcomplex: empty selection");

  std::ostringstream nm;
  nm << parent->name() << "[";
  for (std::size_t j = 0; j < facet_indices.size(); ++j) nm << (j ? "," : "") << facet_indices[j];
  if (!extra.empty()) {
    nm << ";";
    for (std::size_t j = 0; j < extra.size(); ++j)
      nm << (j ? "," : "") << parent->label(extra[j]);
  }
  nm << "]";

  std::vector<std::pair<vertex_id, std::string>> labels;
  std::set<vertex_id> vs;
  for (const auto& f : fs) vs.insert(f.vertices().begin(), f.vertices().end());
  vs.insert(extra.begin(), extra.end());
  for (vertex_id v : vs) labels.emplace_back(v, parent->label(v));

  return complex::build(nm.str(), std::move(fs), std::move(extra), std::move(labels));
}

bool subcomplex_ref::whole() const {
  return parent && facet_indices.size() == parent->facets().size();
}

complex skeleton(const complex& k, int m) {
  if (m < 0) throw malformed_input("skeleton: dimension must be >= 0");
  std::string nm = "skel" + std::to_string(m) + "(" + k.name() + ")";
  std::vector<std::pair<vertex_id, std::string>> labels;
  for (vertex_id v : k.vertices()) labels.emplace_back(v, k.label(v));
  if (m >= k.dim()) {
    return complex::build(std::move(nm), k.facets(), {}, std::move(labels));
  }
  std::vector<simplex> candidates;
  const std::size_t want = static_cast<std::size_t>(m) + 1;
  for (const auto& f : k.facets()) {
    if (f.size() <= want) {
      candidates.push_back(f);
      continue;
    }
    // all (m+1)-subsets of the facet
    const auto& vs = f.vertices();
    std::vector<std::size_t> idx(want);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<vertex_id> sub;
      sub.reserve(want);
      for (std::size_t i : idx) sub.push_back(vs[i]);
      candidates.push_back(simplex::from_sorted(std::move(sub)));
      // next combination
      std::size_t j = want;
      while (j > 0 && idx[j - 1] == vs.size() - (want - (j - 1))) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t t = j; t < want; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return complex::build(std::move(nm), std::move(candidates), {}, std::move(labels));
}

complex barycentric_subdivision(const complex& k) {
  const std::vector<simplex> simplices = k.all_simplices();
  std::map<simplex, vertex_id> id_of;
  std::vector<std::pair<vertex_id, std::string>> labels;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    id_of[simplices[i]] = static_cast<vertex_id>(i);
    std::string lab = "{";
    const auto& vs = simplices[i].vertices();
    for (std::size_t j = 0; j < vs.size(); ++j) lab += (j ? "," : "") + k.label(vs[j]);
    lab += "}";
    labels.emplace_back(static_cast<vertex_id>(i), std::move(lab));
  }

  // maximal chains: one per permutation of each facet's vertices, formed by
  // the permutation's prefixes
  std::vector<simplex> facets;
  for (const auto& f : k.facets()) {
    std::vector<vertex_id> perm = f.vertices();
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<vertex_id> chain;
      std::vector<vertex_id> prefix;
      for (vertex_id v : perm) {
        prefix.push_back(v);
        std::vector<vertex_id> sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(id_of.at(simplex::from_sorted(std::move(sorted))));
      }
      facets.emplace_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return complex::build("sd(" + k.name() + ")", std::move(facets), {}, std::move(labels));
}

vertex_id product_vertex(const complex& k, const complex& l, vertex_id v, vertex_id w) {
  int iv = k.vertex_index(v), iw = l.vertex_index(w);
  if (iv < 0 || iw < 0) throw malformed_input("product_vertex: vertex not in factor");
  return static_cast<vertex_id>(iv) * static_cast<vertex_id>(l.vertex_count()) +
         static_cast<vertex_id>(iw);
}

std::pair<vertex_id, vertex_id> product_vertex_factors(const complex& k, const complex& l,
                                                       vertex_id p) {
  const auto nl = static_cast<vertex_id>(l.vertex_count());
  vertex_id iv = p / nl, iw = p % nl;
  if (p < 0 || iv >= static_cast<vertex_id>(k.vertex_count()))
    throw malformed_input("product_vertex_factors: id out of range");
  return {k.vertices()[static_cast<std::size_t>(iv)], l.vertices()[static_cast<std::size_t>(iw)]};
}

complex categorical_product(const complex& k, const complex& l) {
  std::vector<std::pair<vertex_id, std::string>> labels;
  for (vertex_id v : k.vertices())
    for (vertex_id w : l.vertices())
      labels.emplace_back(product_vertex(k, l, v, w), "(" + k.label(v) + "," + l.label(w) + ")");

  // facets of the product are exactly the products of facets; distinct
  // factor pairs give incomparable vertex sets, so no absorption happens
  std::vector<simplex> facets;
  for (const auto& f : k.facets())
    for (const auto& g : l.facets()) {
      std::vector<vertex_id> vs;
      vs.reserve(f.size() * g.size());
      for (vertex_id v : f.vertices())
        for (vertex_id w : g.vertices()) vs.push_back(product_vertex(k, l, v, w));
      facets.emplace_back(std::move(vs));
    }
  return complex::build(k.name() + "*" + l.name(), std::move(facets), {}, std::move(labels));
}

complex cone(const complex& k) {
  vertex_id apex = k.vertices().back() + 1;
  std::string apex_label = "apex";
  if (k.vertex_by_label(apex_label)) apex_label += "_" + std::to_string(apex);

  std::vector<std::pair<vertex_id, std::string>> labels;
  for (vertex_id v : k.vertices()) labels.emplace_back(v, k.label(v));
  labels.emplace_back(apex, apex_label);

  std::vector<simplex> facets;
  for (const auto& f : k.facets()) {
    std::vector<vertex_id> vs = f.vertices();
    vs.push_back(apex);
    facets.emplace_back(std::move(vs));
  }
  return complex::build("cone(" + k.name() + ")", std::move(facets), {}, std::move(labels));
}

complex point_complex() {
  return complex::build("point", {simplex::from_sorted({0})});
}

complex simplex_complex(int n) {
  if (n < 0) throw malformed_input("simplex(n): n must be >= 0");
  std::vector<vertex_id> vs(static_cast<std::size_t>(n) + 1);
  std::iota(vs.begin(), vs.end(), 0);
  return complex::build("simplex(" + std::to_string(n) + ")", {simplex::from_sorted(std::move(vs))});
}

complex boundary_complex(int n) {
  if (n < 1) throw malformed_input("boundary(n): n must be >= 1");
  std::vector<simplex> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<vertex_id> vs;
    for (int v = 0; v <= n; ++v)
      if (v != skip) vs.push_back(v);
    facets.push_back(simplex::from_sorted(std::move(vs)));
  }
  return complex::build("boundary(" + std::to_string(n) + ")", std::move(facets));
}

complex cycle_complex(int n) {
  if (n < 3) throw malformed_input("cycle(n): n must be >= 3");
  std::vector<simplex> facets;
  for (int i = 0; i < n; ++i)
    facets.push_back(simplex({i, (i + 1) % n}));
  return complex::build("cycle(" + std::to_string(n) + ")", std::move(facets));
}

complex random_complex(int n, std::uint64_t seed, double density) {
  if (n < 1) throw malformed_input("random(n,seed,density): n must be >= 1");
  if (density < 0.0 || density > 1.0)
    throw malformed_input("random(n,seed,density): density must be in [0,1]");
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

  std::vector<simplex> facets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(density)) facets.push_back(simplex::from_sorted({i, j}));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int t = j + 1; t < n; ++t)
        if (coin(density * density)) facets.push_back(simplex::from_sorted({i, j, t}));

  std::vector<vertex_id> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::ostringstream nm;
  nm << "random(" << n << "," << seed << "," << density << ")";
  return complex::build(nm.str(), std::move(facets), std::move(all));
}

namespace {

struct generator_parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw malformed_input("generator: expected a name at '" + std::string(s.substr(start)) + "'");
    return std::string(s.substr(start, pos - start));
  }
  double number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
                              s[pos] == '-' || s[pos] == '+' || s[pos] == 'e'))
      ++pos;
    if (start == pos) throw malformed_input("generator: expected a number");
    return std::strtod(std::string(s.substr(start, pos - start)).c_str(), nullptr);
  }

  complex expr() {
    std::string name = ident();
    if (name == "point") return point_complex();
    if (!eat('(')) throw malformed_input("generator: expected '(' after " + name);
    if (name == "cone") {
      complex inner = expr();
      if (!eat(')')) throw malformed_input("generator: expected ')'");
      return cone(inner);
    }
    if (name == "simplex" || name == "boundary" || name == "cycle") {
      int n = static_cast<int>(number());
      if (!eat(')')) throw malformed_input("generator: expected ')'");
      if (name == "simplex") return simplex_complex(n);
      if (name == "boundary") return boundary_complex(n);
      return cycle_complex(n);
    }
    if (name == "random") {
      int n = static_cast<int>(number());
      if (!eat(',')) throw malformed_input("generator: random needs (n,seed,density)");
      auto seed = static_cast<std::uint64_t>(number());
      if (!eat(',')) throw malformed_input("generator: random needs (n,seed,density)");
      double density = number();
      if (!eat(')')) throw malformed_input("generator: expected ')'");
      return random_complex(n, seed, density);
    }
    throw malformed_input("generator: unknown generator '" + name + "'");
  }
};

}  // namespace

complex parse_generator(const std::string& expr) {
  generator_parser p{expr};
  complex k = p.expr();
  p.skip_ws();
  if (p.pos != expr.size()) throw malformed_input("generator: trailing input in '" + expr + "'");
  return k;
}

}  // namespace contig
