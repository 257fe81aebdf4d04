#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contig/errors.hpp"

namespace contig {

using vertex_id = std::int32_t;

// Nonempty, strictly increasing set of vertex ids.
class simplex {
 public:
  explicit simplex(std::vector<vertex_id> vertices);
  static simplex from_sorted(std::vector<vertex_id> vertices);

  const std::vector<vertex_id>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  bool contains(vertex_id v) const;
  bool subset_of(const simplex& other) const;
  simplex united(const simplex& other) const;

  friend auto operator<=>(const simplex&, const simplex&) = default;

 private:
  simplex() = default;
  std::vector<vertex_id> verts_;
};

class complex;
using complex_ptr = std::shared_ptr<const complex>;

// Finite abstract simplicial complex stored by its facets (maximal
// simplices).  Facets form an antichain whose union is the vertex set;
// isolated vertices are kept as singleton facets.  A simplex belongs to the
// complex iff it is a subset of some facet.  Immutable after construction.
class complex {
 public:
  static complex build(std::string name, std::vector<simplex> facets,
                       std::vector<vertex_id> isolated = {},
                       std::vector<std::pair<vertex_id, std::string>> labels = {});

  const std::string& name() const { return name_; }
  const std::vector<vertex_id>& vertices() const { return vertices_; }
  const std::vector<simplex>& facets() const { return facets_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  int dim() const;

  int vertex_index(vertex_id v) const;  // -1 when absent
  bool has_vertex(vertex_id v) const { return vertex_index(v) >= 0; }
  const std::string& label(vertex_id v) const;
  std::optional<vertex_id> vertex_by_label(std::string_view lab) const;

  bool has_simplex(const simplex& s) const;
  std::vector<vertex_id> isolated_vertices() const;  // vertices whose only facet is {v}
  std::vector<simplex> all_simplices() const;        // canonical (lexicographic) order
  std::vector<std::size_t> f_vector() const;         // simplex counts by dimension
  bool is_connected() const;

  // structural equality: vertex ids and facets; names and labels ignored
  bool same_structure(const complex& other) const;
  friend bool operator==(const complex& a, const complex& b) { return a.same_structure(b); }

 private:
  complex() = default;
  std::string name_;
  std::vector<vertex_id> vertices_;   // sorted
  std::vector<std::string> labels_;   // parallel to vertices_
  std::vector<simplex> facets_;       // antichain, sorted
};

inline complex_ptr share(complex c) { return std::make_shared<const complex>(std::move(c)); }

// The subcomplex generated by a subset of the parent's facets plus extra
// vertices (which stay in the piece as isolated vertices).
struct subcomplex_ref {
  complex_ptr parent;
  std::vector<std::size_t> facet_indices;  // sorted, unique
  std::vector<vertex_id> extra_vertices;   // sorted, subset of parent's vertices

  complex materialize() const;
  bool whole() const;
};

complex skeleton(const complex& k, int m);
complex barycentric_subdivision(const complex& k);
complex categorical_product(const complex& k, const complex& l);
complex cone(const complex& k);

// Vertex bookkeeping for categorical products: the pair (v, w) gets id
// index_K(v) * |V_L| + index_L(w).
vertex_id product_vertex(const complex& k, const complex& l, vertex_id v, vertex_id w);
std::pair<vertex_id, vertex_id> product_vertex_factors(const complex& k, const complex& l,
                                                       vertex_id p);

// Generators.  All are deterministic; random_complex is deterministic in the
// seed (raw mt19937_64 draws, no library distributions).
complex point_complex();
complex simplex_complex(int n);
complex boundary_complex(int n);
complex cycle_complex(int n);
complex random_complex(int n, std::uint64_t seed, double density);
complex parse_generator(const std::string& expr);  // "cone(cycle(3))", "simplex(2)", ...

}  // namespace contig
