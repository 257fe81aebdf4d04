#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contig/complex.hpp"

namespace contig {

// Total vertex assignment between two complexes.  Simpliciality is not
// enforced at construction (candidate maps read from files can be inspected
// first); validate() checks it.  Everything the library derives from valid
// maps is valid by construction.
class simplicial_map {
 public:
  static simplicial_map build(std::string name, complex_ptr domain, complex_ptr codomain,
                              std::vector<vertex_id> assignment_by_index);
  static simplicial_map from_pairs(std::string name, complex_ptr domain, complex_ptr codomain,
                                   const std::vector<std::pair<vertex_id, vertex_id>>& sends);

  const std::string& name() const { return name_; }
  const complex& domain() const { return *domain_; }
  const complex& codomain() const { return *codomain_; }
  const complex_ptr& domain_ptr() const { return domain_; }
  const complex_ptr& codomain_ptr() const { return codomain_; }
  const std::vector<vertex_id>& assignment() const { return assign_; }

  vertex_id operator()(vertex_id v) const;
  simplex image(const simplex& s) const;

  // value identity: domain structure, codomain structure, assignment
  friend bool operator==(const simplicial_map& a, const simplicial_map& b);

 private:
  simplicial_map() = default;
  std::string name_;
  complex_ptr domain_, codomain_;
  std::vector<vertex_id> assign_;  // by domain vertex index
};

bool validate(const simplicial_map& f);

simplicial_map compose(const simplicial_map& g, const simplicial_map& f);  // g after f
simplicial_map restrict_map(const simplicial_map& f, const subcomplex_ref& sub);
simplicial_map restrict_map(const simplicial_map& f, complex_ptr sub);
simplicial_map sd_map(const simplicial_map& f);
simplicial_map product_map(const simplicial_map& f, const simplicial_map& g);

// f and g are contiguous iff for every facet s of their common domain the
// union f(s) ∪ g(s) is a simplex of the codomain (faces follow by downward
// closure).
bool is_contiguous(const simplicial_map& f, const simplicial_map& g);

simplicial_map identity_map(complex_ptr k);
simplicial_map constant_map(complex_ptr domain, complex_ptr codomain, vertex_id v0);
simplicial_map inclusion_map(complex_ptr sub, complex_ptr whole);
simplicial_map diagonal_map(complex_ptr k);                                 // K -> K×K
simplicial_map projection_map(complex_ptr k, complex_ptr l, int which);     // K×L -> factor
simplicial_map axis_inclusion_map(complex_ptr k, vertex_id v0, int which);  // K -> K×K

// name in {identity, constant, diagonal, pr1, pr2, i1, i2}; constant/i1/i2
// require the base vertex.
simplicial_map canonical_map(const std::string& name, complex_ptr k,
                             std::optional<vertex_id> base = {});

}  // namespace contig
