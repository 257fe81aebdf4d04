#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "contig/contiguity.hpp"

namespace contig {

struct corpus_item {
  std::string expr;  // generator expression or file name
  complex_ptr cx;
};

struct map_pair {
  simplicial_map f, g;  // same domain and codomain
  std::string tag;
};

struct corpus {
  std::vector<corpus_item> complexes;
  std::vector<map_pair> pairs;
  std::uint64_t seed = 0;
};

// Seeded built-in corpus: point, an edge, a 2-simplex, the hollow triangle,
// the 4-cycle, a cone, and a small seeded random complex, plus sampled map
// pairs between the small ones.  Identical seeds give identical corpora.
corpus builtin_corpus(std::uint64_t seed);

// Complexes loaded from every *.cx file in the directory (sorted by file
// name), with map pairs derived the same way as for the built-in corpus.
corpus corpus_from_dir(const std::filesystem::path& dir, std::uint64_t seed);

}  // namespace contig
