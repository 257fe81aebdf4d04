#include "contig/corpus.hpp"

#include <algorithm>
#include <random>

#include "contig/io.hpp"

namespace contig {

namespace {

void derive_pairs(corpus& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5bf03635e22ae8abull);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  for (const auto& ki : c.complexes) {
    for (const auto& li : c.complexes) {
      if (ki.cx->vertex_count() > 4 || li.cx->vertex_count() > 5) continue;
      std::vector<simplicial_map> homs;
      try {
        homs = enumerate_hom(ki.cx, li.cx, search_budget{4096, {}, 0});
      } catch (const resource_exhausted&) {
        continue;
      }
      if (homs.empty()) continue;
      std::string where = ki.expr + "->" + li.expr;
      if (ki.cx == li.cx) {
        c.pairs.push_back({identity_map(ki.cx),
                           constant_map(ki.cx, ki.cx, ki.cx->vertices().front()),
                           "id,const:" + where});
      }
      if (homs.size() >= 2) {
        std::size_t a = pick(homs.size());
        std::size_t b = pick(homs.size());
        if (b == a) b = (a + 1) % homs.size();
        c.pairs.push_back({homs[a], homs[b],
                           "#" + std::to_string(a) + ",#" + std::to_string(b) + ":" + where});
      }
    }
  }
}

}  // namespace

corpus builtin_corpus(std::uint64_t seed) {
  corpus c;
  c.seed = seed;
  std::vector<std::string> exprs = {"point",    "simplex(1)", "simplex(2)",
                                    "boundary(2)", "cycle(4)", "cone(cycle(3))"};
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  for (int tries = 0; tries < 24; ++tries) {
    complex r = random_complex(4, rng(), 0.55);
    if (r.is_connected() && r.facets().size() >= 2) {
      exprs.push_back(r.name());
      break;
    }
  }
  for (const auto& e : exprs) c.complexes.push_back({e, share(parse_generator(e))});
  derive_pairs(c, seed);
  return c;
}

corpus corpus_from_dir(const std::filesystem::path& dir, std::uint64_t seed) {
  corpus c;
  c.seed = seed;
  if (!std::filesystem::exists(dir)) throw malformed_input("corpus: no such directory '" + dir.string() + "'");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cx") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files)
    c.complexes.push_back({f.filename().string(), share(io::load_complex(f))});
  derive_pairs(c, seed);
  return c;
}

}  // namespace contig
