#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contig/corpus.hpp"
#include "contig/invariants.hpp"

namespace contig {

struct verify_options {
  search_budget budget{200'000, {}, 20'000};
  // Instances beyond these caps are recorded as skips, never silently dropped.
  std::size_t cover_facet_cap = 16;     // facet count of a cover target
  std::size_t engine_vertex_cap = 26;   // vertex count of BFS domains/codomains
  std::size_t routeb_vertex_cap = 16;   // K×K vertex count for the direct tc route
  std::size_t sd_simplex_cap = 40;      // simplex count cap for subdivision checks
  std::size_t max_pairs_per_check = 0;  // 0 = no cap
  std::vector<std::optional<int>> m_grid = {0, 1, std::nullopt};
  std::string suite = "all";                // comma-separated theorem-name prefixes
  std::optional<std::string> inject_fault;  // test hook: off-by-one-scat | pred-always-good
};

enum class check_status : std::uint8_t { pass, fail, skip };

struct check_record {
  std::string theorem;   // e.g. "thm-3.6"
  std::string instance;  // human-readable instance description
  check_status status = check_status::skip;
  std::string detail;    // values involved, or the skip reason / reproducer
};

struct verify_result {
  std::vector<check_record> records;
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool ok() const { return failed == 0; }
};

// Checks every theorem of the suite on every applicable corpus instance:
// composition and monotonicity bounds for sd_m, the category bound and the
// axis-inclusion equality, the subdivision and categorical-product
// inequalities, the Svarc-genus comparison, both tc routes, the
// scat/tc/scat-of-square sandwich, and the tc = hsecat(diagonal) equality.
// Budget-limited results are recorded as skips.
verify_result run_verify(const corpus& c, const verify_options& opt);

}  // namespace contig
