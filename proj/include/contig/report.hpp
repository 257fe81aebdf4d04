#pragma once

#include <string>

#include <json.hpp>

#include "contig/corpus.hpp"
#include "contig/invariants.hpp"
#include "contig/verify.hpp"

namespace contig::report {

inline constexpr const char* schema_version = "contig-report/1";

nlohmann::json to_json(const extended_value& v);
nlohmann::json to_json(const contiguity_verdict& v);
nlohmann::json to_json(const subcomplex_ref& ref);
nlohmann::json to_json(const cover_solution& s);
nlohmann::json to_json(const invariant_result& r);
nlohmann::json to_json(const check_record& r);
nlohmann::json to_json(const verify_result& r);
nlohmann::json corpus_listing(const corpus& c);

std::string render_text(const nlohmann::json& report);

}  // namespace contig::report
