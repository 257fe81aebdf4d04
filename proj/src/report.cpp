#include "contig/report.hpp"

#include <sstream>

namespace contig::report {

using nlohmann::json;

json to_json(const extended_value& v) {
  if (v.is_finite()) return v.n();
  return v.str();
}

json to_json(const contiguity_verdict& v) {
  json j;
  j["status"] = to_string(v.status);
  if (v.steps) j["steps"] = *v.steps;
  j["explored"] = v.explored;
  return j;
}

json to_json(const subcomplex_ref& ref) {
  json j;
  j["facets"] = ref.facet_indices;
  json labels = json::array();
  for (std::size_t i : ref.facet_indices) {
    std::string s;
    const auto& f = ref.parent->facets()[i];
    for (vertex_id v : f.vertices()) s += (s.empty() ? "" : " ") + ref.parent->label(v);
    labels.push_back(s);
  }
  j["facet_labels"] = labels;
  if (!ref.extra_vertices.empty()) {
    json extras = json::array();
    for (vertex_id v : ref.extra_vertices) extras.push_back(ref.parent->label(v));
    j["extra_vertices"] = extras;
  }
  return j;
}

json to_json(const cover_solution& s) {
  json j;
  j["value"] = to_json(s.value);
  j["predicate_calls"] = s.predicate_calls;
  if (!s.pieces.empty()) {
    json pieces = json::array();
    for (const auto& p : s.pieces) pieces.push_back(to_json(p));
    j["pieces"] = pieces;
  }
  if (s.infeasible_facet) {
    std::string lab;
    for (vertex_id v : s.infeasible_facet->vertices()) lab += std::to_string(v) + " ";
    j["infeasible_facet"] = lab;
  }
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

json to_json(const invariant_result& r) {
  json j;
  j["name"] = r.name;
  j["m"] = r.m ? json(*r.m) : json("inf");
  j["value"] = to_json(r.value);
  if (!r.routes.empty()) {
    json routes = json::object();
    for (const auto& [nm, v] : r.routes) routes[nm] = to_json(v);
    j["routes"] = routes;
  }
  j["witness"] = to_json(r.witness);
  return j;
}

json to_json(const check_record& r) {
  json j;
  j["theorem"] = r.theorem;
  j["instance"] = r.instance;
  j["status"] = r.status == check_status::pass   ? "pass"
                : r.status == check_status::fail ? "fail"
                                                 : "skip";
  j["detail"] = r.detail;
  return j;
}

json to_json(const verify_result& r) {
  json j;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  json recs = json::array();
  for (const auto& rec : r.records) recs.push_back(to_json(rec));
  j["checks"] = recs;
  return j;
}

json corpus_listing(const corpus& c) {
  json j;
  j["seed"] = c.seed;
  json cxs = json::array();
  for (const auto& it : c.complexes) {
    json e;
    e["expr"] = it.expr;
    e["vertices"] = it.cx->vertex_count();
    e["facets"] = it.cx->facets().size();
    e["dim"] = it.cx->dim();
    cxs.push_back(e);
  }
  j["complexes"] = cxs;
  json prs = json::array();
  for (const auto& p : c.pairs) prs.push_back(p.tag);
  j["pairs"] = prs;
  return j;
}

namespace {

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_structured()) {
        out << pad << it.key() << ":\n";
        render(out, it.value(), indent + 1);
      } else {
        out << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& el : j) {
      if (el.is_structured()) {
        out << pad << "-\n";
        render(out, el, indent + 1);
      } else {
        out << pad << "- " << el.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace contig::report
