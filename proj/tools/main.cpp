#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "contig/invariants.hpp"
#include "contig/io.hpp"
#include "contig/report.hpp"
#include "contig/verify.hpp"

namespace {

using nlohmann::json;
using namespace contig;

constexpr int exit_ok = 0;
constexpr int exit_violation = 2;
constexpr int exit_parse = 3;
constexpr int exit_unknown = 4;

struct common_opts {
  std::uint64_t budget_maps = 1'000'000;
  std::uint64_t budget_steps = 0;  // 0 = unlimited
  std::uint64_t budget_evals = 20'000;
  std::string format = "text";
  std::string out;
  bool timings = false;
};

void add_common(CLI::App* cmd, common_opts& o) {
  if (const char* env = std::getenv("CONTIG_BUDGET_MAPS")) o.budget_maps = std::strtoull(env, nullptr, 10);
  cmd->add_option("--budget-maps", o.budget_maps, "visited-map budget for class searches");
  cmd->add_option("--budget-steps", o.budget_steps, "chain-length budget (0 = unlimited)");
  cmd->add_option("--budget-evals", o.budget_evals, "cover predicate evaluation budget");
  cmd->add_option("--format", o.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
  cmd->add_flag("--timings", o.timings, "include wall times in the report body");
}

search_budget budget_of(const common_opts& o) {
  search_budget b;
  b.max_maps = o.budget_maps;
  if (o.budget_steps) b.max_steps = o.budget_steps;
  b.max_predicate_evals = o.budget_evals;
  return b;
}

std::optional<int> parse_m(const std::string& s) {
  if (s.empty() || s == "inf") return std::nullopt;
  return std::stoi(s);
}

struct workspace {
  std::map<std::string, complex_ptr> complexes;
  std::vector<simplicial_map> maps;
  json inputs = json::array();

  // Complex files register under their name; map files resolve against the
  // complexes loaded so far, so order complexes first on the command line.
  void load(const std::vector<std::string>& files) {
    std::vector<std::string> map_files;
    for (const auto& f : files) {
      std::string body = io::read_file(f);
      json rec;
      rec["path"] = f;
      char digest[32];
      std::snprintf(digest, sizeof digest, "%016llx",
                    static_cast<unsigned long long>(io::fnv1a(body)));
      rec["digest"] = digest;
      inputs.push_back(rec);
      std::istringstream probe(body);
      std::string first;
      probe >> first;
      while (first == "#") {
        std::string rest;
        std::getline(probe, rest);
        probe >> first;
      }
      if (first == "complex") {
        complex k = io::load_complex(f);
        std::string nm = k.name();
        complexes[nm] = share(std::move(k));
      } else {
        map_files.push_back(f);
      }
    }
    auto lookup = [this](const std::string& name) -> complex_ptr {
      auto it = complexes.find(name);
      return it == complexes.end() ? nullptr : it->second;
    };
    for (const auto& f : map_files) maps.push_back(io::load_map(f, lookup));
  }
};

void emit(const common_opts& o, const json& report) {
  std::string body =
      o.format == "json" ? report.dump(2) + "\n" : contig::report::render_text(report);
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw malformed_input("cannot write '" + o.out + "'");
    out << body;
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_contig(const common_opts& o, const workspace& ws) {
  if (ws.maps.size() != 2) throw malformed_input("contig: exactly two map files expected");
  const auto& a = ws.maps[0];
  const auto& b = ws.maps[1];
  auto t0 = std::chrono::steady_clock::now();
  bool contiguous = is_contiguous(a, b);
  contiguity_verdict v = same_contiguity_class(a, b, budget_of(o));
  json rep;
  rep["schema"] = contig::report::schema_version;
  rep["command"] = "contig";
  rep["inputs"] = ws.inputs;
  rep["maps"] = {a.name(), b.name()};
  rep["contiguous"] = contiguous;
  rep["verdict"] = contig::report::to_json(v);
  if (o.timings) rep["wall_ms"] = ms_since(t0);
  emit(o, rep);
  return v.status == reach::budget_exhausted ? exit_unknown : exit_ok;
}

int cmd_invariant(const common_opts& o, const std::string& name, const workspace& ws,
                  const std::string& m_text, const std::string& base_label) {
  auto m = parse_m(m_text);
  const search_budget budget = budget_of(o);
  json rep;
  rep["schema"] = contig::report::schema_version;
  rep["command"] = "invariant " + name;
  rep["inputs"] = ws.inputs;
  auto t0 = std::chrono::steady_clock::now();

  auto one_complex = [&]() -> complex_ptr {
    if (ws.complexes.size() != 1)
      throw malformed_input("invariant " + name + ": exactly one complex expected");
    return ws.complexes.begin()->second;
  };
  auto one_map = [&]() -> const simplicial_map& {
    if (ws.maps.size() != 1)
      throw malformed_input("invariant " + name + ": exactly one map expected");
    return ws.maps[0];
  };
  auto base_of = [&](const complex& k) -> std::optional<vertex_id> {
    if (base_label.empty()) return std::nullopt;
    auto v = k.vertex_by_label(base_label);
    if (!v) throw malformed_input("base vertex '" + base_label + "' not found");
    return v;
  };

  invariant_result r;
  bool violation = false;
  if (name == "sd") {
    if (ws.maps.size() != 2) throw malformed_input("invariant sd: exactly two maps expected");
    r = sd_m(ws.maps[0], ws.maps[1], m, budget);
    if (m) {
      // monotonicity cross-check against the untruncated value
      invariant_result full = sd_m(ws.maps[0], ws.maps[1], std::nullopt, budget);
      r.routes.emplace_back("untruncated", full.value);
      auto le = extended_value::le(r.value, full.value);
      rep["monotone_ok"] = le ? json(*le) : json("unknown");
      if (le && !*le) violation = true;
    }
  } else if (name == "scat") {
    complex_ptr k = one_complex();
    r = scat_m(k, m, budget, base_of(*k), true);
    if (r.routes.size() == 2 && !r.routes[0].second.is_unknown() &&
        !r.routes[1].second.is_unknown() && !(r.routes[0].second == r.routes[1].second))
      violation = true;
  } else if (name == "scat-map") {
    const auto& f = one_map();
    r = scat_m_of_map(f, m, budget, base_of(f.codomain()));
  } else if (name == "tc") {
    complex_ptr k = one_complex();
    r = tc_m(k, m, budget, true);
    invariant_result h = secat_m(diagonal_map(k), m, true, budget);
    r.routes.emplace_back("hsecat(diagonal)", h.value);
    for (const auto& [nm, v] : r.routes)
      if (!v.is_unknown() && !r.value.is_unknown() && !(v == r.value)) violation = true;
  } else if (name == "secat") {
    r = secat_m(one_map(), m, false, budget);
  } else if (name == "hsecat") {
    r = secat_m(one_map(), m, true, budget);
  } else {
    throw malformed_input("invariant: unknown name '" + name + "' (sd, scat, scat-map, tc, secat, hsecat)");
  }

  rep["result"] = contig::report::to_json(r);
  if (o.timings) rep["wall_ms"] = ms_since(t0);
  emit(o, rep);
  if (violation) return exit_violation;
  return r.value.is_unknown() ? exit_unknown : exit_ok;
}

int cmd_verify(const common_opts& o, bool builtin, const std::string& corpus_dir,
               std::uint64_t seed, const std::string& suite, const std::string& m_grid,
               const std::string& inject_fault) {
  corpus c;
  if (!corpus_dir.empty())
    c = corpus_from_dir(corpus_dir, seed);
  else if (builtin)
    c = builtin_corpus(seed);
  else
    throw malformed_input("verify: pass --builtin or --corpus <dir>");

  verify_options opt;
  opt.budget = budget_of(o);
  opt.suite = suite;
  if (!inject_fault.empty()) opt.inject_fault = inject_fault;
  if (!m_grid.empty()) {
    opt.m_grid.clear();
    std::istringstream in(m_grid);
    std::string tok;
    while (std::getline(in, tok, ',')) opt.m_grid.push_back(parse_m(tok));
  }

  auto t0 = std::chrono::steady_clock::now();
  verify_result r = run_verify(c, opt);
  json rep;
  rep["schema"] = contig::report::schema_version;
  rep["command"] = "verify";
  rep["seed"] = seed;
  rep["suite"] = suite;
  rep["corpus"] = contig::report::corpus_listing(c);
  rep["verify"] = contig::report::to_json(r);
  if (o.timings) rep["wall_ms"] = ms_since(t0);
  emit(o, rep);
  return r.failed ? exit_violation : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact contiguity-class and cover invariants for finite simplicial complexes"};
  app.require_subcommand(1);

  common_opts o;

  auto* c_contig = app.add_subcommand("contig", "contiguity and contiguity-class verdict for two maps");
  std::vector<std::string> contig_files;
  c_contig->add_option("files", contig_files, "complex files, then two map files")->required();
  add_common(c_contig, o);

  auto* c_inv = app.add_subcommand("invariant", "compute sd / scat / scat-map / tc / secat / hsecat");
  std::string inv_name, inv_m = "inf", inv_base;
  std::vector<std::string> inv_files;
  c_inv->add_option("name", inv_name, "invariant name")->required();
  c_inv->add_option("files", inv_files, "input complex and map files")->required();
  c_inv->add_option("--m", inv_m, "skeleton dimension (integer or 'inf')");
  c_inv->add_option("--base-vertex", inv_base, "base vertex label for scat/scat-map");
  add_common(c_inv, o);

  auto* c_verify = app.add_subcommand("verify", "run the theorem suite over a corpus");
  bool builtin = false;
  std::string corpus_dir, suite = "all", m_grid, inject_fault;
  std::uint64_t seed = 7;
  c_verify->add_flag("--builtin", builtin, "use the seeded built-in corpus");
  c_verify->add_option("--corpus", corpus_dir, "directory of .cx complex files");
  c_verify->add_option("--seed", seed, "corpus and sampling seed");
  c_verify->add_option("--suite", suite, "comma-separated theorem prefixes (default all)");
  c_verify->add_option("--m-grid", m_grid, "comma-separated m values, e.g. 0,1,inf");
  c_verify->add_option("--inject-fault", inject_fault, "test hook")->group("");
  add_common(c_verify, o);

  auto* c_tr = app.add_subcommand("transform", "subdivide | product | skeleton");
  std::string tr_op, tr_m = "inf";
  std::vector<std::string> tr_files;
  int tr_iterations = 1;
  c_tr->add_option("op", tr_op, "subdivide | product | skeleton")->required();
  c_tr->add_option("files", tr_files, "input files")->required();
  c_tr->add_option("--iterations", tr_iterations, "repeat count for subdivide");
  c_tr->add_option("--m", tr_m, "dimension for skeleton");
  add_common(c_tr, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_contig->parsed()) {
      workspace ws;
      ws.load(contig_files);
      return cmd_contig(o, ws);
    }
    if (c_inv->parsed()) {
      workspace ws;
      ws.load(inv_files);
      return cmd_invariant(o, inv_name, ws, inv_m, inv_base);
    }
    if (c_verify->parsed())
      return cmd_verify(o, builtin, corpus_dir, seed, suite, m_grid, inject_fault);
    if (c_tr->parsed()) {
      // transform writes complex/map files rather than a report
      workspace ws;
      ws.load(tr_files);
      auto write_out = [&](const std::string& body) {
        if (o.out.empty()) {
          std::cout << body;
        } else {
          std::ofstream f(o.out, std::ios::binary);
          if (!f) throw malformed_input("cannot write '" + o.out + "'");
          f << body;
        }
      };
      if (tr_op == "product") {
        if (ws.complexes.size() != 2)
          throw malformed_input("transform product: two complex files expected");
        auto it = ws.complexes.begin();
        complex_ptr a = it->second;
        complex_ptr b = std::next(it)->second;
        write_out(io::print_complex(categorical_product(*a, *b)));
      } else if (tr_op == "skeleton") {
        if (ws.complexes.size() != 1)
          throw malformed_input("transform skeleton: one complex file expected");
        auto m = parse_m(tr_m);
        if (!m) throw malformed_input("transform skeleton: pass --m <int>");
        write_out(io::print_complex(skeleton(*ws.complexes.begin()->second, *m)));
      } else if (tr_op == "subdivide") {
        if (!ws.maps.empty()) {
          simplicial_map f = ws.maps[0];
          for (int i = 0; i < tr_iterations; ++i) f = sd_map(f);
          std::string base = o.out.empty() ? std::string("sd_out") : o.out;
          std::ofstream dm(base + ".dom.cx", std::ios::binary);
          dm << io::print_complex(f.domain());
          std::ofstream cm(base + ".cod.cx", std::ios::binary);
          cm << io::print_complex(f.codomain());
          std::ofstream mf(base, std::ios::binary);
          mf << io::print_map(f);
          std::cout << "wrote " << base << ", " << base << ".dom.cx, " << base << ".cod.cx\n";
        } else {
          if (ws.complexes.size() != 1)
            throw malformed_input("transform subdivide: one complex (or map) file expected");
          complex k = *ws.complexes.begin()->second;
          for (int i = 0; i < tr_iterations; ++i) k = barycentric_subdivision(k);
          write_out(io::print_complex(k));
        }
      } else {
        throw malformed_input("transform: unknown op '" + tr_op + "'");
      }
      return exit_ok;
    }
  } catch (const malformed_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const resource_exhausted& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return exit_unknown;
  }
  return exit_ok;
}
