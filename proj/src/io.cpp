#include "contig/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace contig::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

[[noreturn]] void fail(const std::string& origin, std::size_t lineno, const std::string& what) {
  throw malformed_input(origin + ":" + std::to_string(lineno) + ": " + what);
}

std::optional<int> parse_int(const std::string& tok) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

complex parse_complex(std::istream& in, const std::string& origin) {
  std::string name;
  std::map<std::string, vertex_id> id_of;
  std::vector<std::pair<vertex_id, std::string>> labels;
  std::vector<vertex_id> isolated;
  std::vector<simplex> facets;
  bool seen_header = false;

  auto intern = [&](const std::string& lab) {
    auto it = id_of.find(lab);
    if (it != id_of.end()) return it->second;
    auto v = static_cast<vertex_id>(id_of.size());
    id_of.emplace(lab, v);
    labels.emplace_back(v, lab);
    return v;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "complex") {
      if (seen_header) fail(origin, lineno, "only one complex per file");
      if (toks.size() != 2) fail(origin, lineno, "expected: complex <name>");
      name = toks[1];
      seen_header = true;
    } else if (toks[0] == "vertex") {
      if (!seen_header) fail(origin, lineno, "missing 'complex <name>' header");
      if (toks.size() < 2) fail(origin, lineno, "expected: vertex <label> [...]");
      for (std::size_t i = 1; i < toks.size(); ++i) isolated.push_back(intern(toks[i]));
    } else if (toks[0] == "facet") {
      if (!seen_header) fail(origin, lineno, "missing 'complex <name>' header");
      if (toks.size() < 2) fail(origin, lineno, "expected: facet <label> [...]");
      std::vector<vertex_id> vs;
      for (std::size_t i = 1; i < toks.size(); ++i) vs.push_back(intern(toks[i]));
      try {
        facets.push_back(simplex(std::move(vs)));
      } catch (const malformed_input& e) {
        fail(origin, lineno, e.what());
      }
    } else {
      fail(origin, lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!seen_header) throw malformed_input(origin + ": no 'complex <name>' header found");
  if (facets.empty() && isolated.empty())
    throw malformed_input(origin + ": complex '" + name + "' has no facets or vertices");
  return complex::build(std::move(name), std::move(facets), std::move(isolated),
                        std::move(labels));
}

complex load_complex(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw malformed_input("cannot open '" + file.string() + "'");
  return parse_complex(in, file.string());
}

std::string print_complex(const complex& k) {
  std::ostringstream out;
  out << "complex " << k.name() << "\n";
  auto iso = k.isolated_vertices();
  if (!iso.empty()) {
    out << "vertex";
    for (vertex_id v : iso) out << " " << k.label(v);
    out << "\n";
  }
  for (const auto& f : k.facets()) {
    if (f.size() == 1) continue;  // printed as vertex line
    out << "facet";
    for (vertex_id v : f.vertices()) out << " " << k.label(v);
    out << "\n";
  }
  return out.str();
}

simplicial_map parse_map(std::istream& in, const complex_lookup& lookup,
                         const std::string& origin) {
  std::string name;
  complex_ptr dom, cod;
  std::vector<std::pair<vertex_id, vertex_id>> sends;
  std::set<vertex_id> sent;
  bool seen_header = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "map") {
      if (seen_header) fail(origin, lineno, "only one map per file");
      // map <name> : <domain> -> <codomain>
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        fail(origin, lineno, "expected: map <name> : <domain> -> <codomain>");
      name = toks[1];
      dom = lookup(toks[3]);
      if (!dom) fail(origin, lineno, "unknown complex '" + toks[3] + "'");
      cod = lookup(toks[5]);
      if (!cod) fail(origin, lineno, "unknown complex '" + toks[5] + "'");
      seen_header = true;
    } else if (toks[0] == "send") {
      if (!seen_header) fail(origin, lineno, "missing 'map' header");
      if (toks.size() != 3) fail(origin, lineno, "expected: send <domain-label> <codomain-label>");
      auto v = dom->vertex_by_label(toks[1]);
      if (!v) fail(origin, lineno, "unknown domain vertex '" + toks[1] + "'");
      auto w = cod->vertex_by_label(toks[2]);
      if (!w) fail(origin, lineno, "unknown codomain vertex '" + toks[2] + "'");
      if (!sent.insert(*v).second) fail(origin, lineno, "vertex '" + toks[1] + "' sent twice");
      sends.emplace_back(*v, *w);
    } else {
      fail(origin, lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!seen_header) throw malformed_input(origin + ": no 'map' header found");
  try {
    return simplicial_map::from_pairs(std::move(name), std::move(dom), std::move(cod),
                                      std::move(sends));
  } catch (const malformed_input& e) {
    throw malformed_input(origin + ": " + e.what());
  }
}

simplicial_map load_map(const std::filesystem::path& file, const complex_lookup& lookup) {
  std::ifstream in(file);
  if (!in) throw malformed_input("cannot open '" + file.string() + "'");
  return parse_map(in, lookup, file.string());
}

std::string print_map(const simplicial_map& f) {
  std::ostringstream out;
  out << "map " << (f.name().empty() ? std::string("f") : f.name()) << " : "
      << f.domain().name() << " -> " << f.codomain().name() << "\n";
  for (std::size_t i = 0; i < f.domain().vertex_count(); ++i)
    out << "send " << f.domain().label(f.domain().vertices()[i]) << " "
        << f.codomain().label(f.assignment()[i]) << "\n";
  return out.str();
}

moore_path parse_path_line(const std::string& line, const complex_lookup& lookup) {
  auto toks = tokenize(line);
  if (toks.size() < 3 || toks[0] != "path")
    throw malformed_input("expected: path <complex> [<start-index>] <label> ...");
  complex_ptr target = lookup(toks[1]);
  if (!target) throw malformed_input("unknown complex '" + toks[1] + "'");
  std::size_t first = 2;
  int start = 0;
  if (auto n = parse_int(toks[2]); n && !target->vertex_by_label(toks[2])) {
    start = *n;
    first = 3;
  }
  std::vector<vertex_id> vals;
  for (std::size_t i = first; i < toks.size(); ++i) {
    auto v = target->vertex_by_label(toks[i]);
    if (!v) throw malformed_input("unknown vertex '" + toks[i] + "'");
    vals.push_back(*v);
  }
  if (vals.empty()) throw malformed_input("path needs at least one vertex");
  return moore_path::make(std::move(target), start, std::move(vals));
}

std::string print_path(const moore_path& p) {
  std::ostringstream out;
  out << "path " << p.target().name() << " " << p.lo();
  for (vertex_id v : p.values()) out << " " << p.target().label(v);
  return out.str();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw malformed_input("cannot open '" + file.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace contig::io
