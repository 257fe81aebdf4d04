#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "contig/moore_path.hpp"
#include "contig/simplicial_map.hpp"

namespace contig::io {

// Complex files (one complex per file, line-based, '#' starts a comment):
//   complex <name>
//   vertex <label> [<label> ...]      isolated vertices, optional
//   facet <label> <label> [...]
// Labels are whitespace-free tokens; ids are assigned in first-appearance
// order.
complex parse_complex(std::istream& in, const std::string& origin = "<stream>");
complex load_complex(const std::filesystem::path& file);
std::string print_complex(const complex& k);

using complex_lookup = std::function<complex_ptr(const std::string&)>;

// Map files:
//   map <name> : <domain-name> -> <codomain-name>
//   send <domain-label> <codomain-label>
// Every domain vertex appears in exactly one send line.
simplicial_map parse_map(std::istream& in, const complex_lookup& lookup,
                         const std::string& origin = "<stream>");
simplicial_map load_map(const std::filesystem::path& file, const complex_lookup& lookup);
std::string print_map(const simplicial_map& f);

// Path literal: path <complex-name> [<start-index>] <label> <label> ...
// The optional start index is recognized only when the token is an integer
// that is not a vertex label of the complex.
moore_path parse_path_line(const std::string& line, const complex_lookup& lookup);
std::string print_path(const moore_path& p);

std::uint64_t fnv1a(std::string_view bytes);  // input digests for reports
std::string read_file(const std::filesystem::path& file);

}  // namespace contig::io
