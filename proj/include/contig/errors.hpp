#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace contig {

// Input violating an operation's precondition: bad file syntax, mismatched
// complexes, empty simplex, unknown label, ...
struct malformed_input : std::runtime_error {
  explicit malformed_input(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search hit its resource budget before finishing.
// partial_count carries how far it got.
struct resource_exhausted : std::runtime_error {
  std::uint64_t partial_count;
  explicit resource_exhausted(const std::string& what, std::uint64_t partial = 0)
      : std::runtime_error(what), partial_count(partial) {}
};

}  // namespace contig
