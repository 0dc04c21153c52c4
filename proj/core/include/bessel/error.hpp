#pragma once

#include <stdexcept>
#include <string>

namespace bessel {

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition on otherwise well-formed values (overlapping
// label sets, slot not present, out-of-range degree, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bessel
