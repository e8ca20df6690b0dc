#pragma once

#include <stdexcept>
#include <string>

namespace explab {

// Precondition violated by the caller's data (zero denominator, nonpositive
// log argument, empty candidate list, ...). CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A supplied witness fails one of its side conditions. The message names the
// failing element or condition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. The message carries a line number when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace explab
