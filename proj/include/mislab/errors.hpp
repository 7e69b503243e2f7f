#pragma once

#include <stdexcept>
#include <string>

namespace mislab {

// Malformed or out-of-contract arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Byte-level failure while decoding graph6 or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments are well formed but the requested object does not exist
// (e.g. asking for a reduction of a graph with no k-MIS).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mislab
