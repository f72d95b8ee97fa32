#pragma once

#include <stdexcept>
#include <string>

namespace trihom {

/// Base error for invalid domain operations (dimension mismatches,
/// violated preconditions, rejected constructions).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input (documents, rational literals).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace trihom
