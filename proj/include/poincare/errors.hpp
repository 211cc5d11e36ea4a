#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poincare {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the polynomial parser. `offset` is the byte offset of the
/// offending character in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class MissingParameter : public Error {
 public:
  using Error::Error;
};

/// Analysis failures that should map to CLI exit status 2.
class AnalysisError : public Error {
 public:
  using Error::Error;
};

class NotAFixedPoint : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

/// dr/dt vanishes identically: every circle about the origin is invariant.
class DegenerateRadial : public AnalysisError {
 public:
  DegenerateRadial() : AnalysisError("dr/dt is identically zero (all circles invariant)") {}
};

}  // namespace poincare
