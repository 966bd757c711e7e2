#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epgap {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid generator or operation parameter (e.g. r = 0).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An exact search refused to start because the input exceeds a configured limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// The caller broke a documented precondition; the message names the clause.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class MissingEdgeError : public Error {
 public:
  using Error::Error;
};

/// Input decomposition or witness failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A witness could not be completed (e.g. routing failed on an unverified mesh).
class WitnessError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what), offset_(0) {}
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Outcome of a validity check: ok, or the first violated clause plus details.
struct Verdict {
  bool ok = true;
  std::string clause;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string clause, std::string detail = {}) {
    return {false, std::move(clause), std::move(detail)};
  }

  explicit operator bool() const noexcept { return ok; }
};

}  // namespace epgap
