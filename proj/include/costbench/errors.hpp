#pragma once

#include <stdexcept>
#include <string>

namespace costbench {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text: bad syntax, unparsable number, unknown key.
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input violating a semantic constraint. `field` names the
// offending key so diagnostics can point at it.
struct ValidationError : Error {
  ValidationError(std::string field_name, const std::string& message)
      : Error(field_name + ": " + message), field(std::move(field_name)) {}
  std::string field;
};

struct EmptyWindow : Error {
  EmptyWindow() : Error("aggregate over an empty window") {}
};

struct InvalidCapacity : Error {
  explicit InvalidCapacity(long long m)
      : Error("instance count must be >= 1, got " + std::to_string(m)) {}
};

struct ZeroTotal : Error {
  ZeroTotal() : Error("cost total is zero, shares undefined") {}
};

struct InsufficientSamples : Error {
  explicit InsufficientSamples(std::size_t n)
      : Error("need >= 2 post-warmup samples, have " + std::to_string(n)) {}
};

struct NoFeasibleCapacity : Error {
  NoFeasibleCapacity(const std::string& lambda_text, long long m_max)
      : Error("no instance count in [1, " + std::to_string(m_max) +
              "] satisfies the SLO at " + lambda_text + " events/s"),
        lambda(lambda_text) {}
  std::string lambda;
};

struct GridMismatch : Error {
  GridMismatch(const std::string& a, const std::string& b)
      : Error("load grids differ between " + a + " and " + b) {}
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace costbench
