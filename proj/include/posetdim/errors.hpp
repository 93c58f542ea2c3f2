#pragma once

#include <stdexcept>
#include <string>

namespace posetdim {

struct PosetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CyclicRelation : PosetError {
  using PosetError::PosetError;
};

struct InvalidId : PosetError {
  using PosetError::PosetError;
};

struct PairNotIncomparable : PosetError {
  using PosetError::PosetError;
};

// Thrown when a search runs out of time or node budget. Carries whatever
// bounds were established before giving up (-1 when unknown).
struct ResourceLimit : PosetError {
  ResourceLimit(const std::string& what, int lower = -1, int upper = -1)
      : PosetError(what), lower(lower), upper(upper) {}
  int lower;
  int upper;
};

// A property the theory guarantees did not hold. Always a bug or bad input.
struct FalsifiedClaim : PosetError {
  using PosetError::PosetError;
};

struct NotConnected : PosetError {
  using PosetError::PosetError;
};

struct BadBase : PosetError {
  using PosetError::PosetError;
};

struct PreconditionFailed : PosetError {
  using PosetError::PosetError;
};

struct BadParameter : PosetError {
  using PosetError::PosetError;
};

struct DegenerateWalk : PosetError {
  using PosetError::PosetError;
};

struct ParseError : PosetError {
  ParseError(const std::string& what, int line = 0)
      : PosetError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

}  // namespace posetdim
