#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace covalg {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range graph/lattice document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to run beyond its configured size cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Base for the two ways a graph can fail to be brought into standard form.
class StandardizationError : public Error {
 public:
  using Error::Error;
};

class NoPerfectMatching : public StandardizationError {
 public:
  using StandardizationError::StandardizationError;
};

// No perfect matching tried yields a transitive edge relation. Carries the
// brute-force unmixedness verdict (when it was computable) so that a
// disagreement between the two is visible to the caller.
class NotStandardizable : public StandardizationError {
 public:
  NotStandardizable(const std::string& what, std::optional<bool> bruteforce_unmixed)
      : StandardizationError(what), bruteforce_unmixed_(bruteforce_unmixed) {}

  std::optional<bool> bruteforce_unmixed() const { return bruteforce_unmixed_; }

 private:
  std::optional<bool> bruteforce_unmixed_;
};

// A set of subsets that should form a cover lattice has maximal chains of
// different lengths.
class NonGradedLattice : public Error {
 public:
  using Error::Error;
};

// A lattice map expected to be an isomorphism is not.
class NotIsomorphism : public Error {
 public:
  using Error::Error;
};

// Two routes for the same invariant disagreed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace covalg
