#pragma once

#include <stdexcept>
#include <string>

namespace grt {

// Hard input errors: malformed files, ids out of range, broken invariants.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A stated hypothesis does not hold for the given parameters (no admissible
// k, tree too shallow, search cap exceeded).  Callers may treat this as a
// negative result rather than a failure.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what) : Error(what) {}
};

}  // namespace grt
