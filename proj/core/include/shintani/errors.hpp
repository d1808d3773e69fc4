#pragma once

#include <stdexcept>
#include <string>

namespace shintani {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// gamma fails the congruence / determinant conditions of the group
struct MembershipError : Error {
  using Error::Error;
};

// coset decomposition did not close up, or representative bound exceeded
struct DecompositionError : Error {
  using Error::Error;
};

// coefficient module weight does not match the requested operation
struct WeightError : Error {
  using Error::Error;
};

// eigenspace empty or of dimension >= 2
struct EigenspaceError : Error {
  using Error::Error;
};

// a_p not a p-adic unit
struct OrdinarityError : Error {
  using Error::Error;
};

// discriminant is a perfect square (split form, excluded)
struct SplitFormError : Error {
  using Error::Error;
};

// division by a non-unit, or Teichmuller of a non-unit
struct UnitError : Error {
  using Error::Error;
};

// measure mass pushed onto a non-primitive disc
struct SupportError : Error {
  using Error::Error;
};

// U_p iteration did not stabilize within the cap
struct ConvergenceError : Error {
  int achieved_depth;
  ConvergenceError(const std::string& msg, int depth)
      : Error(msg), achieved_depth(depth) {}
};

// half-integral Hecke operator at a bad prime, or r >= 2 specialization
struct ScopeError : Error {
  using Error::Error;
};

// q-expansion window too small for the requested operation
struct WindowError : Error {
  using Error::Error;
};

// invalid run configuration
struct ConfigError : Error {
  using Error::Error;
};

// presentation / decomposition self-check failed
struct InternalError : Error {
  using Error::Error;
};

}  // namespace shintani
