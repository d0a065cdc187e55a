#pragma once

#include <stdexcept>
#include <string>

namespace rankcertify {

/// Malformed or out-of-range caller input (dimensions, ranks, non-finite data).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The affine constraints admit no solution.
class InfeasibleSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The point is not in R(r) (numerical rank exceeds the bound).
class InvalidPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same verdict disagree beyond tolerance.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A solver met a non-finite objective or gradient.
class SolverAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankcertify
