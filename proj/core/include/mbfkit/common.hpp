#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace mbfkit {

using NodeId = std::uint32_t;
using Dist = double;

inline constexpr Dist kInf = std::numeric_limits<Dist>::infinity();

/// Input text could not be parsed. The CLI maps this to exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural precondition failed: bad parameters, element caps exceeded,
/// or disconnected input where connectivity is required. CLI exit code 2.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iteration cap was reached before the fixpoint. CLI exit code 3.
/// Carries the iteration count; the typed subclass carries partial state.
class ConvergenceErrorBase : public std::runtime_error {
 public:
  ConvergenceErrorBase(const std::string& what, int iterations)
      : std::runtime_error(what), iterations_(iterations) {}

  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

template <class State>
class ConvergenceError : public ConvergenceErrorBase {
 public:
  ConvergenceError(const std::string& what, int iterations, State partial)
      : ConvergenceErrorBase(what, iterations), partial_(std::move(partial)) {}

  const State& partial_state() const noexcept { return partial_; }

 private:
  State partial_;
};

/// Smallest k with 2^k >= n. ceil_log2(1) == 0.
inline int ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return std::bit_width(n - 1);
}

}  // namespace mbfkit
