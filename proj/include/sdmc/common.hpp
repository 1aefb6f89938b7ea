#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdmc {

enum class Err {
  invalid_argument,   // bad user input (non-prime p, oversized q, bad literal, ...)
  zero_inverse,       // multiplicative inverse of 0
  no_solution,        // element search has no solution (e.g. sqrt(-1) for q = 3 mod 4)
  dimension_mismatch, // non-conformable matrix operation
  field_mismatch,     // operands live in different fields
  singular_matrix,    // invertible matrix required
  odd_length,         // self-dual codes need even length
  no_self_dual_codes, // q = 3 mod 4 and 4 does not divide n
  size_guard,         // enumeration would exceed a named guard
  cap_exceeded,       // group closure grew past its cap
  unsupported_size,   // operation not supported at these parameters
  action_escape,      // group action left the input code set
  io_error,           // cache file problems
  internal,           // broken invariant; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

// Size guards. Exceeding one is an error, never silent truncation.
inline constexpr std::uint64_t kMaxFieldSize = 256;          // q = p^e
inline constexpr std::uint64_t kMaxEnumerableWords = 10'000'000;  // q^k for weight distributions
inline constexpr std::uint64_t kMaxCensusSize = 1'000'000;   // self-dual codes per (q, n)
inline constexpr std::uint64_t kDefaultClosureCap = 50'000'000;  // group closure elements

}  // namespace sdmc
