#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace th {

using Int = std::int64_t;

/// Desk-scale guard rails. The CLI lets TH_MAX_ORDER override the order bound.
inline constexpr Int kDefaultMaxGroupOrder = 10'000'000;
inline constexpr Int kDefaultMaxEnumeration = 1'000'000;

/// Exception carrying a stable machine-readable code; the CLI surfaces the
/// code verbatim in its error object and exits with status 2.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace detail {

inline Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw error("integer_overflow", "integer overflow in exact arithmetic");
  }
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw error("integer_overflow", "integer overflow in exact arithmetic");
  }
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw error("integer_overflow", "integer overflow in exact arithmetic");
  }
  return r;
}

/// Quotient rounded toward -inf; requires b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

/// Nonnegative remainder in [0, b); requires b > 0.
inline Int pos_mod(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace detail
}  // namespace th
