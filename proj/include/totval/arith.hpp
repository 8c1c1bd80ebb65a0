// Exact integer and rational helpers shared by every module.
//
// All quantities handled by the library (genera, orders, valency numerators)
// are small, so 64-bit integers are used with overflow-checked operations.
// An overflow raises std::overflow_error instead of wrapping silently.
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace totval {

using Int = std::int64_t;

/// Input violates a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data is well-formed but not realizable (e.g. Riemann-Hurwitz gives a
/// non-integral or negative quotient genus).
class InconsistentDataError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Query falls outside the cases the library knows how to decide.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m, in [0, m). Requires gcd(a, m) = 1.
Int inverse_mod(Int a, Int m);

/// Reduced fraction with positive denominator.
class Fraction {
 public:
  Fraction() = default;
  Fraction(Int num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  Fraction operator-() const { return Fraction(checked_sub(0, num_), den_); }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }

  bool operator==(const Fraction&) const = default;
  std::strong_ordering operator<=>(const Fraction& o) const;

  std::string to_string() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace totval
