#include "totval/arith.hpp"

namespace totval {

Int inverse_mod(Int a, Int m) {
  if (m <= 0) throw ValidationError("inverse_mod: modulus must be positive");
  if (m == 1) return 0;
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw ValidationError("inverse_mod: " + std::to_string(a) + " is not a unit modulo " +
                          std::to_string(m));
  }
  return mod(old_s, m);
}

Fraction::Fraction(Int num, Int den) {
  if (den == 0) throw ValidationError("fraction with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  Int g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction Fraction::operator+(const Fraction& o) const {
  Int g = gcd(den_, o.den_);
  Int den = checked_mul(den_ / g, o.den_);
  Int num = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, den_ / g));
  return {num, den};
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator*(const Fraction& o) const {
  Int g1 = gcd(num_, o.den_);
  Int g2 = gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return {checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1)};
}

Fraction Fraction::operator/(const Fraction& o) const {
  if (o.num_ == 0) throw ValidationError("fraction division by zero");
  return *this * Fraction(o.den_, o.num_);
}

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
  return checked_mul(num_, o.den_) <=> checked_mul(o.num_, den_);
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

}  // namespace totval
