#include "totval/valency.hpp"

#include <algorithm>
#include <sstream>

namespace totval {

Valency Valency::make(Int theta, Int lambda) {
  if (lambda < 2) {
    throw ValidationError("valency " + std::to_string(theta) + "/" + std::to_string(lambda) +
                          ": lambda must be >= 2");
  }
  if (theta < 1 || theta >= lambda) {
    throw ValidationError("valency " + std::to_string(theta) + "/" + std::to_string(lambda) +
                          ": theta must satisfy 1 <= theta <= lambda - 1");
  }
  if (gcd(theta, lambda) != 1) {
    throw ValidationError("valency " + std::to_string(theta) + "/" + std::to_string(lambda) +
                          ": gcd(theta, lambda) must be 1");
  }
  return {theta, lambda};
}

std::string Valency::to_string() const {
  return std::to_string(theta_) + "/" + std::to_string(lambda_);
}

std::ostream& operator<<(std::ostream& os, const Valency& v) { return os << v.to_string(); }

Fraction rh_quotient_genus(Int genus, Int order, std::span<const Int> indices) {
  if (order < 1) throw ValidationError("covering degree must be positive");
  // 2g - 2 = n (2g' - 2 + sum (1 - 1/lambda_i))
  Fraction defect;
  for (Int l : indices) {
    if (l < 1) throw ValidationError("branch index must be positive");
    defect += Fraction(l - 1, l);
  }
  Fraction rhs = Fraction(checked_sub(checked_mul(2, genus), 2), order) + 2 - defect;
  return rhs / 2;
}

bool nielsen_check(std::span<const Valency> valencies) {
  Fraction sum;
  for (const auto& v : valencies) sum += v.value();
  return sum.is_integer();
}

TotalValency TotalValency::make(Int genus, Int order, std::vector<Valency> valencies) {
  if (genus < 0) throw ValidationError("genus must be nonnegative");
  if (order < 1) throw ValidationError("order must be positive");
  for (const auto& v : valencies) {
    if (order % v.lambda() != 0) {
      throw ValidationError("valency " + v.to_string() + ": lambda does not divide order " +
                            std::to_string(order));
    }
  }
  if (!nielsen_check(valencies)) {
    throw ValidationError("valencies do not sum to an integer");
  }
  std::sort(valencies.begin(), valencies.end());
  std::vector<Int> indices;
  indices.reserve(valencies.size());
  for (const auto& v : valencies) indices.push_back(v.lambda());
  Fraction qg = rh_quotient_genus(genus, order, indices);
  if (!qg.is_integer() || qg.num() < 0) {
    throw InconsistentDataError("Riemann-Hurwitz gives quotient genus " + qg.to_string());
  }
  return {genus, order, std::move(valencies)};
}

TotalValency TotalValency::identity(Int genus) { return make(genus, 1, {}); }

std::vector<Int> TotalValency::branch_indices() const {
  std::vector<Int> out;
  out.reserve(valencies_.size());
  for (const auto& v : valencies_) out.push_back(v.lambda());
  return out;
}

std::strong_ordering TotalValency::operator<=>(const TotalValency& o) const {
  if (auto c = order_ <=> o.order_; c != 0) return c;
  if (auto c = genus_ <=> o.genus_; c != 0) return c;
  return std::lexicographical_compare_three_way(valencies_.begin(), valencies_.end(),
                                                o.valencies_.begin(), o.valencies_.end());
}

Int hnp_genus(Int n, Int p) {
  if (n < 3) throw ValidationError("h_{n,p} requires n >= 3");
  if (p < 1 || p > n - 1) throw ValidationError("h_{n,p} requires 1 <= p <= n - 1");
  return (n - gcd(n, p) - gcd(n, p + 1) + 1) / 2;
}

TotalValency hnp(Int n, Int p) {
  Int genus = hnp_genus(n, p);
  std::vector<Valency> vs;
  for (Int num : {Int{1}, p, n - p - 1}) {
    Fraction f(num, n);
    if (f.is_integer()) continue;
    vs.push_back(Valency::make(f.num(), f.den()));
  }
  return TotalValency::make(genus, n, std::move(vs));
}

TotalValency power(const TotalValency& t, Int k) {
  if (k < 0) throw ValidationError("power: exponent must be nonnegative");
  const Int n = t.order();
  k %= n;
  if (k == 0) return TotalValency::identity(t.genus());
  const Int d = gcd(n, k);
  const Int m = n / d;
  const Int unit_inv = inverse_mod(k / d, m);
  std::vector<Valency> out;
  for (const auto& v : t.valencies()) {
    // Isotropy of f^k at the orbit is <f^{n/lambda}> intersected with <f^d>.
    const Int lam = v.lambda();
    const Int new_lambda = n / lcm(d, n / lam);
    if (new_lambda == 1) continue;
    const Int copies = d * new_lambda / lam;
    const Int new_theta = mod(checked_mul(v.theta(), unit_inv), new_lambda);
    const Valency nv = Valency::make(new_theta, new_lambda);
    for (Int c = 0; c < copies; ++c) out.push_back(nv);
  }
  return TotalValency::make(t.genus(), m, std::move(out));
}

TotalValency inverse(const TotalValency& t) {
  std::vector<Valency> out;
  out.reserve(t.orbit_count());
  for (const auto& v : t.valencies()) out.push_back(v.inverted());
  return TotalValency::make(t.genus(), t.order(), std::move(out));
}

QuotientSignature quotient_signature(const TotalValency& t) {
  auto indices = t.branch_indices();
  Fraction qg = rh_quotient_genus(t.genus(), t.order(), indices);
  if (!qg.is_integer() || qg.num() < 0) {
    throw InconsistentDataError("Riemann-Hurwitz gives quotient genus " + qg.to_string());
  }
  return {qg.num(), std::move(indices)};
}

bool harvey_check(Int n, Int quotient_genus, std::span<const Int> indices) {
  if (n < 1) throw ValidationError("harvey_check: n must be positive");
  for (Int l : indices) {
    if (l < 2) throw ValidationError("harvey_check: branch indices must be >= 2");
  }
  const auto s = indices.size();
  Int big_m = 1;
  for (Int l : indices) big_m = lcm(big_m, l);
  // (i) omitting any single index keeps the lcm.
  for (std::size_t i = 0; i < s; ++i) {
    Int partial = 1;
    for (std::size_t j = 0; j < s; ++j) {
      if (j != i) partial = lcm(partial, indices[j]);
    }
    if (partial != big_m) return false;
  }
  // (ii)
  if (n % big_m != 0) return false;
  if (quotient_genus == 0 && big_m != n) return false;
  // (iii)
  if (s == 1) return false;
  if (quotient_genus == 0 && s < 3) return false;
  return true;
}

bool is_irreducible(const TotalValency& t) {
  if (t.order() < 2) return false;
  return quotient_signature(t).quotient_genus == 0 && t.orbit_count() == 3;
}

bool is_involution_datum(const TotalValency& t) { return t.order() == 2; }

Int involution_quotient_genus(const TotalValency& t) {
  if (!is_involution_datum(t)) {
    throw ValidationError("involution_quotient_genus: order is " + std::to_string(t.order()) +
                          ", not 2");
  }
  return quotient_signature(t).quotient_genus;
}

bool is_conjugate(const TotalValency& a, const TotalValency& b) { return a == b; }

Int standard_order_for_genus(Int genus, Parity parity) {
  if (genus < 1) throw ValidationError("standard_order_for_genus: genus must be >= 1");
  return parity == Parity::Odd ? 2 * genus + 1 : 2 * genus + 2;
}

}  // namespace totval
