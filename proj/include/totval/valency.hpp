// Valencies, total valencies and the closed-form valency calculus of
// periodic surface maps.
//
// A periodic orientation-preserving map f of order n on a closed surface of
// genus g is determined up to conjugacy by its total valency
//
//   [g, n; theta_1/lambda_1 + ... + theta_s/lambda_s]
//
// with one valency per multiple orbit: lambda is the order of the isotropy
// group and theta the inverse modulo lambda of the local clockwise rotation
// numerator mu. Free orbits are never stored.
#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "totval/arith.hpp"

namespace totval {

class Valency {
 public:
  /// Throws ValidationError unless lambda >= 2, 1 <= theta < lambda and
  /// gcd(theta, lambda) = 1.
  static Valency make(Int theta, Int lambda);

  Int theta() const { return theta_; }
  Int lambda() const { return lambda_; }
  /// Local clockwise rotation numerator, mu * theta = 1 (mod lambda).
  Int mu() const { return inverse_mod(theta_, lambda_); }
  Fraction value() const { return {theta_, lambda_}; }
  /// (lambda - theta)/lambda, the valency of the same orbit under f^{-1}.
  Valency inverted() const { return {lambda_ - theta_, lambda_}; }

  bool operator==(const Valency&) const = default;
  /// Canonical order: descending lambda, then ascending theta.
  std::strong_ordering operator<=>(const Valency& o) const {
    if (auto c = o.lambda_ <=> lambda_; c != 0) return c;
    return theta_ <=> o.theta_;
  }

  std::string to_string() const;

 private:
  Valency(Int theta, Int lambda) : theta_(theta), lambda_(lambda) {}
  Int theta_;
  Int lambda_;
};

std::ostream& operator<<(std::ostream& os, const Valency& v);

/// Riemann-Hurwitz quotient genus of an n-fold cyclic branched covering of a
/// genus-g surface with the given branch indices, as an exact rational.
Fraction rh_quotient_genus(Int genus, Int order, std::span<const Int> indices);

/// True iff the valencies sum to an integer.
bool nielsen_check(std::span<const Valency> valencies);

class TotalValency {
 public:
  /// Validates and canonicalizes. Throws ValidationError on a violated
  /// invariant (lambda not dividing order, Nielsen sum non-integral) and
  /// InconsistentDataError when Riemann-Hurwitz gives no valid quotient genus.
  static TotalValency make(Int genus, Int order, std::vector<Valency> valencies);
  /// [g, 1; ] -- the identity map.
  static TotalValency identity(Int genus);

  Int genus() const { return genus_; }
  Int order() const { return order_; }
  std::span<const Valency> valencies() const { return valencies_; }
  std::size_t orbit_count() const { return valencies_.size(); }
  /// Isotropy orders in canonical order.
  std::vector<Int> branch_indices() const;

  bool operator==(const TotalValency&) const = default;
  /// Lexicographic on (order, genus, canonical valency list).
  std::strong_ordering operator<=>(const TotalValency& o) const;

 private:
  TotalValency(Int genus, Int order, std::vector<Valency> valencies)
      : genus_(genus), order_(order), valencies_(std::move(valencies)) {}
  Int genus_;
  Int order_;
  std::vector<Valency> valencies_;
};

struct QuotientSignature {
  Int quotient_genus = 0;
  std::vector<Int> branch_indices;  // descending
  bool operator==(const QuotientSignature&) const = default;
};

/// Genus of the surface built from the 2n-gon with shift p.
Int hnp_genus(Int n, Int p);

/// Total valency of the rotation h_{n,p}: [g, n; 1/n + p/n + (n-p-1)/n] with
/// fractions reduced and integral entries dropped. Requires n >= 3, 1 <= p < n.
TotalValency hnp(Int n, Int p);

/// Total valency of f^k. k is reduced modulo the order; k = 0 gives the
/// identity datum. Throws ValidationError for negative k.
TotalValency power(const TotalValency& t, Int k);

TotalValency inverse(const TotalValency& t);

/// Throws InconsistentDataError if g' is not a nonnegative integer (cannot
/// happen for a TotalValency built through make()).
QuotientSignature quotient_signature(const TotalValency& t);

/// Harvey's necessary conditions for the branch data of a cyclic covering.
bool harvey_check(Int n, Int quotient_genus, std::span<const Int> indices);

/// Sphere quotient with exactly three branch orbits. The identity is reducible.
bool is_irreducible(const TotalValency& t);

bool is_involution_datum(const TotalValency& t);
/// Throws ValidationError when t is not an involution.
Int involution_quotient_genus(const TotalValency& t);

bool is_conjugate(const TotalValency& a, const TotalValency& b);

enum class Parity { Odd, Even };

/// Order of h_{n,1} on a genus-g surface: 2g+1 (odd) or 2g+2 (even).
Int standard_order_for_genus(Int genus, Parity parity);

}  // namespace totval
