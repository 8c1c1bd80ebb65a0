// Census of admissible total valencies, the involution-companion search, the
// h_{4g+2,2g+1} sweep and the centralizer trichotomy for irreducible maps.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "totval/valency.hpp"

namespace totval {

struct EnumerationQuery {
  Int genus = 1;
  std::optional<Int> order;
  std::optional<Int> quotient_genus;
  bool require_irreducible = false;
  /// Overrides the default search bound 4g+2 when order is not fixed.
  std::optional<Int> max_order;
  /// Look up an h_{n,p}^k witness for every entry (confirmed on the polygon).
  bool with_witness = true;
};

struct CensusFlags {
  bool nielsen = false;
  bool harvey = false;  // for genus 1: the sphere-quotient M = n substitute
  bool irreducible = false;
  bool operator==(const CensusFlags&) const = default;
};

/// h_{n,p}^k realizes the entry.
struct Witness {
  Int n = 0;
  Int p = 0;
  Int k = 0;
  bool operator==(const Witness&) const = default;
};

struct CensusEntry {
  TotalValency total_valency;
  Int quotient_genus = 0;
  CensusFlags flags;
  std::optional<Witness> realization;
};

/// Largest order searched when the query does not fix one.
Int default_order_bound(Int genus);

/// Every total valency of the given genus passing Riemann-Hurwitz, Nielsen
/// and Harvey (genus 1: the substitute) and the query's filters, sorted by
/// (order, quotient genus, valencies). Throws ValidationError for genus < 1.
std::vector<CensusEntry> enumerate(const EnumerationQuery& q);

/// Smallest generator (in TotalValency order) of the cyclic group <t>, i.e.
/// the minimum of power(t, u) over units u modulo the order.
TotalValency group_key(const TotalValency& t);

/// All generators power(t, u), gcd(u, n) = 1, sorted and deduplicated.
std::vector<TotalValency> group_generators(const TotalValency& t);

/// First h_{n,p}^k (n ascending, then p, then k) whose total valency equals
/// t, searching n up to max_n. Confirmed against the polygon oracle.
std::optional<Witness> find_witness(const TotalValency& t, Int max_n);

struct CompanionHit {
  TotalValency generator;  // group_key of the cyclic group
  TotalValency involution; // generator^{n/2}
  Int involution_quotient_genus = 0;
};

/// Irreducible cyclic actions of even order n whose element of order two
/// has torus quotient, one record per cyclic group. Requires 2 <= g_min <= g_max.
std::vector<CompanionHit> search_involution_companions(Int g_min, Int g_max);

struct RotationSweepRow {
  Int genus = 0;
  TotalValency rotation_power;  // h_{4g+2,2g+1}^{2g}
  TotalValency expected_rotation;  // h_{2g+1,1}
  TotalValency involution;  // h_{4g+2,2g+1}^{2g+1}
  bool conjugate = false;
  Int fixed_points = 0;
  Int quotient_genus = 0;
  bool pass() const {
    return conjugate && involution.order() == 2 && fixed_points == 2 * genus + 2 &&
           quotient_genus == 0;
  }
};

/// One row per genus 1..g_max. Requires g_max >= 1.
std::vector<RotationSweepRow> rotation_sweep(Int g_max);

enum class CentralizerKind { Distinct, AllEqual, Pair };

struct CentralizerStructure {
  CentralizerKind kind = CentralizerKind::Distinct;
  /// Valency numerators over the common denominator n, in canonical order.
  std::array<Int, 3> numerators{};
  /// PAIR only: parity of the order (n = 2g+1 or 2g+2).
  std::optional<Parity> parity;
  /// Group containing every finite subgroup of the centralizer: "<f>" for
  /// DISTINCT, "<h_{4g+2,2g+1}>" or "<h_{2g+2,1}, I>" (with g substituted)
  /// for PAIR, and a genus-1 marker for ALL_EQUAL.
  std::string enlarged_group;
};

/// Requires t irreducible of genus >= 1; throws ValidationError otherwise.
CentralizerStructure centralizer_structure(const TotalValency& t);

std::string to_string(CentralizerKind kind);

}  // namespace totval
