#include "totval/enumerator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "totval/polygon.hpp"

namespace totval {

namespace {

std::vector<Int> divisors_descending(Int n) {
  std::vector<Int> out;
  for (Int d = n; d >= 2; --d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Multisets (listed non-increasingly) of divisors whose Riemann-Hurwitz
// defects n - n/lambda sum to exactly `target`.
void lambda_multisets(Int n, const std::vector<Int>& divisors, std::size_t from, Int target,
                      std::vector<Int>& current, std::vector<std::vector<Int>>& out) {
  if (target == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < divisors.size(); ++i) {
    const Int defect = n - n / divisors[i];
    if (defect > target) continue;
    current.push_back(divisors[i]);
    lambda_multisets(n, divisors, i, target - defect, current, out);
    current.pop_back();
  }
}

std::vector<Int> units_mod(Int m) {
  std::vector<Int> out;
  for (Int u = 1; u < m; ++u) {
    if (gcd(u, m) == 1) out.push_back(u);
  }
  return out;
}

// Non-decreasing sequences of length `count` drawn from `units`.
void unit_multisets(const std::vector<Int>& units, std::size_t from, Int count,
                    std::vector<Int>& current, std::vector<std::vector<Int>>& out) {
  if (count == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < units.size(); ++i) {
    current.push_back(units[i]);
    unit_multisets(units, i, count - 1, current, out);
    current.pop_back();
  }
}

bool admissible_indices(Int genus, Int n, Int quotient_genus, const std::vector<Int>& indices) {
  if (genus >= 2) return harvey_check(n, quotient_genus, indices);
  // Genus 1: Harvey's hypothesis g > 1 fails; keep only M = n for sphere quotients.
  if (quotient_genus != 0) return true;
  Int big_m = 1;
  for (Int l : indices) big_m = lcm(big_m, l);
  return big_m == n;
}

// All theta assignments for a lambda multiset that pass Nielsen integrality.
std::vector<std::vector<Valency>> theta_assignments(Int n, const std::vector<Int>& indices) {
  struct Block {
    Int lambda;
    std::vector<std::vector<Int>> choices;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < indices.size();) {
    std::size_t j = i;
    while (j < indices.size() && indices[j] == indices[i]) ++j;
    Block b{indices[i], {}};
    std::vector<Int> scratch;
    unit_multisets(units_mod(b.lambda), 0, static_cast<Int>(j - i), scratch, b.choices);
    blocks.push_back(std::move(b));
    i = j;
  }

  std::vector<std::vector<Valency>> out;
  std::vector<std::size_t> pick(blocks.size(), 0);
  while (true) {
    Int residue = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (Int theta : blocks[b].choices[pick[b]]) {
        residue = mod(residue + theta * (n / blocks[b].lambda), n);
      }
    }
    if (residue == 0) {
      std::vector<Valency> vs;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Int theta : blocks[b].choices[pick[b]]) vs.push_back(Valency::make(theta, blocks[b].lambda));
      }
      out.push_back(std::move(vs));
    }
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      if (++pick[b] < blocks[b].choices.size()) break;
      pick[b] = 0;
    }
    if (b == blocks.size()) break;
  }
  return out;
}

bool oracle_confirms(const TotalValency& t, const Witness& w) {
  return oracle_total_valency(PolygonSurface::build(w.n, w.p), w.k) == t;
}

// Closed-form table of every h_{N,p}^k of the given genus, N <= max_n.
std::map<TotalValency, Witness> witness_table(Int genus, Int max_n) {
  std::map<TotalValency, Witness> table;
  for (Int n = 3; n <= max_n; ++n) {
    for (Int p = 1; p < n; ++p) {
      if (hnp_genus(n, p) != genus) continue;
      const auto base = hnp(n, p);
      for (Int k = 1; k < n; ++k) table.emplace(power(base, k), Witness{n, p, k});
    }
  }
  return table;
}

}  // namespace

Int default_order_bound(Int genus) { return 4 * genus + 2; }

std::vector<CensusEntry> enumerate(const EnumerationQuery& q) {
  if (q.genus < 1) throw ValidationError("enumerate: genus must be >= 1");
  if (q.order && *q.order < 2) throw ValidationError("enumerate: order must be >= 2");
  if (q.max_order && *q.max_order < 2) throw ValidationError("enumerate: max order must be >= 2");
  if (q.quotient_genus && *q.quotient_genus < 0) {
    throw ValidationError("enumerate: quotient genus must be nonnegative");
  }
  const Int g = q.genus;
  const Int lo = q.order.value_or(2);
  const Int hi = q.order.value_or(q.max_order.value_or(default_order_bound(g)));

  std::vector<CensusEntry> out;
  for (Int n = lo; n <= hi; ++n) {
    const auto divisors = divisors_descending(n);
    for (Int qg = 0;; ++qg) {
      const Int target = 2 * g - 2 + 2 * n - 2 * n * qg;
      if (target < 0) break;
      if (q.quotient_genus && *q.quotient_genus != qg) continue;
      std::vector<std::vector<Int>> multisets;
      std::vector<Int> scratch;
      lambda_multisets(n, divisors, 0, target, scratch, multisets);
      for (const auto& indices : multisets) {
        const bool irreducible = qg == 0 && indices.size() == 3;
        if (q.require_irreducible && !irreducible) continue;
        if (!admissible_indices(g, n, qg, indices)) continue;
        for (auto& vs : theta_assignments(n, indices)) {
          CensusEntry e{TotalValency::make(g, n, std::move(vs)), qg, {true, true, irreducible},
                        std::nullopt};
          out.push_back(std::move(e));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.total_valency.order() != b.total_valency.order()) {
      return a.total_valency.order() < b.total_valency.order();
    }
    if (a.quotient_genus != b.quotient_genus) return a.quotient_genus < b.quotient_genus;
    return a.total_valency < b.total_valency;
  });

  if (q.with_witness) {
    const auto table = witness_table(g, std::max(hi, default_order_bound(g)));
    for (auto& e : out) {
      auto it = table.find(e.total_valency);
      if (it == table.end()) continue;
      if (!oracle_confirms(e.total_valency, it->second)) {
        throw std::logic_error("polygon oracle disagrees with closed form for " +
                               std::to_string(it->second.n) + "," + std::to_string(it->second.p));
      }
      e.realization = it->second;
    }
  }
  return out;
}

std::vector<TotalValency> group_generators(const TotalValency& t) {
  std::vector<TotalValency> out;
  const Int n = t.order();
  if (n == 1) return {t};
  for (Int u = 1; u < n; ++u) {
    if (gcd(u, n) == 1) out.push_back(power(t, u));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TotalValency group_key(const TotalValency& t) { return group_generators(t).front(); }

std::optional<Witness> find_witness(const TotalValency& t, Int max_n) {
  for (Int n = std::max<Int>(3, t.order()); n <= max_n; ++n) {
    if (n % t.order() != 0) continue;
    for (Int p = 1; p < n; ++p) {
      if (hnp_genus(n, p) != t.genus()) continue;
      const auto base = hnp(n, p);
      for (Int k = 1; k < n; ++k) {
        if (n / gcd(n, k) != t.order()) continue;
        if (power(base, k) == t) {
          Witness w{n, p, k};
          if (!oracle_confirms(t, w)) throw std::logic_error("polygon oracle disagrees with closed form");
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<CompanionHit> search_involution_companions(Int g_min, Int g_max) {
  if (g_min < 2 || g_max < g_min) {
    throw ValidationError("search_involution_companions requires 2 <= g_min <= g_max");
  }
  std::vector<CompanionHit> out;
  for (Int g = g_min; g <= g_max; ++g) {
    EnumerationQuery q;
    q.genus = g;
    q.require_irreducible = true;
    q.with_witness = false;
    std::vector<TotalValency> seen;
    for (const auto& e : enumerate(q)) {
      const auto& t = e.total_valency;
      if (t.order() % 2 != 0) continue;
      const auto inv = power(t, t.order() / 2);
      if (!is_involution_datum(inv) || involution_quotient_genus(inv) != 1) continue;
      auto key = group_key(t);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      auto key_inv = power(key, key.order() / 2);
      out.push_back({key, key_inv, involution_quotient_genus(key_inv)});
    }
  }
  std::sort(out.begin(), out.end(), [](const CompanionHit& a, const CompanionHit& b) {
    if (a.generator.genus() != b.generator.genus()) return a.generator.genus() < b.generator.genus();
    return a.generator < b.generator;
  });
  return out;
}

std::vector<RotationSweepRow> rotation_sweep(Int g_max) {
  if (g_max < 1) throw ValidationError("rotation_sweep requires g_max >= 1");
  std::vector<RotationSweepRow> rows;
  for (Int g = 1; g <= g_max; ++g) {
    const auto h = hnp(4 * g + 2, 2 * g + 1);
    auto rot = power(h, 2 * g);
    auto expected = hnp(2 * g + 1, 1);
    auto inv = power(h, 2 * g + 1);
    RotationSweepRow row{g, rot, expected, inv, is_conjugate(rot, expected),
                    static_cast<Int>(inv.orbit_count()), quotient_signature(inv).quotient_genus};
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace totval
