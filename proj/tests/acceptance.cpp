// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact (integer and rational arithmetic, no tolerances).
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "totval/enumerator.hpp"
#include "totval/format.hpp"
#include "totval/lift.hpp"
#include "totval/polygon.hpp"
#include "totval/verify.hpp"

using namespace totval;

namespace {

constexpr Int kOracleMaxN = 40;
constexpr Int kPowerMaxN = 24;
constexpr Int kCompanionMaxGenus = 10;
constexpr Int kSweepMaxGenus = 50;
constexpr Int kCentralizerMaxGenus = 10;
constexpr int kRandomEntries = 1000;
constexpr Int kPropertyPoolMaxGenus = 10;
constexpr std::uint64_t kSeed = 0x5eed2024;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

Outcome closed_form_vs_oracle() {
  Outcome o;
  Int cases = 0;
  for (Int n = 3; n <= kOracleMaxN; ++n) {
    for (Int p = 1; p < n; ++p) {
      const auto s = PolygonSurface::build(n, p);
      const Int genus = (n - gcd(n, p) - gcd(n, p + 1) + 1) / 2;
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(p) + ")";
      o.require(s.genus() == genus, tag + " genus");
      o.require(oracle_total_valency(s, 1) == hnp(n, p), tag + " total valency");
      ++cases;
    }
  }
  o.summary = std::to_string(cases) + " surfaces, 3 <= n <= " + std::to_string(kOracleMaxN);
  return o;
}

Outcome power_contract() {
  Outcome o;
  Int cases = 0;
  for (Int n = 3; n <= kPowerMaxN; ++n) {
    for (Int p = 1; p < n; ++p) {
      const auto s = PolygonSurface::build(n, p);
      const auto h = hnp(n, p);
      for (Int k = 1; k < n; ++k) {
        o.require(power(h, k) == oracle_total_valency(s, k),
                  "h_{" + std::to_string(n) + "," + std::to_string(p) + "}^" + std::to_string(k));
        ++cases;
      }
    }
  }
  o.summary = std::to_string(cases) + " powers, 3 <= n <= " + std::to_string(kPowerMaxN);
  return o;
}

Outcome torus_classification() {
  Outcome o;
  const std::set<std::string> sphere = {
      "[1,2; 1/2 + 1/2 + 1/2 + 1/2]", "[1,4; 1/4 + 1/4 + 1/2]", "[1,4; 3/4 + 3/4 + 1/2]",
      "[1,6; 1/6 + 1/3 + 1/2]",       "[1,3; 1/3 + 1/3 + 1/3]", "[1,3; 2/3 + 2/3 + 2/3]",
      "[1,6; 5/6 + 2/3 + 1/2]"};
  std::set<std::string> irreducible;
  for (const auto& t : {hnp(4, 1), power(hnp(4, 1), 3), hnp(6, 3), power(hnp(6, 3), 5), hnp(3, 1),
                        power(hnp(3, 1), 2)}) {
    irreducible.insert(to_text(t));
  }
  EnumerationQuery q;
  q.genus = 1;
  q.quotient_genus = 0;
  std::set<std::string> got;
  for (const auto& e : enumerate(q)) got.insert(to_text(e.total_valency));
  o.require(got == sphere, "sphere-quotient set differs");
  q.quotient_genus.reset();
  q.require_irreducible = true;
  std::set<std::string> got_irr;
  for (const auto& e : enumerate(q)) got_irr.insert(to_text(e.total_valency));
  o.require(got_irr == irreducible, "irreducible set differs");
  o.require(verify_brto().pass, "verify brto");
  o.summary = std::to_string(got.size()) + " sphere-quotient classes, " + std::to_string(got_irr.size()) +
              " irreducible";
  return o;
}

Outcome irr1_reproduction() {
  Outcome o;
  const auto r = verify_irr1(kCompanionMaxGenus);
  for (const auto& d : r.diff) o.require(false, d);
  o.require(r.pass, "verify irr1");
  const auto& rows = r.json["records"];
  o.require(rows.size() == 5, "record count " + std::to_string(rows.size()));
  const std::vector<std::pair<std::string, Int>> want = {
      {"<h_{6,1}, I>", 2}, {"<h_{8,1}>", 3}, {"<h_{8,5}>", 3}, {"<h_{12,3}>", 3}, {"<h_{12,2}>", 4}};
  std::set<std::pair<std::string, Int>> got;
  for (const auto& row : rows) got.emplace(row["label"].get<std::string>(), row["genus"].get<Int>());
  o.require(got == std::set<std::pair<std::string, Int>>(want.begin(), want.end()), "record labels");

  const auto hits = search_involution_companions(2, kCompanionMaxGenus);
  std::set<TotalValency> groups;
  for (const auto& h : hits) groups.insert(h.generator);
  std::set<TotalValency> expected = {group_key(hnp(6, 1)), group_key(hnp(8, 1)), group_key(hnp(8, 5)),
                                     group_key(hnp(12, 3)), group_key(hnp(12, 2))};
  o.require(groups == expected, "companion search hits differ");
  o.summary = std::to_string(rows.size()) + " group records, companion search 2 <= g <= " +
              std::to_string(kCompanionMaxGenus) + ": " + std::to_string(hits.size()) + " groups";
  return o;
}

bool has_audit(const LiftOutcome& out, const std::string& rule, const std::string& needle) {
  for (const auto& s : out.audit) {
    if (s.rule == rule && s.detail.find(needle) != std::string::npos) return true;
  }
  return false;
}

std::set<std::vector<Int>> tuples_of(const LiftOutcome& out) {
  return {out.surviving_tuples.begin(), out.surviving_tuples.end()};
}

Outcome proof_replay() {
  Outcome o;
  auto lift = [](const TotalValency& b, std::vector<Int> locus) {
    return classify_lift(LiftProblem::make(b, std::move(locus)));
  };
  const auto h41 = hnp(4, 1);
  const auto h63 = hnp(6, 3);

  auto a = lift(h41, {0, 1});
  o.require(a.verdict == Verdict::NoLift && a.reason == "power-projection", "h41 {x,y} verdict");
  o.require(has_audit(a, "power-projection", "hyperelliptic"), "h41 {x,y} hyperelliptic elimination");

  auto b = lift(h41, {2});
  o.require(b.verdict == Verdict::NoLift && b.reason == "nielsen", "h41 {z} verdict");

  auto c = lift(h41, {0, 1, 2});
  std::set<std::vector<Int>> want_c;
  for (Int k : {1, 3, 5, 7}) {
    want_c.insert({k, k, (3 * k) % 4});
    want_c.insert({k, (5 * k) % 8, k % 4});
  }
  o.require(c.verdict == Verdict::CyclicLifts && tuples_of(c) == want_c, "h41 {x,y,z} tuples (k,k,3k),(k,5k,k)");

  // tuples are stored in base orbit order (x, y, z)
  auto d = lift(h63, {0, 2});
  std::set<std::vector<Int>> want_d;
  for (Int k : {1, 5, 7, 11}) want_d.insert({k, (2 * k) % 3, k % 4});
  o.require(d.verdict == Verdict::CyclicLifts && tuples_of(d) == want_d, "h63 {x,z} tuples (k,k,2k)");

  auto e = lift(h63, {0, 1, 2});
  std::set<std::vector<Int>> want_e;
  for (Int k : {1, 5, 7, 11}) want_e.insert({k, k % 6, (3 * k) % 4});
  o.require(e.verdict == Verdict::CyclicLifts && tuples_of(e) == want_e, "h63 {x,y,z} tuples (k,k,3k)");

  auto f = lift(h63, {1});
  o.require(f.verdict == Verdict::NonCyclicLift && f.non_cyclic &&
                to_text(f.non_cyclic->upstairs) == "[2,6; 1/6 + 1/6 + 2/3]" && f.non_cyclic->companion.hyperelliptic,
            "h63 {y} non-cyclic lift");
  o.require(has_audit(f, "nielsen", "0 of"), "h63 {y} order-12 Nielsen elimination");
  o.require(has_audit(f, "rh", "g' = -1/2"), "h63 {y} g' = -1/2 elimination");
  o.require(f.fired("local-option") && f.fired("brodd") && f.fired("lemma1"), "h63 {y} audit rules");

  o.summary = "6 cases, 3 explicit eliminations";
  return o;
}

Outcome rotation_sweep_check() {
  Outcome o;
  Int n = 0;
  for (const auto& row : rotation_sweep(kSweepMaxGenus)) {
    const Int g = row.genus;
    o.require(is_conjugate(power(hnp(4 * g + 2, 2 * g + 1), 2 * g), hnp(2 * g + 1, 1)),
              "g=" + std::to_string(g) + " rotation");
    const auto inv = power(hnp(4 * g + 2, 2 * g + 1), 2 * g + 1);
    o.require(is_involution_datum(inv) && static_cast<Int>(inv.orbit_count()) == 2 * g + 2 &&
                  quotient_signature(inv).quotient_genus == 0,
              "g=" + std::to_string(g) + " involution");
    o.require(row.pass(), "g=" + std::to_string(g) + " sweep row");
    ++n;
  }
  o.require(n == kSweepMaxGenus, "row count");
  o.summary = "1 <= g <= " + std::to_string(kSweepMaxGenus);
  return o;
}

Outcome centralizer() {
  Outcome o;
  Int entries = 0;
  for (Int g = 1; g <= kCentralizerMaxGenus; ++g) {
    EnumerationQuery q;
    q.genus = g;
    q.require_irreducible = true;
    q.with_witness = false;
    const auto odd = group_key(hnp(2 * g + 1, 1));
    const auto even = group_key(hnp(2 * g + 2, 1));
    for (const auto& e : enumerate(q)) {
      const auto& t = e.total_valency;
      const std::string tag = to_text(t);
      CentralizerStructure s;
      try {
        s = centralizer_structure(t);
      } catch (const std::exception& ex) {
        o.require(false, tag + ": " + ex.what());
        continue;
      }
      const auto key = group_key(t);
      if (s.kind == CentralizerKind::AllEqual) o.require(g == 1, tag + " ALL_EQUAL above genus 1");
      if (g >= 2) {
        const bool pair = key == odd || key == even;
        o.require((s.kind == CentralizerKind::Pair) == pair, tag + " PAIR membership");
        o.require(pair || s.kind == CentralizerKind::Distinct, tag + " not DISTINCT");
        ++entries;
      }
      o.require(centralizer_structure(inverse(t)).kind == s.kind, tag + " inversion");
    }
  }
  o.require(verify_centralizer(kCentralizerMaxGenus).pass, "verify centralizer");
  o.summary = std::to_string(entries) + " irreducible classes, 2 <= g <= " + std::to_string(kCentralizerMaxGenus);
  return o;
}

Outcome properties() {
  Outcome o;
  std::vector<TotalValency> pool;
  for (Int g = 1; g <= kPropertyPoolMaxGenus; ++g) {
    EnumerationQuery q;
    q.genus = g;
    q.with_witness = false;
    for (auto& e : enumerate(q)) pool.push_back(e.total_valency);
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < kRandomEntries; ++i) {
    const auto& t = pool[pick(rng)];
    const std::string tag = to_text(t);
    for (Int k = 0; k <= t.order(); ++k) {
      const auto u = power(t, k);
      o.require(nielsen_check(u.valencies()), tag + "^" + std::to_string(k) + " Nielsen");
      const auto qg = rh_quotient_genus(u.genus(), u.order(), u.branch_indices());
      o.require(qg.is_integer() && qg >= Fraction(0), tag + "^" + std::to_string(k) + " RH");
      if (is_involution_datum(u)) o.require(u.orbit_count() % 2 == 0, tag + " odd involution orbit count");
    }
    std::uniform_int_distribution<Int> exp(0, 2 * t.order());
    const Int a = exp(rng), b = exp(rng);
    o.require(power(power(t, a), b) == power(t, a * b), tag + " composition");
    o.require(to_text(parse_text(tag)) == tag, tag + " text round trip");
    o.require(from_json(to_json(t)) == t && to_json(parse_total_valency(to_json(t).dump())) == to_json(t),
              tag + " json round trip");
  }
  o.summary = std::to_string(kRandomEntries) + " entries from a pool of " + std::to_string(pool.size()) +
              ", seed " + std::to_string(kSeed);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed form vs polygon oracle", closed_form_vs_oracle},
      {"power contract vs polygon oracle", power_contract},
      {"torus classification", torus_classification},
      {"commuting-involution group list", irr1_reproduction},
      {"lift case replay", proof_replay},
      {"h_{4g+2,2g+1} sweep", rotation_sweep_check},
      {"centralizer trichotomy", centralizer},
      {"property suite", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%lld ms)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.summary.c_str(), static_cast<long long>(ms));
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
