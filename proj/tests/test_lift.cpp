#include "doctest.h"
#include "totval/format.hpp"
#include "totval/lift.hpp"

#include <algorithm>
#include <set>

using namespace totval;

namespace {

LiftOutcome lift(const TotalValency& base, std::vector<Int> locus) {
  return classify_lift(LiftProblem::make(base, std::move(locus)));
}

std::set<std::string> generator_texts(const LiftOutcome& o) {
  std::set<std::string> out;
  for (const auto& g : o.cyclic) out.insert(to_text(g.generator));
  return out;
}

std::set<std::vector<Int>> tuples(const LiftOutcome& o) {
  return {o.surviving_tuples.begin(), o.surviving_tuples.end()};
}

}  // namespace

TEST_CASE("branch loci of the torus maps") {
  CHECK(candidate_branch_loci(hnp(4, 1)) == std::vector<std::vector<Int>>{{2}, {0, 1}, {0, 1, 2}});
  CHECK(candidate_branch_loci(hnp(6, 3)) == std::vector<std::vector<Int>>{{1}, {0, 2}, {0, 1, 2}});
  CHECK(candidate_branch_loci(hnp(3, 1)) == std::vector<std::vector<Int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(candidate_branch_loci(hnp(8, 1)), ValidationError);
}

TEST_CASE("lift problem validation") {
  CHECK_THROWS_AS(LiftProblem::make(hnp(8, 1), {0}), ValidationError);
  CHECK_THROWS_AS(LiftProblem::make(hnp(4, 1), {}), ValidationError);
  CHECK_THROWS_AS(LiftProblem::make(hnp(4, 1), {0}), ValidationError);
  CHECK_THROWS_AS(LiftProblem::make(hnp(4, 1), {3}), ValidationError);
  CHECK_THROWS_AS(LiftProblem::make(hnp(4, 1), {0, 0}), ValidationError);
  const auto p = LiftProblem::make(hnp(4, 1), {1, 0, 2});
  CHECK(p.locus() == std::vector<Int>{0, 1, 2});
  CHECK(p.branch_point_count() == 4);
  CHECK(p.upstairs_genus() == 3);
}

TEST_CASE("h_{4,1} over its two fixed points") {
  const auto o = lift(hnp(4, 1), {0, 1});
  CHECK(o.verdict == Verdict::NoLift);
  CHECK(o.reason == "power-projection");
  CHECK(o.fired("brodd"));
  CHECK(o.fired("power-projection"));
  bool hyperelliptic = false;
  for (const auto& s : o.audit) {
    if (s.rule == "power-projection" && s.detail.find("hyperelliptic") != std::string::npos) hyperelliptic = true;
  }
  CHECK(hyperelliptic);
}

TEST_CASE("h_{4,1} over the 2-point orbit") {
  const auto o = lift(hnp(4, 1), {2});
  CHECK(o.verdict == Verdict::NoLift);
  CHECK(o.reason == "nielsen");
  CHECK_FALSE(o.fired("power-projection"));
}

TEST_CASE("h_{4,1} over all multiple orbits") {
  const auto o = lift(hnp(4, 1), {0, 1, 2});
  CHECK(o.verdict == Verdict::CyclicLifts);
  CHECK(o.involution_power_index == 4);
  CHECK(generator_texts(o) == std::set<std::string>{"[3,8; 1/8 + 1/8 + 3/4]", "[3,8; 1/8 + 5/8 + 1/4]"});
  // (k,k,3k) or (k,5k,k) mod 8 for k odd: 8 tuples over indices (8,8,4)
  std::set<std::vector<Int>> want;
  for (Int k : {1, 3, 5, 7}) {
    want.insert({k % 8, k % 8, (3 * k) % 4});
    want.insert({k % 8, (5 * k) % 8, k % 4});
  }
  CHECK(tuples(o) == want);
  for (const auto& g : o.cyclic) {
    for (const auto& t : g.members) {
      CHECK(is_irreducible(t));
      const auto inv = power(t, t.order() / 2);
      CHECK(involution_quotient_genus(inv) == 1);
      CHECK(static_cast<Int>(inv.orbit_count()) == 2 * t.genus() - 2);
      CHECK(quotient_signature(t).branch_indices == std::vector<Int>{8, 8, 4});
    }
  }
}

TEST_CASE("h_{6,3} over the fixed point and the 3-point orbit") {
  const auto o = lift(hnp(6, 3), {0, 2});
  CHECK(o.verdict == Verdict::CyclicLifts);
  CHECK(generator_texts(o) == std::set<std::string>{"[3,12; 1/12 + 1/4 + 2/3]"});
  // (k,k,2k) mod 12 over (x, z, y); tuples here are in base order (x, y, z)
  std::set<std::vector<Int>> want;
  for (Int k : {1, 5, 7, 11}) want.insert({k, (2 * k) % 3, k % 4});
  CHECK(tuples(o) == want);
  for (const auto& g : o.cyclic) {
    for (const auto& t : g.members) CHECK(quotient_signature(t).branch_indices == std::vector<Int>{12, 4, 3});
  }
}

TEST_CASE("h_{6,3} over all multiple orbits") {
  const auto o = lift(hnp(6, 3), {0, 1, 2});
  CHECK(o.verdict == Verdict::CyclicLifts);
  CHECK(generator_texts(o) == std::set<std::string>{"[4,12; 1/12 + 1/6 + 3/4]"});
  // (k,k,3k) mod 12 over (x, y, z)
  std::set<std::vector<Int>> want;
  for (Int k : {1, 5, 7, 11}) want.insert({k, k % 6, (3 * k) % 4});
  CHECK(tuples(o) == want);
  for (const auto& g : o.cyclic) {
    for (const auto& t : g.members) {
      CHECK(t.genus() == 4);
      CHECK(quotient_signature(t).branch_indices == std::vector<Int>{12, 6, 4});
    }
  }
}

TEST_CASE("h_{6,3} over the 2-point orbit is non-cyclic") {
  const auto o = lift(hnp(6, 3), {1});
  CHECK(o.verdict == Verdict::NonCyclicLift);
  REQUIRE(o.non_cyclic.has_value());
  CHECK(to_text(o.non_cyclic->upstairs) == "[2,6; 1/6 + 1/6 + 2/3]");
  CHECK(o.non_cyclic->companion.expression == "f^3 o iota");
  CHECK(o.non_cyclic->companion.fixed_points == 6);
  CHECK(o.non_cyclic->companion.quotient_genus == 0);
  CHECK(o.non_cyclic->companion.hyperelliptic);
  CHECK(o.cyclic.empty());
  CHECK(o.fired("local-option"));
  // the order-12 attempt dies on Nielsen, the two-orbit option on g' = -1/2
  bool nielsen = false, half = false;
  for (const auto& s : o.audit) {
    if (s.rule == "nielsen" && s.detail.find("0 of") == 0) nielsen = true;
    if (s.rule == "rh" && s.detail.find("g' = -1/2") != std::string::npos) half = true;
  }
  CHECK(nielsen);
  CHECK(half);
}

TEST_CASE("h_{3,1} over two fixed points") {
  for (const auto& locus : candidate_branch_loci(hnp(3, 1))) {
    const auto o = lift(hnp(3, 1), locus);
    CHECK(o.verdict == Verdict::CyclicLifts);
    CHECK(generator_texts(o) == std::set<std::string>{"[2,6; 1/6 + 1/6 + 2/3]"});
    CHECK(o.fired("lemma1"));
  }
}

TEST_CASE("inverse base map uses the mirrored table") {
  const auto o = lift(power(hnp(6, 3), 5), {1});
  CHECK(o.verdict == Verdict::NonCyclicLift);
  REQUIRE(o.non_cyclic.has_value());
  CHECK(o.non_cyclic->upstairs == inverse(parse_text("[2,6; 1/6 + 1/6 + 2/3]")));
  CHECK(o.fired("inverse-symmetry"));
  CHECK(o.non_cyclic->companion.hyperelliptic);
}

TEST_CASE("every genus-1 base is decided") {
  EnumerationQuery q;
  q.genus = 1;
  q.quotient_genus = 0;
  for (const auto& e : enumerate(q)) {
    for (const auto& locus : candidate_branch_loci(e.total_valency)) {
      CHECK_NOTHROW(lift(e.total_valency, locus));
    }
  }
}

TEST_CASE("involution group report") {
  const auto rep = involution_group_report(10);
  CHECK(rep.cases.size() == 9);
  REQUIRE(rep.records.size() == 5);
  std::vector<std::string> labels;
  for (const auto& r : rep.records) labels.push_back(r.label());
  CHECK(labels == std::vector<std::string>{"<h_{6,1}, I>", "<h_{8,1}>", "<h_{8,2}>", "<h_{12,3}>", "<h_{12,2}>"});
  CHECK_FALSE(rep.records[0].cyclic);
  CHECK(rep.records[0].companion.has_value());
  CHECK(rep.records[4].genus() == 4);
  // both search paths agree on every cyclic group
  for (const auto& c : rep.cases) {
    for (const auto& g : c.outcome.cyclic) {
      CHECK(std::any_of(rep.companions.begin(), rep.companions.end(),
                        [&](const CompanionHit& h) { return h.generator == g.generator; }));
    }
  }
  CHECK(hnp_aliases(hnp(8, 5)) == std::vector<std::string>{"h_{8,2}", "h_{8,5}"});
}
