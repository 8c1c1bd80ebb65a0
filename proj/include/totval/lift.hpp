// Lifting a periodic torus map through a double branched covering
// Sigma_g -> T^2 whose deck involution commutes with the lift.
//
// Given the base map fbar (genus 1, order nbar) and a branch locus made of
// whole multiple orbits of fbar, classify_lift decides whether fbar lifts to
// an irreducible map f of Sigma_g commuting with the deck involution iota,
// and whether <f, iota> is cyclic. Each elimination is recorded in an audit
// trail with one of the rule names
//
//   brodd            an even-isotropy branch orbit forces <f, iota> cyclic
//   lemma1           ord f = 2 nbar (f^nbar = iota) or ord f = nbar
//   rh               Riemann-Hurwitz quotient genus not a nonnegative integer
//   nielsen          valency sum not an integer
//   power-projection f^nbar must be an involution with torus quotient
//   local-option     lifted orbit data allowed by the local model
//   inverse-symmetry problem solved through the inverse base map
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "totval/enumerator.hpp"
#include "totval/valency.hpp"

namespace totval {

/// A multiple orbit of the base map, identified by its position in the
/// canonical valency list.
struct BaseOrbit {
  Int index = 0;
  Valency valency;
  Int point_count = 0;
};

std::vector<BaseOrbit> base_orbits(const TotalValency& base);

class LiftProblem {
 public:
  /// Throws ValidationError unless base has genus 1 and the locus is a
  /// nonempty set of valid orbit indices covering an even number of points.
  static LiftProblem make(TotalValency base, std::vector<Int> locus);

  const TotalValency& base() const { return base_; }
  const std::vector<Int>& locus() const { return locus_; }
  bool branched(Int orbit) const;
  Int branch_point_count() const;
  /// 2g - 2 = number of branch points.
  Int upstairs_genus() const { return 1 + branch_point_count() / 2; }

 private:
  LiftProblem(TotalValency base, std::vector<Int> locus)
      : base_(std::move(base)), locus_(std::move(locus)) {}
  TotalValency base_;
  std::vector<Int> locus_;
};

/// Nonempty unions of whole multiple orbits with an even number of points.
/// Throws ValidationError unless the base has genus 1.
std::vector<std::vector<Int>> candidate_branch_loci(const TotalValency& base);

std::string locus_label(const TotalValency& base, const std::vector<Int>& locus);

struct AuditStep {
  std::string rule;
  std::string detail;
};

struct CyclicGroupLift {
  TotalValency generator;  // group_key
  std::vector<TotalValency> members;  // surviving lifts generating this group
};

/// The involution f^{n/2} o iota accompanying a non-cyclic lift.
struct CompanionInvolution {
  std::string expression;
  Int fixed_points = 0;
  Int quotient_genus = 0;
  bool hyperelliptic = false;
};

struct NonCyclicLift {
  TotalValency upstairs;
  CompanionInvolution companion;
};

enum class Verdict { NoLift, CyclicLifts, NonCyclicLift };

std::string to_string(Verdict v);

struct LiftOutcome {
  Verdict verdict = Verdict::NoLift;
  /// NoLift: the rule whose filter removed the last candidates.
  std::string reason;
  /// nbar = order of the base map; f^nbar is the deck involution for cyclic lifts.
  Int involution_power_index = 0;
  /// Surviving theta numerators of the cyclic lifts, one per base orbit in
  /// canonical base order (modulo the lifted isotropy).
  std::vector<std::vector<Int>> surviving_tuples;
  std::vector<CyclicGroupLift> cyclic;
  std::optional<NonCyclicLift> non_cyclic;
  std::vector<AuditStep> audit;

  bool fired(const std::string& rule) const;
};

/// Throws UnsupportedError when the non-cyclic branch needs a local lift
/// pattern outside the built-in table.
LiftOutcome classify_lift(const LiftProblem& problem);

struct LiftCase {
  std::string base_label;
  TotalValency base;
  std::vector<Int> locus;
  LiftOutcome outcome;
};

struct GroupRecord {
  bool cyclic = true;
  TotalValency generator;  // group_key of the cyclic part
  std::vector<std::string> aliases;  // h_{n,p} whose total valency generates the group
  std::vector<std::string> sources;
  std::optional<CompanionInvolution> companion;

  Int genus() const { return generator.genus(); }
  /// "<h_{n,p}>" or "<h_{n,p}, I>" using the first alias.
  std::string label() const;
};

struct InvolutionGroupReport {
  std::vector<LiftCase> cases;
  std::vector<CompanionHit> companions;
  std::vector<GroupRecord> records;
};

/// Runs every candidate locus over the irreducible torus maps h_{4,1},
/// h_{6,3}, h_{3,1}, merges the results with the companion search over
/// genera 2..companion_g_max, and groups everything by generated group.
InvolutionGroupReport involution_group_report(Int companion_g_max = 10);

/// h_{n,p} labels of the generators of <t> (same order as t).
std::vector<std::string> hnp_aliases(const TotalValency& t);

}  // namespace totval
