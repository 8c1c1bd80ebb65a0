#include "totval/lift.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "totval/format.hpp"

namespace totval {

namespace {

std::string join_ints(const std::vector<Int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<Int> units_mod(Int m) {
  std::vector<Int> out;
  for (Int u = 1; u < m; ++u) {
    if (gcd(u, m) == 1) out.push_back(u);
  }
  return out;
}

Fraction quotient_genus_of(Int genus, Int order, const std::vector<Valency>& vs) {
  std::vector<Int> indices;
  for (const auto& v : vs) indices.push_back(v.lambda());
  return rh_quotient_genus(genus, order, indices);
}

bool valid_quotient(const Fraction& qg) { return qg.is_integer() && qg.num() >= 0; }

// One orbit upstairs lying over a base orbit; no valency means free.
struct UpstairsOrbit {
  std::optional<Valency> valency;
  Int point_count = 0;
};
using LocalOption = std::vector<UpstairsOrbit>;

struct CyclicResult {
  std::vector<std::vector<Int>> tuples;
  std::vector<TotalValency> lifts;
  std::string last_elimination;
};

// Lifts with f^nbar = iota: a branched orbit of base isotropy l has upstairs
// isotropy 2l, an unbranched one keeps isotropy l; each lifts to one orbit.
CyclicResult run_cyclic(const LiftProblem& prob, std::vector<AuditStep>& audit) {
  CyclicResult res;
  const auto orbits = base_orbits(prob.base());
  const Int nbar = prob.base().order();
  const Int n = 2 * nbar;
  const Int g = prob.upstairs_genus();

  std::vector<Int> indices;
  for (const auto& o : orbits) {
    indices.push_back(prob.branched(o.index) ? 2 * o.valency.lambda() : o.valency.lambda());
  }
  audit.push_back({"lemma1", "f^" + std::to_string(nbar) + " = iota, so n = 2*" +
                                 std::to_string(nbar) + " = " + std::to_string(n) +
                                 "; genus " + std::to_string(g) + ", branch indices (" +
                                 join_ints(indices) + ")"});

  const Fraction qg = rh_quotient_genus(g, n, indices);
  if (!valid_quotient(qg)) {
    audit.push_back({"rh", "indices (" + join_ints(indices) + ") give g' = " + qg.to_string()});
    res.last_elimination = "rh";
    return res;
  }
  audit.push_back({"rh", "indices (" + join_ints(indices) + ") give g' = " + qg.to_string()});

  std::vector<std::vector<Int>> unit_sets;
  std::size_t total = 1;
  for (Int l : indices) {
    unit_sets.push_back(units_mod(l));
    total *= unit_sets.back().size();
  }

  std::vector<std::vector<Int>> nielsen_ok;
  std::vector<std::size_t> pick(indices.size(), 0);
  while (true) {
    std::vector<Int> tuple;
    Fraction sum;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      tuple.push_back(unit_sets[i][pick[i]]);
      sum += Fraction(tuple.back(), indices[i]);
    }
    if (sum.is_integer()) nielsen_ok.push_back(std::move(tuple));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < unit_sets[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  {
    std::ostringstream os;
    os << nielsen_ok.size() << " of " << total << " theta tuples over (" << join_ints(indices)
       << ") have integral valency sum";
    audit.push_back({"nielsen", os.str()});
  }
  if (nielsen_ok.empty()) {
    res.last_elimination = "nielsen";
    return res;
  }

  std::map<TotalValency, std::string> rejected;
  for (const auto& tuple : nielsen_ok) {
    std::vector<Valency> vs;
    for (std::size_t i = 0; i < tuple.size(); ++i) vs.push_back(Valency::make(tuple[i], indices[i]));
    auto t = TotalValency::make(g, n, std::move(vs));
    const auto proj = power(t, nbar);
    if (is_involution_datum(proj) && involution_quotient_genus(proj) == 1) {
      res.tuples.push_back(tuple);
      if (std::find(res.lifts.begin(), res.lifts.end(), t) == res.lifts.end()) res.lifts.push_back(t);
    } else if (!rejected.count(t)) {
      std::ostringstream os;
      os << to_text(t) << ": f^" << nbar << " = " << to_text(proj);
      if (is_involution_datum(proj)) {
        const Int q = involution_quotient_genus(proj);
        os << " has " << proj.orbit_count() << " fixed points, quotient genus " << q;
        if (q == 0) os << " (hyperelliptic)";
      } else {
        os << " is not an involution";
      }
      os << "; needs quotient genus 1";
      rejected.emplace(t, os.str());
    }
  }
  for (const auto& [t, why] : rejected) audit.push_back({"power-projection", why});
  if (res.lifts.empty()) {
    res.last_elimination = "power-projection";
    return res;
  }
  std::sort(res.lifts.begin(), res.lifts.end());
  std::ostringstream os;
  os << res.tuples.size() << " tuples survive: ";
  for (std::size_t i = 0; i < res.lifts.size(); ++i) os << (i ? ", " : "") << to_text(res.lifts[i]);
  audit.push_back({"power-projection", os.str()});
  return res;
}

// Local lift patterns of the non-cyclic case (ord f = nbar, f fixing the
// preimages of one base fixed point). Keyed by base valency and whether the
// orbit is branched. A branch point of valency 1/3 lifts to a rotation whose
// square is the base rotation: valency 2/3 or 1/6. An unbranched orbit of
// valency 1/2 lifts to a free orbit or to two orbits of valency 1/2.
std::optional<std::vector<LocalOption>> table_options(const BaseOrbit& o, bool branched) {
  const Int c = o.point_count;
  const Valency& v = o.valency;
  if (branched && v == Valency::make(1, 3)) {
    return std::vector<LocalOption>{{{Valency::make(2, 3), c}}, {{Valency::make(1, 6), c}}};
  }
  if (!branched && v == Valency::make(1, 2)) {
    return std::vector<LocalOption>{{{std::nullopt, 2 * c}},
                                    {{Valency::make(1, 2), c}, {Valency::make(1, 2), c}}};
  }
  return std::nullopt;
}

std::vector<LocalOption> local_options(const BaseOrbit& o, bool branched, std::vector<AuditStep>& audit) {
  if (auto opts = table_options(o, branched)) return *opts;
  BaseOrbit mirror = o;
  mirror.valency = o.valency.inverted();
  if (auto opts = table_options(mirror, branched)) {
    for (auto& opt : *opts) {
      for (auto& up : opt) {
        if (up.valency) up.valency = up.valency->inverted();
      }
    }
    audit.push_back({"inverse-symmetry", "orbit " + std::to_string(o.index) + " (" + o.valency.to_string() +
                                             ") read off the table for " + mirror.valency.to_string() +
                                             " under f -> f^-1"});
    return *opts;
  }
  throw UnsupportedError("no local lift pattern for " + std::string(branched ? "branched" : "unbranched") +
                         " orbit of valency " + o.valency.to_string());
}

std::string describe_option(const LocalOption& opt) {
  std::string out;
  for (std::size_t i = 0; i < opt.size(); ++i) {
    if (i) out += " + ";
    out += opt[i].valency ? opt[i].valency->to_string() : "free";
    out += " (" + std::to_string(opt[i].point_count) + " pts)";
  }
  return out;
}

CompanionInvolution companion_of(const LiftProblem& prob, const std::vector<BaseOrbit>& orbits,
                                 const std::vector<LocalOption>& chosen, Int n, Int g) {
  // j = f^{n/2} o iota. Over a base point fixed by fbar^{n/2}, j fixes the
  // fibre pointwise iff f^{n/2} swaps it (unbranched, odd upstairs isotropy)
  // or the fibre is a single branch point with f^{n/2} in its isotropy.
  Int fixed = 0;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& o = orbits[i];
    if (o.valency.lambda() % 2 != 0) continue;  // fbar^{nbar/2} moves these points
    for (const auto& up : chosen[i]) {
      const Int lam = up.valency ? up.valency->lambda() : 1;
      if (prob.branched(o.index)) {
        if (lam % 2 == 0) fixed += up.point_count;
      } else if (lam % 2 != 0) {
        fixed += up.point_count;
      }
    }
  }
  CompanionInvolution c;
  c.expression = "f^" + std::to_string(n / 2) + " o iota";
  c.fixed_points = fixed;
  // 2g - 2 = 2 (2 g_j - 2) + fixed
  c.quotient_genus = (2 * g - 2 - fixed + 4) / 4;
  c.hyperelliptic = fixed == 2 * g + 2;
  return c;
}

std::vector<NonCyclicLift> run_non_cyclic(const LiftProblem& prob, std::vector<AuditStep>& audit,
                                          std::string& last_elimination) {
  const auto orbits = base_orbits(prob.base());
  const Int n = prob.base().order();
  const Int g = prob.upstairs_genus();

  std::optional<Int> anchor;
  for (const auto& o : orbits) {
    if (!prob.branched(o.index) && o.point_count == 1) {
      anchor = o.index;
      break;
    }
  }
  if (!anchor) throw UnsupportedError("no unbranched fixed point to normalize the lift");
  audit.push_back({"lemma1", "f^" + std::to_string(n) + " = id, so n = " + std::to_string(n) +
                                 "; replacing f by iota o f if needed, f fixes both preimages of orbit " +
                                 std::to_string(*anchor) + " (valency " +
                                 orbits[static_cast<std::size_t>(*anchor)].valency.to_string() + ")"});

  std::vector<std::vector<LocalOption>> per_orbit;
  for (const auto& o : orbits) {
    std::vector<LocalOption> opts;
    if (o.index == *anchor) {
      opts = {{{o.valency, 1}, {o.valency, 1}}};
    } else {
      opts = local_options(o, prob.branched(o.index), audit);
    }
    std::vector<LocalOption> kept;
    for (const auto& opt : opts) {
      bool ok = true;
      for (const auto& up : opt) {
        const Int lam = up.valency ? up.valency->lambda() : 1;
        if (lam * up.point_count != n) ok = false;
      }
      std::string what = "orbit " + std::to_string(o.index) + " (" + o.valency.to_string() +
                         (prob.branched(o.index) ? ", branched" : ", unbranched") + ") -> " +
                         describe_option(opt);
      audit.push_back({"local-option", what + (ok ? ": allowed" : ": isotropy x points != " +
                                                                       std::to_string(n))});
      if (ok) kept.push_back(opt);
    }
    if (kept.empty()) {
      last_elimination = "local-option";
      return {};
    }
    per_orbit.push_back(std::move(kept));
  }

  std::vector<NonCyclicLift> out;
  std::vector<std::size_t> pick(per_orbit.size(), 0);
  while (true) {
    std::vector<Valency> vs;
    std::vector<LocalOption> chosen;
    for (std::size_t i = 0; i < per_orbit.size(); ++i) {
      chosen.push_back(per_orbit[i][pick[i]]);
      for (const auto& up : chosen.back()) {
        if (up.valency) vs.push_back(*up.valency);
      }
    }
    std::sort(vs.begin(), vs.end());
    std::vector<Int> indices;
    for (const auto& v : vs) indices.push_back(v.lambda());
    const Fraction qg = quotient_genus_of(g, n, vs);
    if (!valid_quotient(qg)) {
      audit.push_back({"rh", "genus " + std::to_string(g) + ", indices (" + join_ints(indices) +
                                 ") give g' = " + qg.to_string()});
      last_elimination = "rh";
    } else if (!nielsen_check(vs)) {
      audit.push_back({"nielsen", to_text(vs) + " is not integral"});
      last_elimination = "nielsen";
    } else {
      auto t = TotalValency::make(g, n, vs);
      audit.push_back({"rh", to_text(t) + " has g' = " + qg.to_string()});
      out.push_back({t, companion_of(prob, orbits, chosen, n, g)});
    }
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_orbit[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

}  // namespace

std::vector<BaseOrbit> base_orbits(const TotalValency& base) {
  std::vector<BaseOrbit> out;
  Int i = 0;
  for (const auto& v : base.valencies()) {
    out.push_back({i++, v, base.order() / v.lambda()});
  }
  return out;
}

LiftProblem LiftProblem::make(TotalValency base, std::vector<Int> locus) {
  if (base.genus() != 1) throw ValidationError("lift problem: base map must live on a torus");
  if (locus.empty()) throw ValidationError("lift problem: branch locus must be nonempty");
  std::sort(locus.begin(), locus.end());
  if (std::adjacent_find(locus.begin(), locus.end()) != locus.end()) {
    throw ValidationError("lift problem: repeated orbit in branch locus");
  }
  Int points = 0;
  for (Int i : locus) {
    if (i < 0 || i >= static_cast<Int>(base.orbit_count())) {
      throw ValidationError("lift problem: locus names orbit " + std::to_string(i) +
                            " but the base has " + std::to_string(base.orbit_count()) +
                            " multiple orbits");
    }
    points += base.order() / base.valencies()[static_cast<std::size_t>(i)].lambda();
  }
  if (points % 2 != 0) {
    throw ValidationError("lift problem: branch locus has an odd number of points");
  }
  return {std::move(base), std::move(locus)};
}

bool LiftProblem::branched(Int orbit) const {
  return std::binary_search(locus_.begin(), locus_.end(), orbit);
}

Int LiftProblem::branch_point_count() const {
  Int points = 0;
  for (Int i : locus_) points += base_.order() / base_.valencies()[static_cast<std::size_t>(i)].lambda();
  return points;
}

std::vector<std::vector<Int>> candidate_branch_loci(const TotalValency& base) {
  if (base.genus() != 1) throw ValidationError("candidate_branch_loci: base must have genus 1");
  const auto orbits = base_orbits(base);
  const std::size_t s = orbits.size();
  std::vector<std::vector<Int>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << s); ++mask) {
    std::vector<Int> locus;
    Int points = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (std::size_t{1} << i)) {
        locus.push_back(static_cast<Int>(i));
        points += orbits[i].point_count;
      }
    }
    if (points % 2 == 0) out.push_back(std::move(locus));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string locus_label(const TotalValency& base, const std::vector<Int>& locus) {
  std::string out = "{";
  for (std::size_t i = 0; i < locus.size(); ++i) {
    const auto& v = base.valencies()[static_cast<std::size_t>(locus[i])];
    if (i) out += ", ";
    out += "#" + std::to_string(locus[i]) + " " + v.to_string() + " (" +
           std::to_string(base.order() / v.lambda()) + " pt)";
  }
  return out + "}";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NoLift: return "NoLift";
    case Verdict::CyclicLifts: return "CyclicLifts";
    case Verdict::NonCyclicLift: return "NonCyclicLift";
  }
  return "?";
}

bool LiftOutcome::fired(const std::string& rule) const {
  return std::any_of(audit.begin(), audit.end(), [&](const AuditStep& s) { return s.rule == rule; });
}

LiftOutcome classify_lift(const LiftProblem& prob) {
  LiftOutcome out;
  const auto orbits = base_orbits(prob.base());
  const Int nbar = prob.base().order();
  out.involution_power_index = nbar;

  std::optional<BaseOrbit> even_branch;
  for (const auto& o : orbits) {
    if (prob.branched(o.index) && o.valency.lambda() % 2 == 0) {
      even_branch = o;
      break;
    }
  }
  if (even_branch) {
    out.audit.push_back({"brodd", "branched orbit #" + std::to_string(even_branch->index) + " (" +
                                      even_branch->valency.to_string() +
                                      ") has even isotropy, so <f, iota> is cyclic"});
  } else {
    out.audit.push_back({"brodd", "no branched orbit has even isotropy; cyclicity not forced"});
  }

  const auto cyc = run_cyclic(prob, out.audit);
  std::vector<NonCyclicLift> noncyc;
  std::string last = cyc.last_elimination;
  if (!even_branch) {
    if (nbar % 2 != 0) {
      out.audit.push_back({"lemma1", "ord f = " + std::to_string(nbar) +
                                         " is odd: <f, iota> is cyclic, generated by f o iota of order " +
                                         std::to_string(2 * nbar) + ", already covered above"});
    } else {
      std::string nc_last;
      noncyc = run_non_cyclic(prob, out.audit, nc_last);
      if (noncyc.empty()) last = nc_last;
    }
  }

  if (!noncyc.empty()) {
    out.verdict = Verdict::NonCyclicLift;
    out.non_cyclic = noncyc.front();
    if (noncyc.size() > 1) {
      throw UnsupportedError("several non-cyclic lifts survive for locus " +
                             locus_label(prob.base(), prob.locus()));
    }
  }
  if (!cyc.lifts.empty()) {
    out.surviving_tuples = cyc.tuples;
    std::map<TotalValency, std::vector<TotalValency>> groups;
    for (const auto& t : cyc.lifts) groups[group_key(t)].push_back(t);
    for (auto& [key, members] : groups) out.cyclic.push_back({key, std::move(members)});
    if (out.verdict == Verdict::NoLift) out.verdict = Verdict::CyclicLifts;
  }
  if (out.verdict == Verdict::NoLift) out.reason = last;
  return out;
}

std::vector<std::string> hnp_aliases(const TotalValency& t) {
  std::vector<std::string> out;
  const Int n = t.order();
  if (n < 3) return out;
  const auto gens = group_generators(t);
  for (Int p = 1; p < n; ++p) {
    if (hnp_genus(n, p) != t.genus()) continue;
    if (std::binary_search(gens.begin(), gens.end(), hnp(n, p))) {
      out.push_back("h_{" + std::to_string(n) + "," + std::to_string(p) + "}");
    }
  }
  return out;
}

std::string GroupRecord::label() const {
  std::string name = aliases.empty() ? to_text(generator) : aliases.front();
  return cyclic ? "<" + name + ">" : "<" + name + ", I>";
}

InvolutionGroupReport involution_group_report(Int companion_g_max) {
  InvolutionGroupReport rep;
  const std::vector<std::pair<std::string, TotalValency>> bases = {
      {"h_{4,1}", hnp(4, 1)}, {"h_{6,3}", hnp(6, 3)}, {"h_{3,1}", hnp(3, 1)}};
  std::map<TotalValency, GroupRecord> records;
  auto record_for = [&](const TotalValency& key) -> GroupRecord& {
    auto it = records.find(key);
    if (it == records.end()) {
      GroupRecord r{true, key, hnp_aliases(key), {}, std::nullopt};
      it = records.emplace(key, std::move(r)).first;
    }
    return it->second;
  };

  for (const auto& [label, base] : bases) {
    for (const auto& locus : candidate_branch_loci(base)) {
      LiftCase c{label, base, locus, classify_lift(LiftProblem::make(base, locus))};
      const std::string source = "lift of " + label + " over " + locus_label(base, locus);
      for (const auto& grp : c.outcome.cyclic) record_for(grp.generator).sources.push_back(source);
      if (c.outcome.non_cyclic) {
        auto& r = record_for(group_key(c.outcome.non_cyclic->upstairs));
        r.cyclic = false;
        r.companion = c.outcome.non_cyclic->companion;
        r.sources.push_back(source);
      }
      rep.cases.push_back(std::move(c));
    }
  }

  if (companion_g_max >= 2) {
    rep.companions = search_involution_companions(2, companion_g_max);
    for (const auto& hit : rep.companions) {
      record_for(hit.generator).sources.push_back("companion search, genus " +
                                                  std::to_string(hit.generator.genus()));
    }
  }

  for (auto& [key, r] : records) rep.records.push_back(std::move(r));
  std::sort(rep.records.begin(), rep.records.end(), [](const GroupRecord& a, const GroupRecord& b) {
    if (a.genus() != b.genus()) return a.genus() < b.genus();
    return a.generator < b.generator;
  });
  return rep;
}

}  // namespace totval
