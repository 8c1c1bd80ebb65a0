#include "totval/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "totval/enumerator.hpp"
#include "totval/lift.hpp"

namespace totval {

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string witness_label(const Witness& w) {
  std::string out = "h_{" + std::to_string(w.n) + "," + std::to_string(w.p) + "}";
  if (w.k != 1) out += "^" + std::to_string(w.k);
  return out;
}

void finish(VerifyResult& r, std::ostringstream& os) {
  r.pass = r.diff.empty();
  for (const auto& d : r.diff) os << d << "\n";
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  r.text = os.str();
  r.json["pass"] = r.pass;
  r.json["diff"] = r.diff;
}

struct BrtoRow {
  const char* text;
  const char* label;
  TotalValency (*value)();
};

const BrtoRow kBrto[] = {
    {"[1,2; 1/2 + 1/2 + 1/2 + 1/2]", "h_{4,1}^2", [] { return power(hnp(4, 1), 2); }},
    {"[1,4; 1/4 + 1/4 + 1/2]", "h_{4,1}", [] { return hnp(4, 1); }},
    {"[1,4; 3/4 + 3/4 + 1/2]", "h_{4,1}^3", [] { return power(hnp(4, 1), 3); }},
    {"[1,6; 1/6 + 1/3 + 1/2]", "h_{6,3}", [] { return hnp(6, 3); }},
    {"[1,3; 1/3 + 1/3 + 1/3]", "h_{6,3}^2", [] { return power(hnp(6, 3), 2); }},
    {"[1,3; 2/3 + 2/3 + 2/3]", "h_{6,3}^4", [] { return power(hnp(6, 3), 4); }},
    {"[1,6; 5/6 + 2/3 + 1/2]", "h_{6,3}^5", [] { return power(hnp(6, 3), 5); }},
};

struct Irr1Row {
  const char* label;
  Int n;
  Int p;
  Int genus;
  bool cyclic;
};

const Irr1Row kIrr1[] = {
    {"<h_{6,1}, I>", 6, 1, 2, false},
    {"<h_{8,1}>", 8, 1, 3, true},
    {"<h_{8,5}>", 8, 5, 3, true},
    {"<h_{12,3}>", 12, 3, 3, true},
    {"<h_{12,2}>", 12, 2, 4, true},
};

Json audit_json(const std::vector<AuditStep>& audit) {
  Json out = Json::array();
  for (const auto& s : audit) out.push_back(Json{{"rule", s.rule}, {"detail", s.detail}});
  return out;
}

bool case_touches(const LiftCase& c, const TotalValency& key) {
  for (const auto& g : c.outcome.cyclic) {
    if (g.generator == key) return true;
  }
  return c.outcome.non_cyclic && group_key(c.outcome.non_cyclic->upstairs) == key;
}

}  // namespace

VerifyResult verify_brto() {
  VerifyResult r;
  r.name = "brto";
  std::ostringstream os;

  std::vector<TotalValency> expected;
  for (const auto& row : kBrto) {
    auto t = parse_text(row.text);
    if (row.value() != t) {
      r.diff.push_back(std::string("~ ") + row.label + ": evaluates to " + to_text(row.value()) +
                       ", expected " + row.text);
    }
    expected.push_back(t);
  }

  EnumerationQuery q;
  q.genus = 1;
  q.quotient_genus = 0;
  const auto census = enumerate(q);
  q.quotient_genus.reset();
  q.require_irreducible = true;
  const auto irreducible = enumerate(q);

  auto contains = [](const auto& entries, const TotalValency& t) {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const CensusEntry& e) { return e.total_valency == t; });
  };

  os << "genus 1, sphere quotient: " << census.size() << " classes (expected " << expected.size()
     << ")\n";
  Json rows = Json::array();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& t = expected[i];
    const bool found = contains(census, t);
    const bool irr = is_irreducible(t);
    std::optional<Witness> w;
    for (const auto& e : census) {
      if (e.total_valency == t) w = e.realization;
    }
    os << "  " << pad(to_text(t), 30) << pad(kBrto[i].label, 11) << pad(irr ? "irreducible" : "reducible", 13)
       << (w ? "realized by " + witness_label(*w) : std::string("no witness")) << "\n";
    if (!found) r.diff.push_back("- " + to_text(t) + " (" + kBrto[i].label + ")");
    if (irr != contains(irreducible, t)) {
      r.diff.push_back("~ " + to_text(t) + ": irreducible census membership " +
                       (irr ? "missing" : "unexpected"));
    }
    rows.push_back(Json{{"label", kBrto[i].label},
                        {"total_valency", to_text(t)},
                        {"irreducible", irr},
                        {"found", found},
                        {"witness", w ? Json(witness_label(*w)) : Json(nullptr)}});
  }
  for (const auto& e : census) {
    if (std::find(expected.begin(), expected.end(), e.total_valency) == expected.end()) {
      r.diff.push_back("+ " + to_text(e.total_valency));
    }
  }
  for (const auto& e : irreducible) {
    if (std::find(expected.begin(), expected.end(), e.total_valency) == expected.end()) {
      r.diff.push_back("+ " + to_text(e.total_valency) + " (irreducible census)");
    }
  }
  os << "genus 1, irreducible: " << irreducible.size() << " classes (expected 6)\n";
  if (irreducible.size() != 6) {
    r.diff.push_back("~ irreducible census size " + std::to_string(irreducible.size()) + ", expected 6");
  }

  r.json = Json{{"check", "brto"},
                {"sphere_quotient_count", census.size()},
                {"irreducible_count", irreducible.size()},
                {"rows", rows}};
  finish(r, os);
  return r;
}

VerifyResult verify_irr1(Int companion_g_max) {
  if (companion_g_max < 2) throw ValidationError("verify irr1: companion search bound must be >= 2");
  VerifyResult r;
  r.name = "irr1";
  std::ostringstream os;
  const auto rep = involution_group_report(companion_g_max);

  std::map<TotalValency, const Irr1Row*> golden;
  for (const auto& row : kIrr1) golden.emplace(group_key(hnp(row.n, row.p)), &row);

  Json rows = Json::array();
  for (const auto& rec : rep.records) {
    auto it = golden.find(rec.generator);
    const std::string label = it != golden.end() ? it->second->label : rec.label();
    if (it == golden.end()) {
      r.diff.push_back("+ " + rec.label() + " " + to_text(rec.generator));
    } else {
      const auto& g = *it->second;
      if (g.genus != rec.genus()) {
        r.diff.push_back("~ " + label + ": genus " + std::to_string(rec.genus()) + ", expected " +
                         std::to_string(g.genus));
      }
      if (g.cyclic != rec.cyclic) {
        r.diff.push_back("~ " + label + ": " + (rec.cyclic ? "cyclic" : "non-cyclic") + ", expected " +
                         (g.cyclic ? "cyclic" : "non-cyclic"));
      }
    }

    os << pad(label, 14) << "genus " << rec.genus() << "  " << pad(rec.cyclic ? "cyclic" : "non-cyclic", 12)
       << to_text(rec.generator) << "\n";
    if (rec.companion) {
      os << "    companion " << rec.companion->expression << ": " << rec.companion->fixed_points
         << " fixed points, quotient genus " << rec.companion->quotient_genus
         << (rec.companion->hyperelliptic ? ", hyperelliptic" : "") << "\n";
    }

    Json sources = Json::array();
    for (const auto& c : rep.cases) {
      if (!case_touches(c, rec.generator)) continue;
      os << "    lift of " << c.base_label << " over " << locus_label(c.base, c.locus) << ": "
         << to_string(c.outcome.verdict) << "\n";
      for (const auto& s : c.outcome.audit) os << "      " << pad(s.rule, 17) << s.detail << "\n";
      sources.push_back(Json{{"kind", "lift"},
                             {"base", c.base_label},
                             {"locus", c.locus},
                             {"verdict", to_string(c.outcome.verdict)},
                             {"audit", audit_json(c.outcome.audit)}});
    }
    for (const auto& hit : rep.companions) {
      if (hit.generator != rec.generator) continue;
      os << "    companion search: " << to_text(hit.generator) << "^" << hit.generator.order() / 2
         << " = " << to_text(hit.involution) << "\n";
      sources.push_back(Json{{"kind", "companion-search"},
                             {"involution", to_text(hit.involution)},
                             {"involution_quotient_genus", hit.involution_quotient_genus}});
    }

    Json companion = nullptr;
    if (rec.companion) {
      companion = Json{{"expression", rec.companion->expression},
                       {"fixed_points", rec.companion->fixed_points},
                       {"quotient_genus", rec.companion->quotient_genus},
                       {"hyperelliptic", rec.companion->hyperelliptic}};
    }
    rows.push_back(Json{{"label", label},
                        {"genus", rec.genus()},
                        {"cyclic", rec.cyclic},
                        {"generator", to_text(rec.generator)},
                        {"aliases", rec.aliases},
                        {"companion", companion},
                        {"sources", sources}});
  }
  for (const auto& [key, row] : golden) {
    const bool seen = std::any_of(rep.records.begin(), rep.records.end(),
                                  [&](const GroupRecord& rec) { return rec.generator == key; });
    if (!seen) r.diff.push_back(std::string("- ") + row->label + " " + to_text(key));
  }

  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    if (c.outcome.verdict != Verdict::NoLift) continue;
    os << "no lift: " << c.base_label << " over " << locus_label(c.base, c.locus) << " ("
       << c.outcome.reason << ")\n";
    cases.push_back(Json{{"base", c.base_label},
                         {"locus", c.locus},
                         {"reason", c.outcome.reason},
                         {"audit", audit_json(c.outcome.audit)}});
  }
  os << "companion search, genus 2.." << companion_g_max << ": " << rep.companions.size()
     << " groups\n";

  r.json = Json{{"check", "irr1"},
                {"companion_search_max_genus", companion_g_max},
                {"records", rows},
                {"eliminated", cases}};
  finish(r, os);
  return r;
}

VerifyResult verify_rotation_sweep(Int g_max) {
  VerifyResult r;
  r.name = "lemma-inv";
  std::ostringstream os;
  Json rows = Json::array();
  for (const auto& row : rotation_sweep(g_max)) {
    const std::string g = std::to_string(row.genus);
    if (!row.conjugate) {
      r.diff.push_back("~ genus " + g + ": power 2g is " + to_text(row.rotation_power) + ", expected " +
                       to_text(row.expected_rotation));
    }
    if (row.involution.order() != 2 || row.fixed_points != 2 * row.genus + 2 || row.quotient_genus != 0) {
      r.diff.push_back("~ genus " + g + ": power 2g+1 is " + to_text(row.involution) + " with " +
                       std::to_string(row.fixed_points) + " fixed points, quotient genus " +
                       std::to_string(row.quotient_genus));
    }
    os << "g=" << pad(g, 3) << " h_{" << 4 * row.genus + 2 << "," << 2 * row.genus + 1 << "}^" << 2 * row.genus
       << (row.conjugate ? " ~ " : " !~ ") << "h_{" << 2 * row.genus + 1 << ",1}; ^" << 2 * row.genus + 1
       << ": " << row.fixed_points << " fixed points, g'=" << row.quotient_genus << "\n";
    rows.push_back(Json{{"genus", row.genus},
                        {"rotation_power", to_text(row.rotation_power)},
                        {"expected_rotation", to_text(row.expected_rotation)},
                        {"conjugate", row.conjugate},
                        {"involution", to_text(row.involution)},
                        {"fixed_points", row.fixed_points},
                        {"quotient_genus", row.quotient_genus},
                        {"pass", row.pass()}});
  }
  r.json = Json{{"check", "lemma-inv"}, {"max_genus", g_max}, {"rows", rows}};
  finish(r, os);
  return r;
}

VerifyResult verify_centralizer(Int g_max) {
  if (g_max < 1) throw ValidationError("verify centralizer: max genus must be >= 1");
  VerifyResult r;
  r.name = "centralizer";
  std::ostringstream os;
  Json rows = Json::array();
  for (Int g = 1; g <= g_max; ++g) {
    EnumerationQuery q;
    q.genus = g;
    q.require_irreducible = true;
    q.with_witness = false;
    const std::vector<TotalValency> pair_groups = {group_key(hnp(2 * g + 1, 1)),
                                                   group_key(hnp(2 * g + 2, 1))};
    std::map<CentralizerKind, Int> counts;
    const auto census = enumerate(q);
    for (const auto& e : census) {
      const auto& t = e.total_valency;
      CentralizerStructure s;
      try {
        s = centralizer_structure(t);
      } catch (const std::logic_error& err) {
        r.diff.push_back("~ " + to_text(t) + ": " + err.what());
        continue;
      }
      ++counts[s.kind];
      const bool three_equal = s.numerators[0] == s.numerators[1] && s.numerators[1] == s.numerators[2];
      CentralizerKind expected = CentralizerKind::Distinct;
      if (three_equal) {
        expected = CentralizerKind::AllEqual;
      } else if (std::find(pair_groups.begin(), pair_groups.end(), group_key(t)) != pair_groups.end()) {
        expected = CentralizerKind::Pair;
      }
      if (s.kind != expected) {
        r.diff.push_back("~ " + to_text(t) + ": " + to_string(s.kind) + ", expected " + to_string(expected));
      }
      const auto inv_kind = centralizer_structure(inverse(t)).kind;
      if (inv_kind != s.kind) {
        r.diff.push_back("~ " + to_text(t) + ": inverse classified " + to_string(inv_kind));
      }
    }
    os << "g=" << pad(std::to_string(g), 3) << pad(std::to_string(census.size()), 4) << " irreducible: "
       << counts[CentralizerKind::Distinct] << " DISTINCT, " << counts[CentralizerKind::Pair] << " PAIR, "
       << counts[CentralizerKind::AllEqual] << " ALL_EQUAL\n";
    rows.push_back(Json{{"genus", g},
                        {"entries", census.size()},
                        {"distinct", counts[CentralizerKind::Distinct]},
                        {"pair", counts[CentralizerKind::Pair]},
                        {"all_equal", counts[CentralizerKind::AllEqual]}});
  }
  r.json = Json{{"check", "centralizer"}, {"max_genus", g_max}, {"rows", rows}};
  finish(r, os);
  return r;
}

VerifyResult run_verify(const std::string& name, Int bound) {
  if (name == "brto") return verify_brto();
  if (name == "irr1") return verify_irr1(bound > 0 ? bound : 10);
  if (name == "lemma-inv") return verify_rotation_sweep(bound > 0 ? bound : 50);
  if (name == "centralizer") return verify_centralizer(bound > 0 ? bound : 10);
  throw ValidationError("unknown check '" + name + "' (expected brto, irr1, lemma-inv or centralizer)");
}

}  // namespace totval
