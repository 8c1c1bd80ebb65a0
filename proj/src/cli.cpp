#include "totval/cli.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "totval/enumerator.hpp"
#include "totval/format.hpp"
#include "totval/polygon.hpp"
#include "totval/verify.hpp"

namespace totval::cli {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string kind_name(CellKind k) {
  switch (k) {
    case CellKind::Face: return "face";
    case CellKind::Vertex: return "vertex";
    case CellKind::EdgeMidpoint: return "edge";
  }
  return "?";
}

struct Options {
  std::string format = "text";
  bool meta = false;
  Int n = 0, p = 0, k = 1;
  std::string tv;
  std::string sum;
  std::string indices;
  Int quotient_genus = 0;
  std::optional<Int> genus, order, q_genus, max_order, max_genus;
  bool irreducible = false;
  bool no_witness = false;
  bool compare = false;
  bool dump = false;
  std::string check_name;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}
  bool json() const { return o_.format == "json"; }

  int emit_tv(const TotalValency& t) {
    if (json()) {
      out_ << to_json(t).dump() << "\n";
    } else {
      out_ << to_text(t) << "\n";
    }
    return kOk;
  }

  int emit_check(const std::string& name, bool result, const std::string& detail) {
    if (json()) {
      out_ << Json{{"check", name}, {"result", result}, {"detail", detail}}.dump() << "\n";
    } else {
      out_ << (result ? "true" : "false");
      if (!detail.empty()) out_ << " (" << detail << ")";
      out_ << "\n";
    }
    return kOk;
  }

  int hnp_cmd() { return emit_tv(hnp(o_.n, o_.p)); }
  int power_cmd() { return emit_tv(power(parse_total_valency(o_.tv), o_.k)); }
  int inverse_cmd() { return emit_tv(inverse(parse_total_valency(o_.tv))); }

  int quotient_cmd() {
    const auto q = quotient_signature(parse_total_valency(o_.tv));
    if (json()) {
      out_ << Json{{"quotient_genus", q.quotient_genus}, {"branch_indices", q.branch_indices}}.dump() << "\n";
    } else {
      out_ << "g' = " << q.quotient_genus << ", indices (" << join(q.branch_indices) << ")\n";
    }
    return kOk;
  }

  int check_cmd() {
    const std::string& c = o_.check_name;
    if (c == "nielsen") {
      const auto vs = parse_valency_sum(o_.sum);
      Fraction total;
      for (const auto& v : vs) total += v.value();
      return emit_check(c, nielsen_check(vs), "sum " + total.to_string());
    }
    if (c == "harvey") {
      return emit_check(c, harvey_check(o_.n, o_.quotient_genus, parse_int_list(o_.indices)), "");
    }
    const auto t = parse_total_valency(o_.tv);
    if (c == "irreducible") {
      const auto q = quotient_signature(t);
      return emit_check(c, is_irreducible(t),
                        "g' = " + std::to_string(q.quotient_genus) + ", " +
                            std::to_string(q.branch_indices.size()) + " branch orbits");
    }
    if (!is_involution_datum(t)) return emit_check(c, false, "order " + std::to_string(t.order()));
    return emit_check(c, true,
                      std::to_string(t.orbit_count()) + " fixed points, quotient genus " +
                          std::to_string(involution_quotient_genus(t)));
  }

  int enumerate_cmd() {
    EnumerationQuery q;
    q.genus = *o_.genus;
    q.order = o_.order;
    q.quotient_genus = o_.q_genus;
    q.require_irreducible = o_.irreducible;
    q.max_order = o_.max_order;
    q.with_witness = !o_.no_witness;
    for (const auto& e : enumerate(q)) {
      if (json()) {
        Json w = nullptr;
        if (e.realization) w = Json{{"n", e.realization->n}, {"p", e.realization->p}, {"k", e.realization->k}};
        out_ << Json{{"total_valency", to_json(e.total_valency)},
                     {"text", to_text(e.total_valency)},
                     {"quotient_genus", e.quotient_genus},
                     {"flags", {{"nielsen", e.flags.nielsen}, {"harvey", e.flags.harvey},
                                {"irreducible", e.flags.irreducible}}},
                     {"realization", w}}
                    .dump()
             << "\n";
      } else {
        out_ << to_text(e.total_valency) << "  g'=" << e.quotient_genus;
        if (e.flags.irreducible) out_ << "  irreducible";
        if (e.realization) {
          out_ << "  h_{" << e.realization->n << "," << e.realization->p << "}";
          if (e.realization->k != 1) out_ << "^" << e.realization->k;
        }
        out_ << "\n";
      }
    }
    return kOk;
  }

  int oracle_cmd() {
    const auto s = PolygonSurface::build(o_.n, o_.p);
    if (o_.dump) {
      out_ << s.dump().dump(json() ? -1 : 2) << "\n";
      return kOk;
    }
    const auto orbits = oracle_orbits(s, o_.k);
    const auto oracle = oracle_total_valency(s, o_.k);
    const auto closed = power(hnp(o_.n, o_.p), o_.k);
    const bool match = oracle == closed;
    if (o_.compare && !json()) {
      if (match) {
        out_ << "MATCH\n";
      } else {
        out_ << "MISMATCH\n  oracle:      " << to_text(oracle) << "\n  closed form: " << to_text(closed) << "\n";
      }
      return match ? kOk : kMismatch;
    }
    if (json()) {
      Json js = Json::array();
      for (const auto& c : orbits) {
        js.push_back(Json{{"kind", kind_name(c.kind)},
                          {"representative", c.representative},
                          {"period", c.period},
                          {"isotropy", c.isotropy},
                          {"valency", c.valency ? Json(c.valency->to_string()) : Json(nullptr)}});
      }
      Json j{{"n", o_.n}, {"p", o_.p}, {"k", o_.k}, {"genus", s.genus()},
             {"total_valency", to_json(oracle)}, {"orbits", js}};
      if (o_.compare) {
        j["closed_form"] = to_json(closed);
        j["match"] = match;
      }
      out_ << j.dump() << "\n";
      return o_.compare && !match ? kMismatch : kOk;
    }
    out_ << to_text(oracle) << "\n";
    for (const auto& c : orbits) {
      out_ << "  " << kind_name(c.kind) << " " << c.representative << ": period " << c.period << ", isotropy "
           << c.isotropy;
      if (c.valency) out_ << ", valency " << c.valency->to_string();
      out_ << "\n";
    }
    return kOk;
  }

  int verify_cmd() {
    const auto r = run_verify(o_.check_name, o_.max_genus.value_or(0));
    if (json()) {
      out_ << r.json.dump() << "\n";
    } else {
      out_ << r.text;
    }
    return r.pass ? kOk : kMismatch;
  }

  int centralizer_cmd() {
    const auto s = centralizer_structure(parse_total_valency(o_.tv));
    std::vector<Int> nums(s.numerators.begin(), s.numerators.end());
    if (json()) {
      Json parity = nullptr;
      if (s.parity) parity = *s.parity == Parity::Odd ? "odd" : "even";
      out_ << Json{{"kind", to_string(s.kind)},
                   {"numerators", nums},
                   {"parity", parity},
                   {"enlarged_group", s.enlarged_group}}
                  .dump()
           << "\n";
    } else {
      out_ << to_string(s.kind) << "  numerators (" << join(nums) << ")";
      if (s.parity) out_ << "  order " << (*s.parity == Parity::Odd ? "odd" : "even");
      out_ << "  " << s.enlarged_group << "\n";
    }
    return kOk;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Total valencies of periodic surface maps", "totval"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--meta", o.meta, "Print run metadata on stderr");
  app.set_version_flag("--version", kVersion);

  auto* hnp_app = app.add_subcommand("hnp", "Total valency of h_{n,p}");
  hnp_app->add_option("--n", o.n, "Half the edge count")->required();
  hnp_app->add_option("--p", o.p, "Identification shift")->required();

  auto* power_app = app.add_subcommand("power", "Total valency of f^k");
  power_app->add_option("--tv", o.tv, "Total valency")->required();
  power_app->add_option("--k", o.k, "Exponent")->required();

  auto* inverse_app = app.add_subcommand("inverse", "Total valency of f^-1");
  inverse_app->add_option("--tv", o.tv, "Total valency")->required();

  auto* quotient_app = app.add_subcommand("quotient", "Quotient genus and branch indices");
  quotient_app->add_option("--tv", o.tv, "Total valency")->required();

  auto* check_app = app.add_subcommand("check", "Nielsen, Harvey, irreducibility or involution test");
  check_app->add_option("kind", o.check_name, "nielsen|harvey|irreducible|involution")
      ->required()
      ->check(CLI::IsMember({"nielsen", "harvey", "irreducible", "involution"}));
  check_app->add_option("--tv", o.tv, "Total valency (irreducible, involution)");
  check_app->add_option("--sum", o.sum, "Valency sum such as '1/3 + 2/3' (nielsen)");
  check_app->add_option("--n", o.n, "Order (harvey)");
  check_app->add_option("--quotient-genus", o.quotient_genus, "Quotient genus (harvey)");
  check_app->add_option("--indices", o.indices, "Branch indices such as 8,8,4 (harvey)");

  auto* enum_app = app.add_subcommand("enumerate", "Census of admissible total valencies (JSON lines)");
  enum_app->add_option("--genus", o.genus, "Surface genus")->required();
  enum_app->add_option("--order", o.order, "Fix the order");
  enum_app->add_option("--quotient-genus", o.q_genus, "Fix the quotient genus");
  enum_app->add_flag("--irreducible", o.irreducible, "Irreducible classes only");
  enum_app->add_option("--max-order", o.max_order, "Order bound (default 4g+2)");
  enum_app->add_flag("--no-witness", o.no_witness, "Skip the h_{n,p}^k realization lookup");

  auto* oracle_app = app.add_subcommand("oracle", "Polygon model of h_{n,p}^k");
  oracle_app->add_option("--n", o.n, "Half the edge count")->required();
  oracle_app->add_option("--p", o.p, "Identification shift")->required();
  oracle_app->add_option("--k", o.k, "Power (default 1)");
  oracle_app->add_flag("--compare", o.compare, "Compare with the closed form");
  oracle_app->add_flag("--dump", o.dump, "Print the edge pairing and corner cycles");

  auto* verify_app = app.add_subcommand("verify", "Recompute a reference table and compare");
  verify_app->add_option("table", o.check_name, "brto|irr1|lemma-inv|centralizer")
      ->required()
      ->check(CLI::IsMember({"brto", "irr1", "lemma-inv", "centralizer"}));
  verify_app->add_option("--max-genus", o.max_genus, "Genus bound for the sweep");

  auto* cent_app = app.add_subcommand("centralizer", "Centralizer type of an irreducible map");
  cent_app->add_option("--tv", o.tv, "Total valency")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  auto need = [&](bool ok, const char* what) {
    if (!ok) throw ValidationError(std::string("check ") + o.check_name + ": " + what + " is required");
  };

  int code = kOk;
  try {
    Runner r(o, out);
    if (hnp_app->parsed()) {
      code = r.hnp_cmd();
    } else if (power_app->parsed()) {
      code = r.power_cmd();
    } else if (inverse_app->parsed()) {
      code = r.inverse_cmd();
    } else if (quotient_app->parsed()) {
      code = r.quotient_cmd();
    } else if (check_app->parsed()) {
      if (o.check_name == "nielsen") {
        need(!o.sum.empty(), "--sum");
      } else if (o.check_name == "harvey") {
        need(check_app->count("--n") > 0, "--n");
        need(!o.indices.empty(), "--indices");
      } else {
        need(!o.tv.empty(), "--tv");
      }
      code = r.check_cmd();
    } else if (enum_app->parsed()) {
      code = r.enumerate_cmd();
    } else if (oracle_app->parsed()) {
      code = r.oracle_cmd();
    } else if (verify_app->parsed()) {
      code = r.verify_cmd();
    } else if (cent_app->parsed()) {
      code = r.centralizer_cmd();
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InconsistentDataError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (o.meta) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::string command;
    for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
    err << Json{{"tool", "totval"}, {"version", kVersion}, {"command", command}, {"exit_code", code},
                {"elapsed_ms", ms.count()}}
               .dump()
        << "\n";
  }
  return code;
}

}  // namespace totval::cli
