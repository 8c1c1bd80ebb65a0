#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "totval/cli.hpp"
#include "totval/enumerator.hpp"
#include "totval/format.hpp"
#include "totval/lift.hpp"
#include "totval/polygon.hpp"
#include "totval/verify.hpp"

namespace py = pybind11;
using namespace totval;

namespace {

py::list valency_list(const TotalValency& t) {
  py::list out;
  for (const auto& v : t.valencies()) out.append(py::make_tuple(v.theta(), v.lambda()));
  return out;
}

std::vector<Valency> to_valencies(const std::vector<std::pair<Int, Int>>& pairs) {
  std::vector<Valency> vs;
  for (auto [theta, lambda] : pairs) vs.push_back(Valency::make(theta, lambda));
  return vs;
}

py::dict companion_dict(const CompanionInvolution& c) {
  py::dict d;
  d["expression"] = c.expression;
  d["fixed_points"] = c.fixed_points;
  d["quotient_genus"] = c.quotient_genus;
  d["hyperelliptic"] = c.hyperelliptic;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Total valencies of periodic surface maps";
  m.attr("__version__") = cli::kVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InconsistentDataError>(m, "InconsistentDataError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

  py::class_<TotalValency>(m, "TotalValency")
      .def(py::init([](Int genus, Int order, const std::vector<std::pair<Int, Int>>& valencies) {
             return TotalValency::make(genus, order, to_valencies(valencies));
           }),
           py::arg("genus"), py::arg("order"), py::arg("valencies"))
      .def_static("parse", [](const std::string& s) { return parse_total_valency(s); })
      .def_static("identity", &TotalValency::identity)
      .def_property_readonly("genus", &TotalValency::genus)
      .def_property_readonly("order", &TotalValency::order)
      .def_property_readonly("valencies", &valency_list)
      .def_property_readonly("branch_indices", &TotalValency::branch_indices)
      .def("to_json", [](const TotalValency& t) { return to_json(t).dump(); })
      .def("__str__", [](const TotalValency& t) { return to_text(t); })
      .def("__repr__", [](const TotalValency& t) { return "TotalValency('" + to_text(t) + "')"; })
      .def("__eq__", [](const TotalValency& a, const TotalValency& b) { return a == b; })
      .def("__lt__", [](const TotalValency& a, const TotalValency& b) { return a < b; })
      .def("__hash__", [](const TotalValency& t) { return py::hash(py::str(to_text(t))); });

  m.def("hnp", &hnp, py::arg("n"), py::arg("p"));
  m.def("hnp_genus", &hnp_genus, py::arg("n"), py::arg("p"));
  m.def("power", &power, py::arg("t"), py::arg("k"));
  m.def("inverse", &inverse, py::arg("t"));
  m.def("quotient_signature", [](const TotalValency& t) {
    auto q = quotient_signature(t);
    return py::make_tuple(q.quotient_genus, q.branch_indices);
  });
  m.def("nielsen_check", [](const std::vector<std::pair<Int, Int>>& vs) { return nielsen_check(to_valencies(vs)); });
  m.def("harvey_check", [](Int n, Int qg, const std::vector<Int>& idx) { return harvey_check(n, qg, idx); },
        py::arg("n"), py::arg("quotient_genus"), py::arg("indices"));
  m.def("is_irreducible", &is_irreducible);
  m.def("is_conjugate", &is_conjugate);
  m.def("is_involution", &is_involution_datum);
  m.def("group_key", &group_key);

  m.def("enumerate",
        [](Int genus, std::optional<Int> order, std::optional<Int> quotient_genus, bool irreducible,
           std::optional<Int> max_order, bool with_witness) {
          EnumerationQuery q{genus, order, quotient_genus, irreducible, max_order, with_witness};
          py::list out;
          for (const auto& e : enumerate(q)) {
            py::dict d;
            d["total_valency"] = e.total_valency;
            d["quotient_genus"] = e.quotient_genus;
            d["irreducible"] = e.flags.irreducible;
            d["realization"] = e.realization ? py::object(py::make_tuple(e.realization->n, e.realization->p,
                                                                         e.realization->k))
                                             : py::object(py::none());
            out.append(d);
          }
          return out;
        },
        py::arg("genus"), py::arg("order") = py::none(), py::arg("quotient_genus") = py::none(),
        py::arg("irreducible") = false, py::arg("max_order") = py::none(), py::arg("with_witness") = true);

  m.def("oracle_total_valency",
        [](Int n, Int p, Int k) { return oracle_total_valency(PolygonSurface::build(n, p), k); },
        py::arg("n"), py::arg("p"), py::arg("k") = 1);

  m.def("classify_lift",
        [](const TotalValency& base, const std::vector<Int>& locus) {
          auto out = classify_lift(LiftProblem::make(base, locus));
          py::dict d;
          d["verdict"] = to_string(out.verdict);
          d["reason"] = out.reason;
          py::list cyclic;
          for (const auto& g : out.cyclic) cyclic.append(g.generator);
          d["cyclic"] = cyclic;
          d["non_cyclic"] = out.non_cyclic ? py::object(py::cast(out.non_cyclic->upstairs)) : py::object(py::none());
          d["companion"] = out.non_cyclic ? py::object(companion_dict(out.non_cyclic->companion))
                                          : py::object(py::none());
          py::list audit;
          for (const auto& s : out.audit) audit.append(py::make_tuple(s.rule, s.detail));
          d["audit"] = audit;
          return d;
        },
        py::arg("base"), py::arg("locus"));

  m.def("candidate_branch_loci", &candidate_branch_loci);

  m.def("_verify", [](const std::string& name, Int bound) {
    auto r = run_verify(name, bound);
    return py::make_tuple(r.pass, r.json.dump(), r.text);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
