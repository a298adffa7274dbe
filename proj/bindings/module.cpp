#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "mknf/errors.hpp"
#include "mknf/golden.hpp"
#include "mknf/textio.hpp"

namespace py = pybind11;
using namespace mknf;

namespace {

PhiConfig config_of(const std::string& filter, bool legacy) {
  auto f = FilterStrategy::parse(filter);
  if (!f) throw py::value_error("unknown filter '" + filter + "'");
  return {*f, legacy};
}

ReportFormat format_of(const std::string& fmt) {
  if (fmt == "text") return ReportFormat::Text;
  if (fmt == "json") return ReportFormat::Json;
  throw py::value_error("unknown format '" + fmt + "'");
}

std::vector<std::string> name_list(const KnowledgeBase& kb, AtomSet s) {
  std::vector<std::string> out;
  s.for_each([&](AtomId a) { out.push_back(kb.symbols.name(a)); });
  std::sort(out.begin(), out.end());
  return out;
}

AtomSet set_of(const KnowledgeBase& kb, const std::vector<std::string>& atoms) {
  AtomSet s;
  for (const auto& n : atoms) {
    auto id = kb.symbols.find(n);
    if (!id || !kb.ka.contains(*id)) throw py::value_error("unknown atom '" + n + "'");
    s |= AtomSet::single(*id);
  }
  return s;
}

py::dict verdict_dict(const ModelVerdict& v) {
  py::dict d;
  d["subset"] = v.subset;
  d["fixpoint"] = v.fixpoint;
  d["consistent"] = v.consistent;
  d["model"] = v.model();
  return d;
}

py::dict tetra_dict(const KnowledgeBase& kb, const Tetra<AtomSet>& x) {
  py::dict d;
  d["t"] = name_list(kb, x.t);
  d["f"] = name_list(kb, x.f);
  d["u"] = name_list(kb, x.u);
  d["p"] = name_list(kb, x.p);
  return d;
}

py::dict run_dict(const KnowledgeBase& kb, const RunReport& r) {
  py::dict d;
  py::list iterations;
  for (const auto& x : r.trace.outer) iterations.append(tetra_dict(kb, x));
  d["iterations"] = iterations;
  py::dict fix;
  fix["t"] = name_list(kb, r.fixpoint.t);
  fix["p"] = name_list(kb, r.fixpoint.p);
  d["fixpoint"] = fix;
  d["verdicts"] = verdict_dict(r.verdicts);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stable-fixpoint engine for ground hybrid knowledge bases";

  py::register_exception<ParseError>(m, "KbParseError");
  py::register_exception<NonConvergence>(m, "NonConvergenceError");
  py::register_exception<TooLarge>(m, "TooLargeError");
  py::register_exception<SignatureTooLarge>(m, "SignatureTooLargeError");

  py::class_<KnowledgeBase>(m, "KnowledgeBase")
      .def_property_readonly(
          "atoms", [](const KnowledgeBase& kb) { return name_list(kb, kb.sig_full); })
      .def_property_readonly("ka",
                             [](const KnowledgeBase& kb) { return name_list(kb, kb.ka); })
      .def_property_readonly("n_rules",
                             [](const KnowledgeBase& kb) { return kb.rules.size(); })
      .def("__repr__", [](const KnowledgeBase& kb) {
        return "<KnowledgeBase atoms=" + std::to_string(kb.n_atoms()) +
               " rules=" + std::to_string(kb.rules.size()) + ">";
      });

  m.def("parse_kb", &parse_kb, py::arg("text"), "Parse the KB text format.");
  m.def("print_kb", &print_kb, py::arg("kb"), "Render a KB back to text.");

  m.def(
      "lfp",
      [](const KnowledgeBase& kb, const std::string& filter, bool legacy) {
        PhiOperator phi(kb, config_of(filter, legacy));
        return run_dict(kb, run_lfp(phi));
      },
      py::arg("kb"), py::arg("filter") = "singletons", py::arg("legacy") = false,
      "Least stable fixpoint with its outer iteration trace and verdicts.");

  m.def(
      "enumerate_fixpoints",
      [](const KnowledgeBase& kb, const std::string& filter, bool legacy, int cap) {
        PhiOperator phi(kb, config_of(filter, legacy));
        EnumReport r = run_enumerate(phi, cap);
        py::list out;
        for (std::size_t i = 0; i < r.fixpoints.size(); ++i) {
          py::dict d;
          d["t"] = name_list(kb, r.fixpoints[i].first);
          d["p"] = name_list(kb, r.fixpoints[i].second);
          d["verdicts"] = verdict_dict(r.verdicts[i]);
          out.append(d);
        }
        return out;
      },
      py::arg("kb"), py::arg("filter") = "singletons", py::arg("legacy") = false,
      py::arg("cap") = 12, "All consistent stable fixpoints with model verdicts.");

  m.def(
      "check_model",
      [](const KnowledgeBase& kb, const std::vector<std::string>& t,
         const std::vector<std::string>& p, const std::string& filter, bool legacy) {
        PhiOperator phi(kb, config_of(filter, legacy));
        return verdict_dict(check_model(phi, set_of(kb, t), set_of(kb, p)));
      },
      py::arg("kb"), py::arg("t"), py::arg("p"), py::arg("filter") = "singletons",
      py::arg("legacy") = false, "Model verdict for one approximation.");

  m.def(
      "report",
      [](const KnowledgeBase& kb, const std::string& filter, bool legacy,
         const std::string& fmt, bool inner) {
        PhiOperator phi(kb, config_of(filter, legacy));
        return print_report(kb, run_lfp(phi), format_of(fmt), inner);
      },
      py::arg("kb"), py::arg("filter") = "singletons", py::arg("legacy") = false,
      py::arg("fmt") = "text", py::arg("inner") = false,
      "Render the least-stable-fixpoint report in the CLI's format.");

  py::dict examples;
  examples["ex1"] = golden::kEx1;
  examples["ex1_rule4"] = golden::kEx1Rule4;
  examples["ex3"] = golden::kEx3;
  examples["ex4"] = golden::kEx4;
  m.attr("EXAMPLES") = examples;
}
