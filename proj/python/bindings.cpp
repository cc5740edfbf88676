#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circ/census.hpp"
#include "circ/error.hpp"

namespace py = pybind11;
using namespace circ;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object gw_tuple(const ConnectionSet& s) {
  const auto w = gw_witness(s);
  if (!w) return py::none();
  return py::make_tuple(w->k, w->h);
}

py::object dw_int(const ConnectionSet& s) {
  const auto w = dw_witness(s);
  if (!w) return py::none();
  return py::int_(w->m);
}

CensusOptions options_for(int threads, bool override_ceiling) {
  CensusOptions o;
  o.threads = threads > 0 ? threads : default_threads();
  o.override_ceiling = override_ceiling;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Circulant (di)graph census core";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<ConnectionSet>(m, "ConnectionSet")
      .def(py::init([](int n, const std::vector<int>& members) { return ConnectionSet(Modulus(n), members); }),
           py::arg("n"), py::arg("members"))
      .def_static("parse", &ConnectionSet::parse)
      .def_property_readonly("order", &ConnectionSet::order)
      .def_property_readonly("members", &ConnectionSet::members)
      .def("is_graph", &ConnectionSet::is_graph)
      .def("complement", &ConnectionSet::complement)
      .def("negate", &ConnectionSet::negate)
      .def("scale", &ConnectionSet::scale)
      .def("__len__", &ConnectionSet::size)
      .def("__contains__", &ConnectionSet::contains)
      .def("__str__", &ConnectionSet::to_string)
      .def("__repr__", [](const ConnectionSet& s) { return "ConnectionSet('" + s.to_string() + "')"; })
      .def("__eq__", [](const ConnectionSet& a, const ConnectionSet& b) { return a == b; })
      .def("__hash__", [](const ConnectionSet& s) { return std::hash<std::string>{}(s.to_string()); });

  m.def("wreath", &wreath, py::arg("outer"), py::arg("inner"));
  m.def("gw_witness", &gw_tuple, "(k, h) or None");
  m.def("dw_witness", &dw_int, "m or None");
  m.def("is_sdw", &is_sdw);
  m.def("aut_order", [](const ConnectionSet& s) { return to_py(aut_order(s)); });
  m.def("is_normal", [](const ConnectionSet& s) { return is_normal(s); });
  m.def("is_drr", [](const ConnectionSet& s) { return is_drr(s); });
  m.def("is_small", [](const ConnectionSet& s) { return is_small(s); });
  m.def("gw_family", py::overload_cast<int, int, int>(&gw_family), py::arg("n"), py::arg("q"), py::arg("p"));
  m.def("dw_family", py::overload_cast<int, int>(&dw_family), py::arg("n"), py::arg("m"));

  m.def("classify_json", [](const ConnectionSet& s) { return classification_to_json(classify(s)); });
  m.def("formulas_json", [](int n) { return formulas_to_json(n, formulas(n)); });
  m.def(
      "census_json",
      [](int n, const std::string& mode, int threads, bool override_ceiling, bool include_runtime) {
        const CensusOptions o = options_for(threads, override_ceiling);
        CensusReport r;
        {
          py::gil_scoped_release release;
          r = run_census(n, parse_mode(mode), o);
        }
        return report_to_json(r, include_runtime);
      },
      py::arg("n"), py::arg("mode"), py::arg("threads") = 0, py::arg("override_ceiling") = false,
      py::arg("include_runtime") = true);
  m.def(
      "verify",
      [](const std::vector<int>& orders, const std::string& suite, int threads) {
        const VerifyResult r = verify(orders, parse_suite(suite), options_for(threads, false));
        py::list lines;
        for (const auto& l : r.lines) {
          py::dict d;
          d["order"] = l.order;
          d["source"] = l.source;
          d["name"] = l.check.name;
          d["skipped"] = l.skipped;
          d["holds"] = l.check.holds;
          d["flagged_erratum"] = l.check.flagged_erratum;
          d["observed"] = to_py(l.check.observed);
          d["bound_or_claim"] = to_py(l.check.bound_or_claim);
          d["relation"] = to_string(l.check.relation);
          lines.append(d);
        }
        return py::make_tuple(r.passed(), lines);
      },
      py::arg("orders"), py::arg("suite") = "all", py::arg("threads") = 0);

  m.def("total_digraphs", [](int n) { return to_py(total_digraphs(n)); });
  m.def("total_graphs", [](int n) { return to_py(total_graphs(n)); });
  m.def("gw_exact_pq", [](int p, int q) { return to_py(gw_exact_pq(p, q)); });
  m.def("sdw_exact_pq", [](int p, int q) { return to_py(sdw_exact_pq(p, q)); });
  m.def("gw_digraph_bound_sum", [](int n) { return to_py(gw_digraph_bound_sum(n)); });
}
