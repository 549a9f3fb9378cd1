// Copyright 2026 The latext Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ==============================================================================

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latext/cli.hpp"
#include "latext/error.hpp"
#include "latext/extension.hpp"
#include "latext/io.hpp"
#include "latext/standard_lattices.hpp"

namespace py = pybind11;

namespace latext {
namespace {

using PyLattice = std::shared_ptr<Lattice>;

PyLattice wrap(Lattice l) { return std::make_shared<Lattice>(std::move(l)); }
PyLattice wrap(const LatticePtr& l) { return std::const_pointer_cast<Lattice>(l); }

OperatorKind kind_of(const std::string& text) {
  auto kind = parse_operator_kind(text);
  if (!kind) throw py::value_error("unknown operator kind: " + text);
  return *kind;
}

py::list violations(const ValidationReport& report) {
  py::list out;
  for (const auto& v : report.violations()) {
    py::dict d;
    d["rule"] = v.rule;
    d["witness"] = v.witness;
    d["message"] = v.message;
    out.append(d);
  }
  return out;
}

py::list verdicts(const AxiomReport& report) {
  py::list out;
  for (const auto& v : report.verdicts) {
    py::dict d;
    d["axiom"] = v.axiom;
    d["pass"] = v.pass;
    if (v.witness) {
      d["witness"] = v.witness->inputs;
      d["outputs"] = v.witness->outputs;
      d["direction"] = v.witness->direction;
    }
    out.append(d);
  }
  return out;
}

py::dict map_dict(const Map& m) {
  py::dict d;
  for (Element x = 0; x < m.domain().size(); ++x) {
    d[py::str(m.domain().element_name(x))] = m.codomain().element_name(m(x));
  }
  return d;
}

}  // namespace
}  // namespace latext

PYBIND11_MODULE(_latext, m) {
  using namespace latext;
  m.doc() = "Finite lattices, retraction pairs and operator extension.";

  py::register_exception<Error>(m, "LatextError", PyExc_ValueError);

  py::class_<Lattice, PyLattice>(m, "Lattice")
      .def_property_readonly("name", &Lattice::name)
      .def_property_readonly("elements", &Lattice::elements)
      .def_property_readonly("bottom",
                             [](const Lattice& l) { return l.element_name(l.bottom()); })
      .def_property_readonly("top",
                             [](const Lattice& l) { return l.element_name(l.top()); })
      .def_property_readonly("covers", &cover_names)
      .def("__len__", &Lattice::size)
      .def("__contains__", &Lattice::contains)
      .def("leq", py::overload_cast<std::string_view, std::string_view>(
                      &Lattice::leq, py::const_))
      .def("meet", py::overload_cast<std::string_view, std::string_view>(
                       &Lattice::meet, py::const_))
      .def("join", py::overload_cast<std::string_view, std::string_view>(
                       &Lattice::join, py::const_))
      .def("to_text", &serialize_lattice)
      .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; })
      .def("__repr__", [](const Lattice& l) {
        return "<Lattice " + l.name() + " with " + std::to_string(l.size()) +
               " elements>";
      });

  m.def("build_lattice",
        [](std::string name, std::vector<std::string> elements,
           std::string bottom, std::string top,
           std::vector<std::pair<std::string, std::string>> covers) {
          return wrap(build_lattice(std::move(name), std::move(elements),
                                    bottom, top, covers));
        },
        py::arg("name"), py::arg("elements"), py::arg("bottom"),
        py::arg("top"), py::arg("covers"));
  m.def("parse_lattice", [](const std::string& text) { return wrap(parse_lattice(text)); });
  m.def("chain", [](std::size_t n) { return wrap(make_chain(n)); });
  m.def("boolean", [](std::size_t k) { return wrap(make_boolean(k)); });
  m.def("diamond", [] { return wrap(make_diamond_M3()); });
  m.def("pentagon", [] { return wrap(make_pentagon_N5()); });
  m.def("product", [](const PyLattice& a, const PyLattice& b) {
    return wrap(make_product(*a, *b));
  });

  py::class_<Map>(m, "Map")
      .def(py::init([](std::string name, const PyLattice& domain,
                       const PyLattice& codomain,
                       const std::map<std::string, std::string>& image) {
             std::vector<std::pair<std::string, std::string>> entries(
                 image.begin(), image.end());
             return Map::from_names(std::move(name), domain, codomain, entries);
           }),
           py::arg("name"), py::arg("domain"), py::arg("codomain"),
           py::arg("image"))
      .def_property_readonly("name", &Map::name)
      .def_property_readonly("domain", [](const Map& f) { return wrap(f.domain_ptr()); })
      .def_property_readonly("codomain",
                             [](const Map& f) { return wrap(f.codomain_ptr()); })
      .def("__call__", [](const Map& f, std::string_view x) {
        return f.codomain().element_name(f(f.domain().index_of(x)));
      })
      .def("as_dict", &map_dict)
      .def("is_monotone", [](const Map& f) { return check_monotone(f).ok(); })
      .def("to_text", &serialize_map);

  py::class_<OperatorTable>(m, "Operator")
      .def(py::init([](std::string name, const PyLattice& lattice,
                       const std::map<std::pair<std::string, std::string>,
                                      std::string>& table) {
             std::vector<std::tuple<std::string, std::string, std::string>> entries;
             for (const auto& [xy, v] : table) entries.emplace_back(xy.first, xy.second, v);
             return OperatorTable::from_names(std::move(name), lattice, entries);
           }),
           py::arg("name"), py::arg("lattice"), py::arg("table"))
      .def_property_readonly("name", &OperatorTable::name)
      .def_property_readonly("lattice",
                             [](const OperatorTable& o) { return wrap(o.lattice_ptr()); })
      .def("__call__", py::overload_cast<std::string_view, std::string_view>(
                           &OperatorTable::operator(), py::const_))
      .def("to_text", &serialize_operator);

  m.def("meet_operator", [](const PyLattice& l) { return canonical_meet(l); });
  m.def("join_operator", [](const PyLattice& l) { return canonical_join(l); });

  m.def("check_axioms", [](const OperatorTable& op, const std::string& kind) {
    return verdicts(check_axioms(op, kind_of(kind)));
  });
  m.def("check_retraction", [](const Map& r, const Map& s) {
    return violations(check_retraction_pair(r, s));
  });
  m.def("check_boundary", [](const Map& r) {
    return violations(check_boundary_conditions(r));
  });
  m.def("extend", &extend_operator, py::arg("r"), py::arg("s"),
        py::arg("source"));
  m.def("verify_theorem",
        [](const Map& r, const Map& s, const OperatorTable& source,
           const std::string& kind) {
          auto res = verify_theorem(r, s, source, kind_of(kind));
          py::dict d;
          d["outcome"] = std::string(to_string(res.outcome()));
          d["extended"] = res.extended;
          d["retraction"] = violations(res.retraction);
          d["boundary"] = violations(res.boundary);
          d["source"] = verdicts(res.source_axioms);
          d["extension"] = verdicts(res.extension_axioms);
          d["identity"] = violations(res.identity);
          return d;
        },
        py::arg("r"), py::arg("s"), py::arg("source"), py::arg("kind"));

  m.def("enumerate_retractions",
        [](const PyLattice& big, const PyLattice& small, bool boundary) {
          py::list out;
          for (const auto& p : enumerate_retraction_pairs(big, small, boundary)) {
            out.append(py::make_tuple(p.r(), p.s()));
          }
          return out;
        },
        py::arg("big"), py::arg("small"), py::arg("boundary") = true);
  m.def("enumerate_operators",
        [](const PyLattice& l, const std::string& kind) {
          return enumerate_operators(l, kind_of(kind));
        },
        py::arg("lattice"), py::arg("kind"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
