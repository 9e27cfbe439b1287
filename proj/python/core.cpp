// Copyright 2026 The cmt-bigraph Authors.
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

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the package's __init__.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmt/classify.hpp"
#include "cmt/complex.hpp"
#include "cmt/construct.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/errors.hpp"
#include "cmt/fixtures.hpp"
#include "cmt/json_io.hpp"

namespace py = pybind11;

namespace {

std::string Dump(const cmt::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cohen-Macaulay codimension of bipartite graphs";

  static py::exception<cmt::Error> error(m, "CmtError", PyExc_ValueError);
  static py::exception<cmt::ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<cmt::SizeLimitError> size_error(m, "SizeLimitError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cmt::ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const cmt::SizeLimitError& e) {
      py::set_error(size_error, e.what());
    } catch (const cmt::Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<cmt::BipartiteGraph>(m, "BipartiteGraph")
      .def(py::init(&cmt::BipartiteGraph::FromNames), py::arg("left"), py::arg("right"),
           py::arg("edges"))
      .def_static("parse", &cmt::parse_graph, py::arg("text"))
      .def_static("builtin", &cmt::builtin_graph, py::arg("name"))
      .def_property_readonly("left", &cmt::BipartiteGraph::left)
      .def_property_readonly("right", &cmt::BipartiteGraph::right)
      .def_property_readonly("edges",
                             [](const cmt::BipartiteGraph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& e : g.edges()) {
                                 out.emplace_back(g.left()[e.left], g.right()[e.right]);
                               }
                               return out;
                             })
      .def("document", &cmt::format_graph)
      .def("is_unmixed", &cmt::is_unmixed)
      .def("is_connected", &cmt::is_connected)
      .def("canonical_code",
           [](const cmt::BipartiteGraph& g) { return cmt::canonical_form(g).to_string(); })
      .def("__eq__", [](const cmt::BipartiteGraph& a, const cmt::BipartiteGraph& b) {
        return a == b;
      })
      .def("__repr__", [](const cmt::BipartiteGraph& g) {
        return "<BipartiteGraph " + std::to_string(g.left_size()) + "+" +
               std::to_string(g.right_size()) + " vertices, " + std::to_string(g.edge_count()) +
               " edges>";
      });

  m.def("builtin_names", &cmt::builtin_names);
  m.def("_classify", [](const cmt::BipartiteGraph& g) {
    return Dump(cmt::to_json(g, cmt::classify(g)));
  });
  m.def("_oracle", [](const cmt::BipartiteGraph& g, int max_t) {
    return Dump(cmt::oracle_to_json(cmt::independence_complex(g), max_t));
  }, py::arg("g"), py::arg("max_t") = -1);
  m.def("_verify_graph", [](const cmt::BipartiteGraph& g) {
    return Dump(cmt::to_json(cmt::verify_against_oracle(g)));
  });
  m.def("_verify", [](std::size_t d) { return Dump(cmt::to_json(cmt::verify_unmixed(d))); });
  m.def("cm_codim", [](const cmt::BipartiteGraph& g) {
    return cmt::cm_codim(cmt::independence_complex(g));
  });
  m.def("disjoint_union", &cmt::disjoint_union);

  m.def("expand", [](const std::string& expansion_document) {
    return cmt::expand(cmt::parse_expansion(expansion_document)).graph;
  }, py::arg("expansion_document"));
  m.def("contract", [](const cmt::BipartiteGraph& g) {
    return cmt::format_expansion(cmt::contract(g));
  });
  m.def("predicted_codim", [](const std::string& expansion_document) {
    return cmt::predicted_codim(cmt::parse_expansion(expansion_document));
  }, py::arg("expansion_document"));

  m.def("enumerate_cm", &cmt::enumerate_cm, py::arg("dimension"));
  m.def("enumerate_unmixed", &cmt::enumerate_unmixed, py::arg("d"));
  m.def("_enumerate_sharp_cmt", [](int t, std::size_t max_total) {
    cmt::SharpCmtOptions options;
    options.max_total = max_total;
    const cmt::SharpCmtFamily f = cmt::enumerate_sharp_cmt(t, options);
    cmt::Json j;
    j["t"] = t;
    j["count"] = f.count();
    j["connected_count"] = f.connected_count();
    cmt::Json entries = cmt::Json::array();
    for (const auto& e : f.entries) {
      cmt::Json entry = cmt::to_json(e);
      entry["document"] = cmt::format_graph(e.graph);
      entries.push_back(entry);
    }
    j["entries"] = entries;
    cmt::Json dims = cmt::Json::array();
    for (const auto& s : f.by_base_dimension) dims.push_back(cmt::to_json(s));
    j["by_base_dimension"] = dims;
    return Dump(j);
  });
}
