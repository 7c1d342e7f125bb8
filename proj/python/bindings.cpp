#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flowroots/audits.hpp"
#include "flowroots/io.hpp"
#include "flowroots/report.hpp"
#include "flowroots/search.hpp"

namespace py = pybind11;
using namespace flowroots;

namespace {

MultiGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) es.push_back({u, v});
  return MultiGraph(n, std::move(es));
}

std::vector<std::pair<int, int>> edge_pairs(const MultiGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Python ints are arbitrary precision; go through decimal strings.
py::list coeff_list(const IntPoly& p) {
  py::list out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const Integer& c : p.coeffs()) out.append(to_int(c.get_str()));
  return out;
}

Rational tol_of(const std::string& text) { return parse_rational(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact flow polynomials and root audits";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<WorkCapExceeded>(m, "WorkCapExceeded", PyExc_RuntimeError);

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &MultiGraph::vertex_count)
      .def_property_readonly("m", &MultiGraph::edge_count)
      .def_property_readonly("edges", &edge_pairs)
      .def("degree", &MultiGraph::degree)
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
      .def("__repr__", [](const MultiGraph& g) {
        return "MultiGraph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("loop_graph", &make_loop_graph);
  m.def("bond", &make_bond, py::arg("k"));
  m.def("cycle", &make_cycle, py::arg("n"));
  m.def("complete", &make_complete, py::arg("n"));
  m.def("h_s", &build_H_s, py::arg("s"));

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("parse_faces", [](const std::string& text) { return parse_faces(text).faces; });
  m.def("format_edge_list", &format_edge_list);

  m.def("flow_poly", [](const MultiGraph& g) { return coeff_list(flow_poly(g)); },
        "Flow polynomial coefficients, constant term first.");
  m.def("flow_poly_naive", [](const MultiGraph& g) { return coeff_list(flow_poly_naive(g)); });
  m.def("chromatic_poly", [](const MultiGraph& g) { return coeff_list(chromatic_poly(g)); });
  m.def("count_flows", [](const MultiGraph& g, int q) { return py::int_(py::str(count_flows_oracle(g, q).get_str())); });
  m.def("flow_trace", [](const MultiGraph& g) {
    ReductionTrace t;
    FlowEngine().flow_poly(g, &t);
    return t.to_text();
  });

  m.def("canonical_code", [](const MultiGraph& g) { return py::bytes(canonical_code(g)); });
  m.def("is_bridgeless", &is_bridgeless);
  m.def("is_3_edge_connected", &is_3_edge_connected);
  m.def("is_chordal", &is_chordal);
  m.def("block_count", &block_count);

  m.def("build_dual", [](const MultiGraph& g, const std::vector<std::vector<int>>& faces) {
    FaceStructure fs{faces};
    validate_faces(g, fs);
    return build_dual(g, fs);
  });

  m.def(
      "roots_json",
      [](const std::vector<std::string>& coeffs, const std::string& tol) {
        std::vector<Integer> cs;
        for (const auto& c : coeffs) cs.emplace_back(c);
        return roots_json(root_profile(IntPoly(std::move(cs)), tol_of(tol))).dump();
      },
      py::arg("coeffs"), py::arg("tol") = "1/1000000");
  m.def("invariants_json", [](const MultiGraph& g) { return invariants_json(compute_invariants(g)).dump(); });
  m.def(
      "audit_json",
      [](const MultiGraph& g, std::optional<std::vector<std::vector<int>>> faces, const std::string& tol) {
        AuditOptions opts;
        opts.tol = tol_of(tol);
        if (faces) opts.faces = FaceStructure{*faces};
        return report_json(run_audit(g, opts)).dump();
      },
      py::arg("graph"), py::arg("faces") = py::none(), py::arg("tol") = "1/1000000");

  m.def("xi_enclosure", [](int k, const std::string& tol) {
    const Interval iv = isolate_root_of_cubic(xi_cubic(k), Rational(1), Rational(2), tol_of(tol));
    return std::make_pair(iv.lo.get_str(), iv.hi.get_str());
  }, py::arg("k"), py::arg("tol") = "1/1000000000");
  m.def("nroot", &nroot, py::arg("k"));
  m.def("nroot_formula", &nroot_formula, py::arg("k"));

  m.def(
      "search_json",
      [](int max_vertices, int max_edges, int max_multiplicity, const std::vector<std::string>& filters, bool loops,
         int workers, double work_cap) {
        SearchConfig cfg;
        cfg.bounds = {max_vertices, max_edges, max_multiplicity, loops};
        for (const auto& name : filters) {
          const auto f = parse_filter(name);
          if (!f) throw std::invalid_argument("unknown filter '" + name + "'");
          cfg.filters.push_back(*f);
        }
        cfg.workers = workers;
        cfg.work_cap = work_cap;
        Json reports = Json::array();
        SearchSummary sum;
        {
          py::gil_scoped_release release;
          sum = run_search(cfg, [&](const AuditReport& r) { reports.push_back(report_json(r)); });
        }
        Json cands = Json::array();
        for (const auto& c : sum.candidates)
          cands.push_back({{"kind", c.kind}, {"graph", graph_json(c.graph)}, {"detail", c.detail}});
        Json stages = Json::array();
        for (const auto& [name, count] : sum.stages) stages.push_back({{"filter", name}, {"passed", count}});
        return Json{{"reports", reports},
                    {"summary",
                     {{"candidates", cands},
                      {"enumerated", sum.enumerated},
                      {"stages", stages},
                      {"survivors", sum.survivors},
                      {"audit_failures", sum.audit_failures}}}}
            .dump();
      },
      py::arg("max_vertices"), py::arg("max_edges"), py::arg("max_multiplicity") = 3,
      py::arg("filters") = std::vector<std::string>{}, py::arg("loops") = true, py::arg("workers") = 1,
      py::arg("work_cap") = 1e8);
}
