#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jaco/closed_forms.hpp"
#include "jaco/domination.hpp"
#include "jaco/graph.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/oracles.hpp"
#include "jaco/verify.hpp"

namespace py = pybind11;
using namespace jaco;

namespace {

py::dict analysis_dict(const DomAnalysis& a) {
    py::dict d;
    d["gamma_set"] = vs_members(a.gamma_set);
    d["theta"] = a.theta;
    d["designated"] = a.designated;
    d["dom_sequence"] = a.dom_sequence;
    d["partition"] = a.partition;
    d["distance_score"] = a.distance_score;
    return d;
}

py::dict murtage_dict(const MurtageResult& m) {
    py::dict d;
    d["value"] = m.value;
    d["method"] = m.method;
    d["witness_edges"] = m.witness_edges;
    return d;
}

py::dict record_dict(const VerificationRecord& r) {
    py::dict d;
    d["claim_id"] = r.claim_id;
    d["graph"] = r.graph;
    d["paper_value"] = r.paper_value;
    d["computed_value"] = r.computed_value;
    d["verdict"] = to_string(r.verdict);
    d["witness"] = r.witness;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite Jaco graph core";

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def_static("from_edges", &SimpleGraph::from_edges)
        .def_static("path", &SimpleGraph::path)
        .def_static("cycle", &SimpleGraph::cycle)
        .def_static("complete", &SimpleGraph::complete)
        .def("order", &SimpleGraph::order)
        .def("edge_count", &SimpleGraph::edge_count)
        .def("edges", &SimpleGraph::edges)
        .def("has_edge", &SimpleGraph::has_edge)
        .def("degree", &SimpleGraph::degree)
        .def("max_degree", &SimpleGraph::max_degree)
        .def("neighbors", [](const SimpleGraph& g, int v) { return vs_members(g.neighbors(v)); })
        .def("distance", &SimpleGraph::distance)
        .def("is_connected", &SimpleGraph::is_connected)
        .def("to_dot", &SimpleGraph::to_dot)
        .def("to_edge_list", &SimpleGraph::to_edge_list);

    py::class_<JacoGraph>(m, "JacoGraph")
        .def_static("build", &JacoGraph::build)
        .def("order", &JacoGraph::order)
        .def("arcs", &JacoGraph::arcs)
        .def("in_degree", &JacoGraph::in_degree)
        .def("out_degree", &JacoGraph::out_degree)
        .def("underlying", &JacoGraph::underlying)
        .def("prime_jaconian", &JacoGraph::prime_jaconian)
        .def("hope_vertices",
             [](const JacoGraph& g) { return vs_members(g.hope_vertices()); })
        .def("to_dot", &JacoGraph::to_dot)
        .def("to_json", &JacoGraph::to_json);

    m.def("independence_trace", [](int n) {
        IndependenceTrace t = independence_trace(JacoGraph::build(n));
        py::dict d;
        d["chosen"] = t.chosen;
        d["alpha"] = t.alpha;
        return d;
    });
    m.def("covering_number", [](int n) { return covering_number(JacoGraph::build(n)); });
    m.def("chromatic_closed_form",
          [](int n) { return chromatic_closed_form(JacoGraph::build(n)); });
    m.def("gamma_recursion", &gamma_recursion);

    m.def("gamma", [](const SimpleGraph& g) { return jaco::gamma(g); });
    m.def("all_gamma_sets", [](const SimpleGraph& g) {
        std::vector<std::vector<int>> out;
        for (VertexSet s : all_gamma_sets(g)) out.push_back(vs_members(s));
        return out;
    });
    m.def("analyze_gamma_set", [](const SimpleGraph& g, const std::vector<int>& members) {
        return analysis_dict(analyze_gamma_set(g, vs_from(members)));
    });
    m.def("compact_gamma_sets", [](const SimpleGraph& g) {
        py::list out;
        for (const DomAnalysis& a : compact_gamma_sets(g)) out.append(analysis_dict(a));
        return out;
    });
    m.def("murtage", [](const SimpleGraph& g) { return murtage_dict(murtage_via_theorem(g)); });
    m.def("bondage", [](const SimpleGraph& g) {
        BondageResult b = bondage(g);
        py::dict d;
        d["value"] = b.value;
        d["witness_edges"] = b.witness_edges;
        return d;
    });
    m.def("gamma_minus", [](const SimpleGraph& g) {
        GammaMinusResult r = gamma_minus(g);
        py::dict d;
        d["value"] = r.value;
        d["defined"] = r.defined;
        d["witness"] = vs_members(r.witness);
        return d;
    });
    m.def("spanning_tree_preserving", [](const SimpleGraph& g) {
        SpanningTreeReport r = spanning_tree_preserving(g);
        py::dict d;
        d["tree_edges"] = r.tree.edges();
        d["delta"] = py::make_tuple(r.delta_graph, r.delta_tree);
        d["gamma"] = py::make_tuple(r.gamma_graph, r.gamma_tree);
        d["murtage"] = py::make_tuple(r.murtage_graph, r.murtage_tree);
        d["preserved"] = r.preserved;
        return d;
    });

    m.def("alpha_oracle", [](const SimpleGraph& g) { return alpha_oracle(g); });
    m.def("chi_oracle", [](const SimpleGraph& g) { return chi_oracle(g); });
    m.def("gamma_oracle", [](const SimpleGraph& g) { return gamma_oracle(g); });
    m.def("murtage_oracle", [](const SimpleGraph& g) { return murtage_dict(murtage_oracle(g)); });

    m.def("check_names", &all_check_names);
    m.def("run_check", [](const std::string& name, int from, int to) {
        CheckOutcome outcome = run_check(name, from, to);
        py::list records;
        for (const auto& r : outcome.records) records.append(record_dict(r));
        py::dict d;
        d["records"] = records;
        d["internal_ok"] = outcome.internal_ok;
        return d;
    });
}
