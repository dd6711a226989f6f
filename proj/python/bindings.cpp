#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hamspec/codec.hpp"
#include "hamspec/conditions.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/harness.hpp"
#include "hamspec/iso.hpp"
#include "hamspec/oracle.hpp"
#include "hamspec/spectra.hpp"

namespace py = pybind11;
using namespace hamspec;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::build(n, edges);
}

py::dict verdict_to_dict(const Verdict& v) {
    py::dict d;
    d["condition_id"] = v.condition_id;
    d["outcome"] = outcome_name(v.outcome);
    if (!v.exception_id.empty()) d["exception_id"] = v.exception_id;
    d["evidence"] = v.evidence;
    if (!v.note.empty()) d["note"] = v.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hamspec, m) {
    m.doc() = "Hamilton-connectedness conditions, extremal families, and the exact oracle";

    py::class_<Graph>(m, "Graph")
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def_static("from_edges", &graph_from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", [](const Graph& g) { return g.n; })
        .def_property_readonly("m", [](const Graph& g) { return g.edge_count(); })
        .def("min_degree", &Graph::min_degree)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("degree_sequence",
             [](const Graph& g) { return degree_sequence(g).sorted; })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n) + " m=" + std::to_string(g.edge_count()) +
                   ">";
        });

    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("complete_bipartite", &complete_bipartite, py::arg("a"), py::arg("b"));
    m.def("join", &join, py::arg("a"), py::arg("b"));
    m.def("disjoint_union", &disjoint_union, py::arg("a"), py::arg("b"));
    m.def("complement", &complement, py::arg("g"));

    m.def("s_graph", &s_graph, py::arg("n"), py::arg("k"));
    m.def("t_graph", &t_graph, py::arg("n"), py::arg("k"));
    m.def("s_graph_edges", &s_graph_edges, py::arg("n"), py::arg("k"));
    m.def("t_graph_edges", &t_graph_edges, py::arg("n"), py::arg("k"));
    m.def(
        "named_variant",
        [](const std::string& name, int n) {
            auto w = variant_by_name(name);
            if (!w) throw std::invalid_argument("unknown variant '" + name + "'");
            return named_variant(*w, n);
        },
        py::arg("name"), py::arg("n"));
    m.def(
        "np1_graphs",
        [](int n) {
            std::vector<std::pair<std::string, Graph>> out;
            for (const NamedGraph& item : np1_graphs(n)) out.emplace_back(item.name, item.g);
            return out;
        },
        py::arg("n"));
    m.def(
        "sporadic_exception",
        [](const std::string& name, std::optional<int> n) {
            for (Sporadic w :
                 {Sporadic::S11_5, Sporadic::S13_6, Sporadic::K7_K2_K16, Sporadic::Kn1_ee})
                if (sporadic_name(w) == name) return sporadic_exception(w, n);
            throw std::invalid_argument("unknown sporadic exception '" + name + "'");
        },
        py::arg("name"), py::arg("n") = std::nullopt);

    m.def(
        "spectral_radius", [](const Graph& g) { return spectral_radius(g).value; },
        py::arg("g"));
    m.def(
        "signless_laplacian_radius",
        [](const Graph& g) { return signless_laplacian_radius(g).value; }, py::arg("g"));

    m.def(
        "is_hamilton_connected",
        [](const Graph& g, double budget_seconds) {
            Deadline deadline = std::chrono::steady_clock::now() +
                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(budget_seconds));
            HamiltonVerdict v = is_hamilton_connected(g, false, deadline);
            py::dict d;
            d["hamilton_connected"] = v.hamilton_connected;
            if (v.failing_pair) d["failing_pair"] = *v.failing_pair;
            return d;
        },
        py::arg("g"), py::arg("budget_seconds") = 10.0);
    m.def(
        "hamilton_path_between",
        [](const Graph& g, int s, int t) { return hamilton_path_between(g, s, t); },
        py::arg("g"), py::arg("s"), py::arg("t"));

    m.def("condition_ids", [] { return condition_ids(); });
    m.def(
        "evaluate_condition",
        [](const Graph& g, const std::string& id) {
            return verdict_to_dict(evaluate_condition(g, id));
        },
        py::arg("g"), py::arg("id"));
    m.def(
        "evaluate_all",
        [](const Graph& g) {
            py::list out;
            for (const Verdict& v : evaluate_all(g)) out.append(verdict_to_dict(v));
            return out;
        },
        py::arg("g"));

    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));
    m.def("fingerprint", &fingerprint, py::arg("g"));

    m.def("reproduce_paper_numbers", [] {
        py::list out;
        for (const ClaimRow& r : reproduce_paper_numbers()) {
            py::dict d;
            d["quantity"] = r.quantity;
            d["expected"] = r.expected;
            d["computed"] = r.computed;
            d["pass"] = r.pass;
            out.append(d);
        }
        return out;
    });

    m.def(
        "run_campaign",
        [](const std::string& config_text, std::optional<std::string> corpus_text) {
            std::istringstream cfg_in(config_text);
            CampaignConfig cfg = parse_campaign_config(cfg_in);
            std::ostringstream jsonl;
            JsonlSink records(jsonl);
            SummarySink summary;
            MultiSink sink({&records, &summary});
            RunStats stats;
            if (cfg.mode == "families") {
                stats = run_families(cfg, sink);
            } else if (cfg.mode == "ingest") {
                if (!corpus_text)
                    throw std::invalid_argument("ingest mode needs corpus_text");
                std::istringstream in(*corpus_text);
                stats = run_ingest(in, cfg, sink);
            } else {
                stats = run_random(cfg, sink);
            }
            std::ostringstream csv;
            summary.write_csv(csv);
            py::dict d;
            d["records"] = stats.records;
            d["anomalies"] = stats.anomalies;
            d["parse_errors"] = stats.parse_errors;
            d["messages"] = stats.messages;
            d["jsonl"] = jsonl.str();
            d["summary_csv"] = csv.str();
            return d;
        },
        py::arg("config_text"), py::arg("corpus_text") = std::nullopt);
}
