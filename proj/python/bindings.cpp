#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "psilab/constructions.hpp"
#include "psilab/corpus.hpp"
#include "psilab/errors.hpp"
#include "psilab/mpd.hpp"
#include "psilab/psi.hpp"
#include "psilab/verify.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace psilab;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(to_py(x));
            return std::move(out);
        }
        default: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
            return std::move(out);
        }
    }
}

SearchLimits limits(std::uint64_t budget, std::uint64_t seed) { return SearchLimits{budget, seed}; }

py::object witness_dict(const std::optional<WitnessPair>& w) {
    if (!w) return py::none();
    py::dict d;
    d["m1"] = w->m1.to_vector();
    d["m2"] = w->m2.to_vector();
    d["psi_m1"] = w->psi_m1;
    d["psi_m2"] = w->psi_m2;
    d["psi_g"] = w->psi_g;
    d["xi"] = w->xi;
    d["removable_set"] = w->removable_set.to_vector();
    d["coloring"] = w->coloring.colors();
    return std::move(d);
}

Graph graph_of(const py::object& o) {
    if (py::isinstance<Graph>(o)) return o.cast<Graph>();
    return parse_graph6(o.cast<std::string>());
}

std::vector<Graph> corpus_of(const py::object& o) {
    if (o.is_none()) return embedded_corpus();
    std::vector<Graph> out;
    for (const auto& item : o) out.push_back(graph_of(py::reinterpret_borrow<py::object>(item)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pseudoachromatic number, criticality and join constructions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<Inconclusive>(m, "Inconclusive", PyExc_RuntimeError);
    py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("graph6", [](const Graph& g) { return emit_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("label", &Graph::label)
        .def("edges", &Graph::edges)
        .def("adjacent",
             [](const Graph& g, int u, int v) {
                 if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw py::index_error("vertex out of range");
                 return g.adjacent(u, v);
             })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) +
                   (g.label().empty() ? "" : " " + g.label()) + ">";
        });

    m.def("complete_graph", &complete_graph);
    m.def("edgeless_graph", &edgeless_graph);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("join", [](const py::object& g, const py::object& h) { return join(graph_of(g), graph_of(h)); });
    m.def("nabla_k", [](const py::object& g, int k) { return nabla_k(graph_of(g), k); });
    m.def("complement", [](const py::object& g) { return complement(graph_of(g)); });

    m.def("omega", [](const py::object& g) { return clique_number(graph_of(g)).size; });
    m.def("is_pseudocomplete", [](const py::object& g, const std::vector<int>& colors) {
        return is_pseudocomplete(graph_of(g), Coloring(colors)).ok;
    });

    m.def(
        "psi",
        [](const py::object& go, std::uint64_t budget, std::uint64_t seed) {
            const Graph g = graph_of(go);
            PsiOptions po;
            po.limits = limits(budget, seed);
            const PsiResult r = psi(g, po);
            py::dict d;
            d["psi"] = r.value;
            d["exact"] = r.exact;
            d["upper"] = r.upper;
            d["witness"] = r.witness.colors();
            py::list bounds;
            for (const auto& b : r.bound_trace) bounds.append(py::make_tuple(b.name, b.value));
            d["bounds"] = bounds;
            d["nodes"] = r.nodes;
            return d;
        },
        py::arg("graph"), py::arg("budget") = SearchLimits{}.max_nodes, py::arg("seed") = 0);

    m.def(
        "mpd_profile",
        [](const py::object& go, int max_k, std::uint64_t budget) {
            const MpdProfile p = mpd_profile(graph_of(go), max_k, limits(budget, 0));
            std::vector<int> out;
            for (int k = 0; k <= p.max_k(); ++k) out.push_back(p[k]);
            return out;
        },
        py::arg("graph"), py::arg("max_k") = -1, py::arg("budget") = SearchLimits{}.max_nodes);

    m.def(
        "criticality",
        [](const py::object& go, std::uint64_t budget) {
            CriticalityOptions co;
            co.limits = limits(budget, 0);
            const CriticalityReport r = analyze_criticality(graph_of(go), co);
            py::dict d;
            d["omega"] = r.omega;
            d["psi"] = r.psi;
            d["n"] = r.n;
            d["critical"] = r.critical();
            d["weakly_critical"] = r.weakly_critical();
            d["critical_by_mpd"] = r.critical_by_mpd;
            d["weakly_critical_by_mpd"] = r.weakly_critical_by_mpd;
            return d;
        },
        py::arg("graph"), py::arg("budget") = SearchLimits{}.max_nodes);

    m.def("nabla_k_coloring", [](const py::object& g, int k) { return nabla_k_coloring(graph_of(g), k).colors(); });
    m.def("join_coloring_lower",
          [](const py::object& g, const py::object& h) { return join_coloring_lower(graph_of(g), graph_of(h)).colors(); });

    m.def("witness_not_weakly_critical",
          [](const py::object& g) { return witness_dict(find_witness_not_weakly_critical(graph_of(g))); });
    m.def("witness_not_critical", [](const py::object& g) { return witness_dict(find_witness_not_critical(graph_of(g))); });

    m.def("structure", [](const py::object& go) {
        const StructureReport r = structure_coloring(graph_of(go));
        py::dict d;
        d["kind"] = to_string(r.kind);
        d["found"] = r.found;
        d["coloring"] = r.coloring ? py::cast(r.coloring->colors()) : py::none();
        py::list kinds;
        for (StructureKind k : r.kinds_found) kinds.append(to_string(k));
        d["kinds_found"] = kinds;
        d["edge_bound"] = py::make_tuple(r.edge_bound.num, r.edge_bound.den);
        d["edge_bound_satisfied"] = r.edge_bound_satisfied;
        return d;
    });

    m.def("check_ids", [] {
        std::vector<std::string> out;
        for (const auto& c : check_catalog()) out.push_back(c.id);
        return out;
    });
    m.def(
        "run_check",
        [](const std::string& id, const py::object& corpus, int threads) {
            VerifyOptions vo;
            vo.threads = threads;
            const auto graphs = corpus_of(corpus);
            CheckResult r;
            {
                py::gil_scoped_release release;
                r = run_check(id, graphs, vo);
            }
            return to_py(to_json(r));
        },
        py::arg("check_id"), py::arg("corpus") = py::none(), py::arg("threads") = 1);
}
