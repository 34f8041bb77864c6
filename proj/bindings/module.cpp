// Python bindings for the core library. The surface mirrors the CLI: graph
// parsing, matching queries, feasibility, switching equivalence, structural
// classification, decomposition/augmentation and the counterexample builder.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcg/construct.hpp"
#include "mcg/dm.hpp"
#include "mcg/feasibility.hpp"
#include "mcg/graph.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"
#include "mcg/switching.hpp"

namespace py = pybind11;
using namespace mcg;

namespace {

std::vector<int> parity_list(const feasibility::ParitySpectrum& s) {
    std::vector<int> out;
    for (auto p : s.parities) out.push_back(p == feasibility::Parity::odd ? 1 : 0);
    return out;
}

}  // namespace

PYBIND11_MODULE(_mcgraph, mod) {
    mod.doc() = "Exact algorithms for perfect-matching structure";

    py::register_exception<ParseError>(mod, "GraphParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(mod, "PreconditionError", PyExc_ValueError);
    py::register_exception<LimitError>(mod, "LimitError", PyExc_RuntimeError);

    py::class_<EdgeSet>(mod, "EdgeSet")
        .def(py::init<>())
        .def(py::init<std::vector<EdgeId>>(), py::arg("ids"))
        .def_property_readonly("ids", &EdgeSet::ids)
        .def("__len__", &EdgeSet::size)
        .def("__contains__", &EdgeSet::contains)
        .def("__eq__", [](const EdgeSet& a, const EdgeSet& b) { return a == b; })
        .def("symmetric_difference", &EdgeSet::symmetric_difference)
        .def("union", &EdgeSet::set_union)
        .def("intersection", &EdgeSet::intersection)
        .def("complement", &EdgeSet::complement, py::arg("edge_count"))
        .def("__repr__", [](const EdgeSet& s) {
            std::string out = "EdgeSet([";
            for (size_t i = 0; i < s.ids().size(); ++i)
                out += (i ? ", " : "") + std::to_string(s.ids()[i]);
            return out + "])";
        });
    py::implicitly_convertible<py::list, EdgeSet>();

    py::class_<Graph>(mod, "Graph")
        .def(py::init<int, std::vector<std::pair<VertexId, VertexId>>,
                      std::vector<std::string>>(),
             py::arg("n"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("endpoints", &Graph::endpoints, py::arg("edge"))
        .def("label", &Graph::label, py::arg("vertex"))
        .def("vertex_of_label", &Graph::vertex_of_label, py::arg("label"))
        .def("degree", &Graph::degree, py::arg("vertex"))
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("find_edge", &Graph::find_edge, py::arg("u"), py::arg("v"))
        .def_property_readonly("has_bipartition", &Graph::has_bipartition)
        .def_property_readonly("bipartition",
                               [](const Graph& g)
                                   -> std::optional<std::pair<std::vector<VertexId>,
                                                              std::vector<VertexId>>> {
                                   if (!g.has_bipartition()) return std::nullopt;
                                   return std::pair{g.bipartition().side_a(),
                                                    g.bipartition().side_b()};
                               })
        .def("incident_edges", &Graph::incident_edges, py::arg("vertex"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    mod.def("parse_graph", &parse_graph, py::arg("text"));
    mod.def("serialize_graph", &serialize_graph, py::arg("graph"));
    mod.def("nabla", &nabla, py::arg("graph"), py::arg("u"));
    mod.def("components", &components, py::arg("graph"));
    mod.def("vertex_connectivity", &vertex_connectivity, py::arg("graph"));
    mod.def(
        "is_bipartite",
        [](const Graph& g) {
            auto w = is_bipartite(g);
            return py::make_tuple(w.bipartite, w.bipartite ? py::cast(w.coloring)
                                                           : py::cast(w.odd_walk));
        },
        py::arg("graph"),
        "Returns (True, coloring) or (False, odd closed walk).");

    // ---- matchings ----------------------------------------------------------
    mod.def("has_perfect_matching", &matching::has_perfect_matching, py::arg("graph"));
    mod.def(
        "perfect_matchings",
        [](const Graph& g, std::optional<long> limit) {
            auto e = matching::enumerate_perfect_matchings(g, limit);
            std::vector<EdgeSet> out;
            for (auto& m : e.matchings) out.push_back(std::move(m.edges));
            return py::make_tuple(out, e.truncated);
        },
        py::arg("graph"), py::arg("limit") = std::nullopt,
        "Returns (matchings, truncated).");
    mod.def("allowed_edges", &matching::allowed_edges, py::arg("graph"));
    mod.def("is_matching_covered", &matching::is_matching_covered, py::arg("graph"));
    mod.def("is_k_extendable", &matching::is_k_extendable, py::arg("graph"), py::arg("k"));

    // ---- feasibility and equivalence ---------------------------------------
    mod.def(
        "parity_spectrum",
        [](const Graph& g, const EdgeSet& x, std::optional<long> limit) {
            auto s = feasibility::parity_spectrum(g, x, limit);
            return py::make_tuple(parity_list(s), s.complete);
        },
        py::arg("graph"), py::arg("edges"), py::arg("limit") = std::nullopt,
        "Returns (sorted parities of |M & X| over perfect matchings M, complete).");
    mod.def("is_feasible", &feasibility::is_feasible, py::arg("graph"), py::arg("edges"),
            py::arg("limit") = std::nullopt);
    mod.def("edges_equivalent", &feasibility::edges_equivalent, py::arg("graph"), py::arg("e"),
            py::arg("f"));
    mod.def(
        "equivalent_classes",
        [](const Graph& g) {
            auto c = feasibility::equivalent_classes(g);
            return py::make_tuple(c.classes, c.nontrivial);
        },
        py::arg("graph"), "Returns (all classes, classes with >= 2 edges).");

    // ---- switching ----------------------------------------------------------
    auto verdict = [](const switching::SwitchVerdict& v) {
        return py::make_tuple(v.equivalent,
                              v.witness ? py::cast(v.witness->u) : py::none());
    };
    mod.def(
        "equivalent_to_empty",
        [verdict](const Graph& g, const EdgeSet& x) {
            return verdict(switching::equivalent_to_empty(g, x));
        },
        py::arg("graph"), py::arg("edges"), "Returns (equivalent, witness U or None).");
    mod.def(
        "equivalent_to_full",
        [verdict](const Graph& g, const EdgeSet& x) {
            return verdict(switching::equivalent_to_full(g, x));
        },
        py::arg("graph"), py::arg("edges"));
    mod.def(
        "are_switching_equivalent",
        [verdict](const Graph& g, const EdgeSet& x, const EdgeSet& y) {
            return verdict(switching::are_switching_equivalent(g, x, y));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"));
    mod.def("switch_at", &switching::switch_at, py::arg("graph"), py::arg("edges"),
            py::arg("vertex"));

    // ---- structure ----------------------------------------------------------
    py::class_<structure::ClassificationReport>(mod, "ClassificationReport")
        .def_readonly("matching_covered", &structure::ClassificationReport::matching_covered)
        .def_readonly("no_equivalent_class",
                      &structure::ClassificationReport::no_equivalent_class)
        .def_readonly("strongly_coverable",
                      &structure::ClassificationReport::strongly_coverable)
        .def_readonly("two_extendable", &structure::ClassificationReport::two_extendable)
        .def_readonly("brick", &structure::ClassificationReport::brick)
        .def_readonly("brace", &structure::ClassificationReport::brace)
        .def_readonly("equivalent_class_witness",
                      &structure::ClassificationReport::equivalent_class_witness)
        .def_readonly("non_removable_edge",
                      &structure::ClassificationReport::non_removable_edge)
        .def_readonly("non_extendable_pair",
                      &structure::ClassificationReport::non_extendable_pair);
    mod.def("classify", &structure::classify, py::arg("graph"));
    mod.def("removable_edges", &structure::removable_edges, py::arg("graph"));
    mod.def("is_strongly_coverable", &structure::is_strongly_coverable, py::arg("graph"));
    mod.def("is_brick", &structure::is_brick, py::arg("graph"));
    mod.def("is_brace", &structure::is_brace, py::arg("graph"));

    // ---- decomposition and augmentation ------------------------------------
    mod.def(
        "dm_decomposition",
        [](const Graph& g) { return dm::dm_decomposition(g).parts; },
        py::arg("graph"), "Parts Q_1..Q_k as sorted vertex sets.");
    mod.def(
        "dm_digraph",
        [](const Graph& g) {
            auto d = dm::dm_digraph(dm::dm_decomposition(g));
            return py::make_tuple(d.node_count, d.arcs);
        },
        py::arg("graph"), "Returns (node count, arcs between part indices).");
    mod.def(
        "directed_cuts",
        [](const Graph& g, bool strict) {
            auto d = dm::dm_digraph(dm::dm_decomposition(g));
            std::vector<py::tuple> out;
            for (const auto& c : dm::directed_cuts(d, strict))
                out.push_back(py::make_tuple(c.side_one, c.side_two, c.arcs));
            return out;
        },
        py::arg("graph"), py::arg("strict") = false,
        "Each cut as (side one, side two, crossing arcs).");
    mod.def(
        "augment_to_matching_covered",
        [](const Graph& g) {
            auto [bigger, plan] = dm::augment_to_matching_covered(g);
            return py::make_tuple(bigger, plan.new_edges, plan.ell, plan.exact);
        },
        py::arg("graph"), "Returns (augmented graph, new edges, ell, exact).");

    // ---- counterexample family ---------------------------------------------
    py::class_<construct::ConstructionResult>(mod, "Construction")
        .def_readonly("graph", &construct::ConstructionResult::graph)
        .def_readonly("k", &construct::ConstructionResult::k)
        .def_readonly("m", &construct::ConstructionResult::m)
        .def_readonly("link_edges", &construct::ConstructionResult::link_edges)
        .def_readonly("test_set", &construct::ConstructionResult::test_set)
        .def_property_readonly("edge_colors",
                               [](const construct::ConstructionResult& r) {
                                   return r.coloring.color_of;
                               });
    mod.def("build_gkm", &construct::build_gkm, py::arg("k"), py::arg("m"));
    mod.def(
        "verify_construction",
        [](const construct::ConstructionResult& r) {
            auto rep = construct::verify_construction(r);
            std::vector<py::tuple> checks;
            for (const auto& c : rep.checks)
                checks.push_back(py::make_tuple(c.name, c.pass, c.detail));
            return py::make_tuple(rep.all_pass(), checks);
        },
        py::arg("construction"), "Returns (all pass, [(name, pass, detail), ...]).");
    mod.def("serialize_construction", &construct::serialize_construction,
            py::arg("construction"));
    mod.def("parse_construction", &construct::parse_construction, py::arg("text"));
}
