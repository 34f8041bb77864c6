// mcgraph: command line surface over the matching-structure library.
// Exit codes: 0 ok, 1 usage or parse error, 2 precondition or size refusal,
// 3 cross-validation disagreement.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcg/construct.hpp"
#include "mcg/crossval.hpp"
#include "mcg/dm.hpp"
#include "mcg/feasibility.hpp"
#include "mcg/gen.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"
#include "mcg/switching.hpp"

using json = nlohmann::json;
using namespace mcg;

namespace {

struct Options {
    std::string graph_path;
    std::string edges;
    std::string edges2;
    std::string target = "empty";
    std::string out_path;
    std::string suite;
    std::string mode;
    int k = 0;
    int m = 0;
    long limit = matching::kDefaultEnumerationLimit;
    uint64_t seed = 0;
    bool seed_set = false;
    int bound = 10;
    int samples = 500;
    bool human = false;
    bool strict_cuts = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const Options& o) {
    if (o.graph_path.empty()) throw ParseError(0, "--graph is required");
    return parse_graph(slurp(o.graph_path));
}

EdgeSet parse_edge_list(const Graph& g, const std::string& text) {
    std::vector<EdgeId> ids;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        auto dash = token.find('-');
        if (dash == std::string::npos)
            throw PreconditionError("edge token '" + token + "' is not of the form u-v");
        auto u = g.vertex_of_label(token.substr(0, dash));
        auto v = g.vertex_of_label(token.substr(dash + 1));
        if (!u || !v) throw PreconditionError("unknown vertex in edge token '" + token + "'");
        EdgeId e = g.find_edge(*u, *v);
        if (e < 0) throw PreconditionError("edge '" + token + "' is not in the graph");
        ids.push_back(e);
    }
    return EdgeSet(std::move(ids));
}

json edge_json(const Graph& g, EdgeId e) {
    auto [u, v] = g.endpoints(e);
    return json::array({g.label(u), g.label(v)});
}

json edge_set_json(const Graph& g, const EdgeSet& s) {
    json out = json::array();
    for (EdgeId e : s) out.push_back(edge_json(g, e));
    return out;
}

json vertex_list_json(const Graph& g, const std::vector<VertexId>& vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(g.label(v));
    return out;
}

json suite_json(const crossval::SuiteResult& r) {
    json j{{"suite", r.suite},
           {"instances", r.instances},
           {"agreements", r.agreements},
           {"dm_checked", r.dm_checked},
           {"notes", r.notes},
           {"ok", r.ok()}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

json report_json(const construct::VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"checks", checks}, {"all_pass", rep.all_pass()}};
}

// ---- command payloads -------------------------------------------------------

json cmd_classify(const Options& o) {
    Graph g = load_graph(o);
    auto r = structure::classify(g);
    json out{{"matching_covered", r.matching_covered},
             {"no_equivalent_class", r.no_equivalent_class},
             {"strongly_coverable", r.strongly_coverable},
             {"two_extendable", r.two_extendable},
             {"brick", r.brick},
             {"brace", r.brace}};
    if (r.equivalent_class_witness)
        out["equivalent_class_witness"] = edge_set_json(g, *r.equivalent_class_witness);
    if (r.non_removable_edge) out["non_removable_edge"] = edge_json(g, *r.non_removable_edge);
    if (r.non_extendable_pair)
        out["non_extendable_pair"] = json::array({edge_json(g, r.non_extendable_pair->first),
                                                  edge_json(g, r.non_extendable_pair->second)});
    return out;
}

json cmd_feasible(const Options& o) {
    Graph g = load_graph(o);
    EdgeSet x = parse_edge_list(g, o.edges);
    auto en = matching::enumerate_perfect_matchings(g, o.limit);
    bool feasible = feasibility::is_feasible(g, x, o.limit);
    auto spectrum = feasibility::parity_spectrum(g, x, o.limit);
    json parities = json::array();
    for (auto p : spectrum.parities)
        parities.push_back(p == feasibility::Parity::even ? "even" : "odd");
    return {{"feasible", feasible},
            {"parities", parities},
            {"matching_count", en.matchings.size()},
            {"truncated", en.truncated}};
}

json cmd_switch_equiv(const Options& o) {
    Graph g = load_graph(o);
    EdgeSet x = parse_edge_list(g, o.edges);
    switching::SwitchVerdict v;
    if (!o.edges2.empty())
        v = switching::are_switching_equivalent(g, x, parse_edge_list(g, o.edges2));
    else if (o.target == "empty")
        v = switching::equivalent_to_empty(g, x);
    else if (o.target == "full")
        v = switching::equivalent_to_full(g, x);
    else
        throw PreconditionError("--target must be 'empty' or 'full'");
    json out{{"equivalent", v.equivalent}};
    if (v.witness) out["witness_u"] = vertex_list_json(g, v.witness->u);
    return out;
}

json cmd_equiv_classes(const Options& o) {
    Graph g = load_graph(o);
    auto cls = feasibility::equivalent_classes(g);
    json classes = json::array(), nontrivial = json::array();
    for (const auto& c : cls.classes) classes.push_back(edge_set_json(g, c));
    for (const auto& c : cls.nontrivial) nontrivial.push_back(edge_set_json(g, c));
    return {{"classes", classes}, {"nontrivial", nontrivial}};
}

json cmd_removable(const Options& o) {
    Graph g = load_graph(o);
    EdgeSet rem = structure::removable_edges(g);
    return {{"removable", edge_set_json(g, rem)},
            {"non_removable", edge_set_json(g, rem.complement(g.edge_count()))},
            {"strongly_coverable", rem.size() == g.edge_count()}};
}

json cmd_dm(const Options& o) {
    Graph g = load_graph(o);
    auto d = dm::dm_decomposition(g);
    auto dg = dm::dm_digraph(d);
    auto [sources, sinks] = dm::sources_and_sinks(dg);
    auto family = dm::min_path_family(dg);
    auto [augmented, plan] = dm::augment_to_matching_covered(g);
    json parts = json::array();
    for (const auto& part : d.parts) parts.push_back(vertex_list_json(g, part));
    json cuts = json::array();
    for (const auto& cut : dm::directed_cuts(dg, o.strict_cuts))
        cuts.push_back({{"side_one", cut.side_one},
                        {"side_two", cut.side_two},
                        {"arcs", cut.arcs}});
    json new_edges = json::array();
    for (auto [b, a] : plan.new_edges)
        new_edges.push_back(json::array({g.label(b), g.label(a)}));
    return {{"parts", parts},
            {"arcs", dg.arcs},
            {"sources", sources},
            {"sinks", sinks},
            {"directed_cuts", cuts},
            {"ell", family.ell},
            {"exact", family.exact},
            {"paths", family.paths},
            {"new_edges", new_edges}};
}

json cmd_augment(const Options& o) {
    Graph g = load_graph(o);
    auto [augmented, plan] = dm::augment_to_matching_covered(g);
    json new_edges = json::array();
    for (auto [b, a] : plan.new_edges)
        new_edges.push_back(json::array({g.label(b), g.label(a)}));
    json out{{"ell", plan.ell},
             {"exact", plan.exact},
             {"new_edges", new_edges},
             {"augmented_graph", serialize_graph(augmented)}};
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        f << serialize_graph(augmented);
        out["out"] = o.out_path;
    }
    return out;
}

json cmd_generate(const Options& o, bool& failed) {
    auto r = construct::build_gkm(o.k, o.m);
    auto rep = construct::verify_construction(r);
    failed = !rep.all_pass();
    json out{{"k", r.k},
             {"m", r.m},
             {"vertices", r.graph.vertex_count()},
             {"edges", r.graph.edge_count()},
             {"link_edges", edge_set_json(r.graph, r.link_edges)},
             {"test_set", edge_set_json(r.graph, r.test_set)},
             {"verification", report_json(rep)}};
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        f << construct::serialize_construction(r);
        out["out"] = o.out_path;
    } else {
        out["file"] = construct::serialize_construction(r);
    }
    return out;
}

json cmd_verify(const Options& o, bool& failed) {
    if (o.graph_path.empty()) throw ParseError(0, "--graph is required");
    auto r = construct::parse_construction(slurp(o.graph_path));
    auto rep = construct::verify_construction(r);
    failed = !rep.all_pass();
    return {{"k", r.k},
            {"m", r.m},
            {"vertices", r.graph.vertex_count()},
            {"verification", report_json(rep)}};
}

json cmd_crossvalidate(const Options& o, bool& failed) {
    if (!o.seed_set && (o.suite == "main2" || o.suite == "main3" || o.suite == "lr"))
        throw ParseError(0, "--seed is required for sampled suites");
    crossval::SuiteResult r;
    if (o.suite == "main2")
        r = crossval::suite_main2(o.bound, o.samples, o.seed);
    else if (o.suite == "main3")
        r = crossval::suite_main3(o.bound, o.samples, o.seed);
    else if (o.suite == "lr")
        r = crossval::suite_lr(o.bound, o.samples, o.seed);
    else if (o.suite == "lovasz")
        r = crossval::suite_lovasz();
    else
        throw ParseError(0, "--suite must be one of main2, main3, lr, lovasz");
    failed = !r.ok();
    return suite_json(r);
}

json cmd_search(const Options& o) {
    if (o.mode == "petersen") {
        auto scan = crossval::petersen_scan();
        Graph g = gen::petersen();
        return {{"subsets", scan.subsets},
                {"non_feasible", scan.non_feasible},
                {"stubborn", scan.stubborn},
                {"example", edge_set_json(g, scan.example)}};
    }
    if (o.mode == "nec-sc") {
        auto g = crossval::find_nec_not_sc(std::min(o.bound, 6));
        if (!g) return {{"found", false}};
        return {{"found", true}, {"graph", serialize_graph(*g)}};
    }
    if (o.mode == "sc-2ext") {
        auto g = crossval::find_sc_not_2ext(std::min(o.bound, 8));
        if (!g) return {{"found", false}};
        return {{"found", true}, {"graph", serialize_graph(*g)}};
    }
    throw ParseError(0, "--mode must be one of petersen, nec-sc, sc-2ext");
}

void render_human(const json& doc, std::ostream& out, int indent = 0) {
    std::string pad(indent, ' ');
    if (doc.is_object()) {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           !it.value().front().is_primitive())) {
                out << pad << it.key() << ":\n";
                render_human(it.value(), out, indent + 2);
            } else {
                out << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (doc.is_array()) {
        for (const auto& item : doc) {
            if (item.is_primitive())
                out << pad << "- " << item.dump() << "\n";
            else {
                out << pad << "-\n";
                render_human(item, out, indent + 2);
            }
        }
    } else {
        out << pad << doc.dump() << "\n";
    }
}

int emit(const std::string& command, const json& payload, const Options& o, int code = 0,
         const std::string& error_kind = {}, const std::string& message = {}) {
    json doc{{"schema", "mcgraph/1"}, {"command", command}};
    if (code == 0) {
        doc["status"] = "ok";
        doc["payload"] = payload;
    } else {
        doc["status"] = "error";
        doc["error"] = {{"kind", error_kind}, {"message", message}};
        if (!payload.is_null()) doc["payload"] = payload;
    }
    if (o.human)
        render_human(doc, std::cout);
    else
        std::cout << doc.dump(2) << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of perfect-matching structure"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--human", o.human, "text rendering instead of the JSON document");

    std::string command;
    auto add = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();  // lets --human appear after the subcommand
        sub->callback([&command, name] { command = name; });
        return sub;
    };
    auto with_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph_path, "graph file");
        return sub;
    };

    with_graph(add("classify", "full structural classification with witnesses"));
    auto* feas = with_graph(add("feasible", "feasibility of an edge set"));
    feas->add_option("--edges", o.edges, "edge list u-v,...");
    feas->add_option("--limit", o.limit, "enumeration cap");
    auto* sw = with_graph(add("switch-equiv", "switching equivalence"));
    sw->add_option("--edges", o.edges, "edge list u-v,...");
    sw->add_option("--edges2", o.edges2, "second edge list (overrides --target)");
    sw->add_option("--target", o.target, "empty or full");
    with_graph(add("equiv-classes", "equivalence classes of the edge set"));
    with_graph(add("removable", "removable edges"));
    auto* dmc = with_graph(add("dm", "decomposition, digraph, cuts, augmentation plan"));
    dmc->add_flag("--strict-cuts", o.strict_cuts, "require weakly connected cut sides");
    auto* aug = with_graph(add("augment", "minimal augmentation to matching-covered"));
    aug->add_option("--out", o.out_path, "write augmented graph here");
    auto* genc = add("generate", "build and verify the linked-copies construction");
    genc->add_option("--k", o.k, "regularity, k >= 3")->required();
    genc->add_option("--m", o.m, "number of copies, m >= 2")->required();
    genc->add_option("--out", o.out_path, "write annotated graph file here");
    with_graph(add("verify", "re-verify an annotated construction file"));
    auto* cv = add("crossvalidate", "run two independent procedures over a corpus");
    cv->add_option("--suite", o.suite, "main2, main3, lr, lovasz")->required();
    cv->add_option("--bound", o.bound, "size bound / graph count");
    cv->add_option("--samples", o.samples, "sampled instances / subsets per graph");
    cv->add_option("--seed", o.seed, "sampling seed")->each([&](const std::string&) {
        o.seed_set = true;
    });
    auto* se = add("search", "exploratory searches");
    se->add_option("--mode", o.mode, "petersen, nec-sc, sc-2ext")->required();
    se->add_option("--bound", o.bound, "search size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        bool failed = false;
        json payload;
        if (command == "classify") payload = cmd_classify(o);
        else if (command == "feasible") payload = cmd_feasible(o);
        else if (command == "switch-equiv") payload = cmd_switch_equiv(o);
        else if (command == "equiv-classes") payload = cmd_equiv_classes(o);
        else if (command == "removable") payload = cmd_removable(o);
        else if (command == "dm") payload = cmd_dm(o);
        else if (command == "augment") payload = cmd_augment(o);
        else if (command == "generate") payload = cmd_generate(o, failed);
        else if (command == "verify") payload = cmd_verify(o, failed);
        else if (command == "crossvalidate") payload = cmd_crossvalidate(o, failed);
        else if (command == "search") payload = cmd_search(o);
        if (failed)
            return emit(command, payload, o, 3, "disagreement",
                        "verification or cross-validation failed");
        return emit(command, payload, o);
    } catch (const ParseError& e) {
        return emit(command, nullptr, o, 1, "parse", e.what());
    } catch (const PreconditionError& e) {
        return emit(command, nullptr, o, 2, "precondition", e.what());
    } catch (const LimitError& e) {
        return emit(command, nullptr, o, 2, "limit", e.what());
    } catch (const std::exception& e) {
        return emit(command, nullptr, o, 2, "internal", e.what());
    }
}
