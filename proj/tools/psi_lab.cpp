#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "psilab/coloring.hpp"
#include "psilab/constructions.hpp"
#include "psilab/corpus.hpp"
#include "psilab/errors.hpp"
#include "psilab/graph.hpp"
#include "psilab/mpd.hpp"
#include "psilab/psi.hpp"
#include "psilab/verify.hpp"

using nlohmann::json;
using namespace psilab;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kInconclusive = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t budget = 100'000'000;
    std::uint64_t seed = 0;
    int indent = 2;
    int threads = 0;
    std::string output;
};

SearchLimits limits_of(const Globals& g) { return SearchLimits{g.budget, g.seed}; }

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Text behind an input argument: "-" is stdin, an existing path is read, anything
// else is taken literally as graph6.
std::string input_text(const std::string& arg) {
    if (arg == "-") return slurp(std::cin);
    std::ifstream f(arg);
    if (f) return slurp(f);
    return arg;
}

std::vector<Graph> graphs_from_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        // Output of join / nabla.
        json doc = json::parse(text, nullptr, false);
        if (doc.is_discarded() || !doc.contains("graph6") || !doc["graph6"].is_string())
            throw UsageError("JSON input must carry a \"graph6\" string");
        return {parse_graph6(doc["graph6"].get<std::string>())};
    }
    std::istringstream in(text);
    return read_graph6_stream(in);
}

Graph one_graph(const std::string& arg) {
    auto gs = graphs_from_text(input_text(arg));
    if (gs.empty()) throw UsageError("no graph in input '" + arg + "'");
    if (gs.size() > 1) throw UsageError("expected one graph in input '" + arg + "', found " + std::to_string(gs.size()));
    return gs.front();
}

std::vector<Graph> corpus_from(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read corpus file '" + path + "'");
    return read_graph6_stream(f);
}

json bounds_json(const std::vector<BoundEntry>& trace) {
    json out = json::array();
    for (const auto& b : trace) out.push_back({{"name", b.name}, {"value", b.value}});
    return out;
}

json set_json(VertexSet s) { return s.to_vector(); }

json profile_json(const MpdProfile& p) {
    json entries = json::array();
    for (int k = 0; k <= p.max_k(); ++k)
        entries.push_back({{"k", k}, {"mpd", p[k]}, {"realizer", set_json(p.entries[static_cast<std::size_t>(k)].realizer)}});
    return entries;
}

json graph_json(const Graph& g) {
    return {{"graph6", emit_graph6(g)}, {"n", g.order()}, {"m", g.edge_count()}};
}

json schema(const std::string& name) { return {{"schema", "psi-lab/" + name + "/1"}}; }

int cmd_psi(const Globals& gl, const std::string& arg, json& out) {
    const Graph g = one_graph(arg);
    PsiOptions po;
    po.limits = limits_of(gl);
    const PsiResult r = psi(g, po);
    out = schema("psi");
    out.update(graph_json(g));
    out["omega"] = clique_number(g).size;
    out["psi"] = r.value;
    out["exact"] = r.exact;
    out["upper"] = r.upper;
    out["witness"] = r.witness.colors();
    out["bounds"] = bounds_json(r.bound_trace);
    out["nodes"] = r.nodes;
    return r.exact ? kOk : kInconclusive;
}

int cmd_omega(const std::string& arg, json& out) {
    const Graph g = one_graph(arg);
    const CliqueResult c = clique_number(g);
    out = schema("omega");
    out.update(graph_json(g));
    out["omega"] = c.size;
    out["clique"] = set_json(c.witness);
    return kOk;
}

int cmd_mpd(const Globals& gl, const std::string& arg, std::optional<int> k, json& out) {
    const Graph g = one_graph(arg);
    if (g.order() > kDefaultSubsetSearchMaxOrder)
        throw UnsupportedSize("mpd enumerates vertex subsets; order " + std::to_string(g.order()) + " exceeds " +
                              std::to_string(kDefaultSubsetSearchMaxOrder));
    SubsetPsiTable table(g, limits_of(gl));
    out = schema("mpd");
    out.update(graph_json(g));
    out["psi"] = table.psi(g.vertices());
    if (k) {
        const MpdEntry e = mpd(table, *k);
        out["k"] = *k;
        out["mpd"] = e.value;
        out["realizer"] = set_json(e.realizer);
    } else {
        out["profile"] = profile_json(mpd_profile(table));
    }
    return kOk;
}

int cmd_critical(const Globals& gl, const std::string& arg, json& out) {
    const Graph g = one_graph(arg);
    CriticalityOptions co;
    co.limits = limits_of(gl);
    const CriticalityReport r = analyze_criticality(g, co);
    out = schema("critical");
    out.update(graph_json(g));
    out["omega"] = r.omega;
    out["psi"] = r.psi;
    out["critical"] = r.critical();
    out["weakly_critical"] = r.weakly_critical();
    out["bounds"] = {{"lemma_bound", (r.omega + r.n) / 2}, {"twice_psi", 2 * r.psi}, {"omega_plus_n", r.omega + r.n}};
    json routes = {{"formula", {{"critical", r.critical_by_formula}, {"weakly_critical", r.weakly_critical_by_formula}}}};
    if (r.critical_by_mpd)
        routes["mpd"] = {{"critical", *r.critical_by_mpd}, {"weakly_critical", *r.weakly_critical_by_mpd}};
    else
        routes["mpd"] = nullptr;
    out["routes"] = routes;
    if (r.critical_failing_k) out["critical_failing_k"] = *r.critical_failing_k;
    if (r.weak_failing_k) out["weak_failing_k"] = *r.weak_failing_k;
    if (r.profile) out["mpd_profile"] = profile_json(*r.profile);
    return kOk;
}

int cmd_join(const std::vector<std::string>& args, json& out) {
    if (args.size() != 2) throw UsageError("join takes exactly two graphs");
    const Graph g = one_graph(args[0]);
    const Graph h = one_graph(args[1]);
    const Graph j = join(g, h);
    out = schema("graph");
    out.update(graph_json(j));
    out["operation"] = "join";
    out["operands"] = {emit_graph6(g), emit_graph6(h)};
    if (g.order() > 0 && h.order() > 0) out["psi_lower_bound"] = join_lower_bound(g, h);
    return kOk;
}

int cmd_nabla(const std::string& arg, int k, json& out) {
    const Graph g = one_graph(arg);
    const Graph big = nabla_k(g, k);
    out = schema("graph");
    out.update(graph_json(big));
    out["operation"] = "nabla";
    out["k"] = k;
    out["operands"] = {emit_graph6(g)};
    if (k >= 2 && g.order() > 0) {
        const Coloring c = nabla_k_coloring(g, k);
        out["coloring"] = c.colors();
        out["psi_lower_bound"] = c.num_colors();
    }
    return kOk;
}

json witness_json(const std::optional<WitnessPair>& w) {
    if (!w) return nullptr;
    return {{"m1", set_json(w->m1)},     {"m2", set_json(w->m2)},
            {"psi_m1", w->psi_m1},       {"psi_m2", w->psi_m2},
            {"psi_g", w->psi_g},         {"xi", w->xi},
            {"removable_set", set_json(w->removable_set)}, {"coloring", w->coloring.colors()}};
}

int cmd_witness(const Globals& gl, const std::string& arg, const std::string& variant, json& out) {
    const Graph g = one_graph(arg);
    WitnessOptions wo;
    wo.limits = limits_of(gl);
    out = schema("witness");
    out.update(graph_json(g));
    if (variant == "weak" || variant == "both") out["not_weakly_critical"] = witness_json(find_witness_not_weakly_critical(g, wo));
    if (variant == "critical" || variant == "both") out["not_critical"] = witness_json(find_witness_not_critical(g, wo));
    return kOk;
}

int cmd_structure(const Globals& gl, const std::string& arg, json& out) {
    const Graph g = one_graph(arg);
    StructureOptions so;
    so.limits = limits_of(gl);
    const StructureReport r = structure_coloring(g, so);
    out = schema("structure");
    out.update(graph_json(g));
    out["omega"] = r.omega;
    out["psi"] = r.psi;
    out["critical"] = r.critical;
    out["weakly_critical"] = r.weakly_critical;
    out["kind"] = to_string(r.kind);
    out["found"] = r.found;
    json kinds = json::array();
    for (StructureKind k : r.kinds_found) kinds.push_back(to_string(k));
    out["kinds_found"] = kinds;
    out["coloring"] = r.coloring ? json(r.coloring->colors()) : json(nullptr);
    if (r.profile) {
        json counts = json::object();
        for (auto [k, n] : r.profile->counts) counts[std::to_string(k)] = n;
        out["multiplicity"] = counts;
    }
    if (r.coloring && r.kind == StructureKind::critical) out["contraction_complete"] = contraction_complete_check(g, *r.coloring);
    out["edge_bound"] = {{"num", r.edge_bound.num}, {"den", r.edge_bound.den}, {"satisfied", r.edge_bound_satisfied}};
    return r.kind != StructureKind::none && !r.found ? kInconclusive : kOk;
}

int cmd_verify(const Globals& gl, const std::string& corpus_path, const std::vector<std::string>& checks, bool list,
               json& out) {
    if (list) {
        out = schema("catalog");
        json items = json::array();
        for (const auto& c : check_catalog()) items.push_back({{"check_id", c.id}, {"claim", c.claim}});
        out["checks"] = items;
        return kOk;
    }
    const std::vector<Graph> corpus = corpus_path.empty() ? embedded_corpus() : corpus_from(corpus_path);
    VerifyOptions vo;
    vo.limits = limits_of(gl);
    vo.threads = gl.threads;
    Verifier v(vo);
    std::vector<CheckResult> results;
    try {
        results = v.run_checks(checks, corpus);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out = to_json(results);
    out["corpus"] = corpus_path.empty() ? "embedded" : corpus_path;
    bool failed = false;
    bool inconclusive = false;
    for (const auto& r : results) {
        failed = failed || r.status == CheckStatus::failed;
        inconclusive = inconclusive || r.status == CheckStatus::inconclusive;
    }
    if (failed) return kCheckFailed;
    return inconclusive ? kInconclusive : kOk;
}

void emit(const Globals& gl, const json& doc) {
    const std::string text = doc.dump(gl.indent) + "\n";
    if (gl.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(gl.output);
    if (!f) throw UsageError("cannot write '" + gl.output + "'");
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudoachromatic number laboratory"};
    app.require_subcommand(1, 1);
    Globals gl;
    if (const char* env = std::getenv("PSILAB_BUDGET")) {
        try {
            gl.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "psi-lab: PSILAB_BUDGET is not a number: " << env << "\n";
            return kUsage;
        }
    }
    app.add_option("--budget", gl.budget, "Search node budget per feasibility search (env PSILAB_BUDGET)");
    app.add_option("--seed", gl.seed, "Tie-break seed for the search order");
    app.add_option("--json-indent", gl.indent, "JSON indentation; -1 for a single line");
    app.add_option("--threads", gl.threads, "Worker threads for verify (0: all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--output", gl.output, "Write JSON here instead of stdout");

    std::string input;
    std::vector<std::string> inputs;
    std::optional<int> k;
    int nabla_k_value = 0;
    std::string variant = "both";
    std::string corpus_path;
    std::vector<std::string> checks;
    bool list = false;

    auto* psi_cmd = app.add_subcommand("psi", "Pseudoachromatic number with witness coloring");
    psi_cmd->add_option("graph", input, "graph6, file, or - for stdin")->required();
    auto* omega_cmd = app.add_subcommand("omega", "Clique number");
    omega_cmd->add_option("graph", input)->required();
    auto* mpd_cmd = app.add_subcommand("mpd", "Minimal psi-drop, one k or the full profile");
    mpd_cmd->add_option("graph", input)->required();
    mpd_cmd->add_option("--k", k, "Removed vertex count");
    auto* crit_cmd = app.add_subcommand("critical", "Critical and weakly critical tests");
    crit_cmd->add_option("graph", input)->required();
    auto* join_cmd = app.add_subcommand("join", "Join of two graphs");
    join_cmd->add_option("graphs", inputs)->required()->expected(2);
    auto* nabla_cmd = app.add_subcommand("nabla", "Join of k copies of a graph");
    nabla_cmd->add_option("graph", input)->required();
    nabla_cmd->add_option("--k", nabla_k_value, "Number of copies")->required();
    auto* witness_cmd = app.add_subcommand("witness", "Nested witness pair for non-(weak) criticality");
    witness_cmd->add_option("graph", input)->required();
    witness_cmd->add_option("--variant", variant)->check(CLI::IsMember({"weak", "critical", "both"}));
    auto* structure_cmd = app.add_subcommand("structure", "Maximum coloring of critical or weakly critical shape");
    structure_cmd->add_option("graph", input)->required();
    auto* verify_cmd = app.add_subcommand("verify", "Replay the theorem checks over a corpus");
    verify_cmd->add_option("--corpus", corpus_path, "graph6 file, one graph per line (default: embedded corpus)");
    verify_cmd->add_option("--check", checks, "Check id; repeatable (default: all)");
    verify_cmd->add_flag("--list", list, "List check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        json out;
        int code = kOk;
        if (*psi_cmd) code = cmd_psi(gl, input, out);
        else if (*omega_cmd) code = cmd_omega(input, out);
        else if (*mpd_cmd) code = cmd_mpd(gl, input, k, out);
        else if (*crit_cmd) code = cmd_critical(gl, input, out);
        else if (*join_cmd) code = cmd_join(inputs, out);
        else if (*nabla_cmd) code = cmd_nabla(input, nabla_k_value, out);
        else if (*witness_cmd) code = cmd_witness(gl, input, variant, out);
        else if (*structure_cmd) code = cmd_structure(gl, input, out);
        else if (*verify_cmd) code = cmd_verify(gl, corpus_path, checks, list, out);
        emit(gl, out);
        return code;
    } catch (const Inconclusive& e) {
        std::cerr << "psi-lab: inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const ParseError& e) {
        std::cerr << "psi-lab: malformed graph6: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "psi-lab: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "psi-lab: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        // A self-check inside the library failed.
        std::cerr << "psi-lab: check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "psi-lab: " << e.what() << "\n";
        return kUsage;
    }
}
