#include "verify.hpp"

#include "ghostlab/ghostlab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ghostlab;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Options {
    std::string graph, multiplicity, element, annotations, emit_dot, suite;
    std::string format = "text";
    Residue level = 0;
    int max_edges = 5, max_vertices = 4;
    int genus = 0, index = 0;
    std::uint64_t budget = 0;
    unsigned threads = 0;
};

struct Input {
    DualGraph graph;
    std::optional<MultiplicityCochain> M;
};

class UsageError : public Error {
public:
    using Error::Error;
};

Input load_graph(const Options& o, bool need_multiplicity) {
    if (o.graph.empty()) throw UsageError("--graph is required");
    auto j = read_json_file(o.graph);
    GraphSpec spec;
    try {
        spec = graph_spec_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(o.graph + ": " + e.what());
    }
    if (auto v = validate(spec); !v) throw GraphError(o.graph + ": " + v.error);
    Input in{DualGraph::from_spec(spec), std::nullopt};
    try {
        if (!o.multiplicity.empty())
            in.M = multiplicity_from_json(read_json_file(o.multiplicity), in.graph);
        else if (j.contains("multiplicity"))
            in.M = multiplicity_from_json(j["multiplicity"], in.graph);
    } catch (const ParseError& e) {
        throw ParseError((o.multiplicity.empty() ? o.graph : o.multiplicity) + ": " + e.what());
    }
    if (in.M && o.level && in.M->level() != o.level)
        throw UsageError("multiplicity has level " + std::to_string(in.M->level()) + " but --level is " +
                         std::to_string(o.level));
    if (!in.M && o.level) in.M = MultiplicityCochain::zero(in.graph, o.level);
    if (need_multiplicity && !in.M)
        throw UsageError("a multiplicity is required: pass --multiplicity, embed one in the graph file, or give --level");
    return in;
}

void need_level(const Options& o) {
    if (o.level < 1) throw UsageError("--level must be a positive integer");
}

std::uint64_t budget(const Options& o) { return o.budget ? o.budget : default_budget(); }

void maybe_emit_dot(const Options& o, const Input& in) {
    if (o.emit_dot.empty() || !in.M) return;
    std::ofstream out(o.emit_dot);
    if (!out) throw Error(o.emit_dot + ": cannot write file");
    out << tower_dot(in.graph, *in.M);
}

std::string edge_values(const DualGraph& g, const std::vector<Residue>& values) {
    std::string s;
    for (int e = 0; e < g.edge_count(); ++e) s += (e ? " " : "") + g.edge(e).id + "=" + std::to_string(values[e]);
    return s;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_analyze(const Options& o) {
    auto in = load_graph(o, false);
    maybe_emit_dot(o, in);
    const auto& g = in.graph;
    if (o.format == "dot") {
        if (!in.M) throw UsageError("--format dot needs a multiplicity");
        std::cout << tower_dot(g, *in.M);
        return kOk;
    }
    auto stable = validate(g, true);
    Json j;
    j["graph"] = to_json(g.to_spec());
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["betti1"] = betti1(g);
    j["genus"] = total_genus(g);
    j["stable"] = stable.ok;
    if (!stable.ok) j["stability_issue"] = stable.error;
    std::optional<GhostGroup> group;
    if (in.M) {
        j["multiplicity"] = to_json(*in.M, g);
        Json towers = Json::array();
        for (const auto& t : contraction_towers(g, *in.M)) {
            std::vector<int> counts;
            for (std::size_t k = 0; k < t.stages.size(); ++k) counts.push_back(t.vertex_count(static_cast<int>(k)));
            towers.push_back({{"prime", t.prime.prime}, {"vertex_counts", counts}, {"vertex_sum", t.vertex_sum()}});
        }
        j["towers"] = towers;
        group = ghost_group(g, *in.M);
        j["ghost_group"] = {{"order", to_string(group->order)}, {"elementary_divisors", group->elementary_divisors()}};
        j["component_length"] = to_string(component_length(g, *in.M));
    }
    if (o.format == "json") {
        print_json(j);
        return kOk;
    }
    std::cout << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", b1 " << betti1(g)
              << ", genus " << total_genus(g) << "\n";
    std::cout << (stable.ok ? "stable" : "not stable: " + stable.error) << "\n";
    if (in.M) {
        std::cout << "multiplicity (level " << in.M->level() << "): " << edge_values(g, in.M->cochain().values)
                  << "\n";
        auto profile = valuation(*in.M);
        for (const auto& t : contraction_towers(g, *in.M)) {
            std::cout << "p = " << t.prime.prime << ": nu =";
            for (auto v : profile.for_prime(t.prime.prime).per_edge) std::cout << " " << v.to_string();
            std::cout << "; #V(k) for k = 0.." << t.prime.exponent << ":";
            for (std::size_t k = 0; k < t.stages.size(); ++k) std::cout << " " << t.vertex_count(static_cast<int>(k));
            std::cout << "; sum " << t.vertex_sum() << "\n";
        }
        std::cout << "ghost group order " << to_string(group->order) << ", divisors "
                  << Json(group->elementary_divisors()).dump() << "\n";
        std::cout << "component length " << to_string(component_length(g, *in.M)) << "\n";
    }
    return kOk;
}

int cmd_ghosts(const Options& o) {
    auto in = load_graph(o, true);
    maybe_emit_dot(o, in);
    const auto& g = in.graph;
    auto group = ghost_group(g, *in.M);
    if (o.format == "json") {
        print_json(to_json(group, g));
        return kOk;
    }
    if (o.format == "dot") {
        std::cout << tower_dot(g, *in.M);
        return kOk;
    }
    std::cout << "order " << to_string(group.order) << "\n";
    std::cout << "divisors " << Json(group.elementary_divisors()).dump() << "\n";
    for (const auto& c : group.components) {
        std::cout << "p = " << c.prime.prime << ": #V(k) =";
        for (int v : c.vertex_counts) std::cout << " " << v;
        std::cout << "; summands Z/p^k for k = 1.." << c.prime.exponent << ":";
        for (int a : c.alpha) std::cout << " " << a;
        std::cout << "\n";
    }
    for (const auto& gen : group.generators) {
        auto r = classify(gen.element);
        std::cout << "generator order " << gen.order << ", age " << to_string(r.age) << " " << to_string(r.verdict)
                  << ": " << edge_values(g, gen.element.values) << "\n";
    }
    return kOk;
}

int cmd_age(const Options& o) {
    auto in = load_graph(o, true);
    if (o.element.empty()) throw UsageError("--element is required");
    SymmetricFunction a;
    try {
        a = ghost_from_json(read_json_file(o.element), in.graph);
    } catch (const ParseError& e) {
        throw ParseError(o.element + ": " + e.what());
    }
    if (a.level != in.M->level())
        throw UsageError("element has level " + std::to_string(a.level) + " but the multiplicity has level " +
                         std::to_string(in.M->level()));
    if (!in_symmetric_group(a, *in.M)) throw CochainError(o.element + ": element is not a symmetric function in S_nu");
    auto report = classify(a);
    bool ghost = is_ghost(in.graph, a, *in.M);
    if (o.format == "json") {
        auto j = to_json(report, in.graph);
        j["is_ghost"] = ghost;
        print_json(j);
        return kOk;
    }
    std::cout << to_string(report.age) << " " << to_string(report.verdict) << "\n";
    if (!ghost) std::cout << "note: element is not a ghost for this multiplicity\n";
    return kOk;
}

int cmd_classify(const Options& o) {
    auto in = load_graph(o, true);
    maybe_emit_dot(o, in);
    CurveAnnotations notes;
    if (!o.annotations.empty()) {
        try {
            notes = annotations_from_json(read_json_file(o.annotations));
        } catch (const ParseError& e) {
            throw ParseError(o.annotations + ": " + e.what());
        }
    }
    auto report = classify_point(in.graph, *in.M, notes, budget(o));
    if (o.format == "json") {
        print_json(to_json(report, in.graph));
        return kOk;
    }
    std::cout << to_string(report.verdict) << "\n";
    for (const auto& r : report.reasons) {
        std::cout << "  " << to_string(r.tag);
        if (r.junior)
            std::cout << ": age " << to_string(r.junior->age) << ", " << edge_values(in.graph, r.junior->element.values);
        if (!r.vertex.empty()) std::cout << ": vertex " << r.vertex;
        std::cout << "\n";
    }
    if (report.junior_scan == ScanMethod::generators)
        std::cout << "note: junior search covered the subgroup spanned by the computed generators\n";
    return kOk;
}

int cmd_hunt(const Options& o) {
    need_level(o);
    auto report = junior_sweep(o.level, o.max_edges, o.max_vertices, budget(o), o.threads);
    if (o.format == "json") {
        print_json(to_json(report));
        return kOk;
    }
    std::cout << "level " << report.level << ", up to " << report.max_vertices << " vertices and " << report.max_edges
              << " edges\n";
    std::cout << "graphs " << report.graphs << ", instances " << report.instances << ", junior witnesses "
              << report.witnesses << ", skipped " << report.skipped << "\n";
    if (report.max_age_below_1) std::cout << "largest junior age " << to_string(*report.max_age_below_1) << "\n";
    std::size_t shown = 0;
    for (const auto& inst : report.reported) {
        if (++shown > 10) {
            std::cout << "... " << report.reported.size() - 10 << " more (use --format json)\n";
            break;
        }
        auto g = DualGraph::from_spec(inst.graph);
        std::cout << "  " << g.vertex_count() << " vertices, M = " << values_string(inst.multiplicity.values);
        if (inst.witness)
            std::cout << ", a = " << values_string(inst.witness->element.values) << ", age "
                      << to_string(inst.witness->age);
        if (!inst.skipped.empty()) std::cout << ", skipped: " << inst.skipped;
        std::cout << "\n";
    }
    return kOk;
}

int cmd_witness(const Options& o) {
    need_level(o);
    auto w = junior_witness(o.level);
    if (o.format == "json") {
        if (!w) {
            print_json({{"level", o.level}, {"witness", nullptr}});
            return kOk;
        }
        Json j;
        j["level"] = o.level;
        j["construction"] = w->construction;
        j["graph"] = to_json(w->graph.to_spec());
        j["multiplicity"] = to_json(w->multiplicity, w->graph);
        j["ghost"] = to_json(w->ghost, w->graph);
        j["age"] = to_string(w->age);
        print_json(j);
        return kOk;
    }
    if (!w) {
        std::cout << "none exists\n";
        return kOk;
    }
    std::cout << "junior ghost at level " << o.level << ", age " << to_string(w->age) << "\n";
    std::cout << "construction: " << w->construction << "\n";
    for (const auto& v : w->graph.vertices()) std::cout << "  vertex " << v.id << " genus " << v.genus << "\n";
    for (int e = 0; e < w->graph.edge_count(); ++e) {
        const auto& ed = w->graph.edge(e);
        std::cout << "  edge " << ed.id << " " << w->graph.vertex(ed.tail).id << " -> " << w->graph.vertex(ed.head).id
                  << "  M = " << w->multiplicity[e] << "  a = " << w->ghost.values[e] << "\n";
    }
    return kOk;
}

int cmd_fiber(const Options& o) {
    need_level(o);
    Options plain = o;
    plain.level = 0;
    plain.multiplicity.clear();
    auto in = load_graph(plain, false);
    auto audit = fiber_audit(in.graph, o.level);
    if (o.format == "json") {
        print_json(to_json(audit, in.graph));
        return kOk;
    }
    std::cout << "level " << audit.level << ", genus " << audit.genus << ", " << audit.multiplicities
              << " multiplicities\n";
    for (const auto& row : audit.rows)
        std::cout << "  M = " << values_string(row.multiplicity.values) << ": " << to_string(row.components)
                  << " components of length " << to_string(row.length) << "\n";
    std::cout << "total " << to_string(audit.total) << " = " << o.level << "^" << 2 * audit.genus << "\n";
    return kOk;
}

int cmd_degrees(const Options& o) {
    need_level(o);
    if (o.genus < 2) throw UsageError("--genus must be at least 2");
    auto degree = forgetful_degree(o.genus, o.level);
    std::vector<BoundaryDegrees> tables;
    if (is_prime(o.level)) {
        if (o.index) {
            tables.push_back(boundary_degrees_prime(o.genus, o.level, o.index));
        } else {
            for (int i = 1; i <= o.genus / 2; ++i) tables.push_back(boundary_degrees_prime(o.genus, o.level, i));
        }
    } else if (o.index) {
        throw Error("boundary degrees need a prime level, got " + std::to_string(o.level));
    }
    if (o.format == "json") {
        Json j;
        j["genus"] = o.genus;
        j["level"] = o.level;
        j["phi"] = to_string(phi(2 * o.genus, o.level));
        j["forgetful_degree"] = to_string(degree);
        j["boundary"] = Json::array();
        for (const auto& t : tables) j["boundary"].push_back(to_json(t));
        print_json(j);
        return kOk;
    }
    std::cout << "Phi_" << 2 * o.genus << "(" << o.level << ") = " << to_string(phi(2 * o.genus, o.level)) << "\n";
    std::cout << "forgetful degree " << to_string(degree) << "\n";
    for (const auto& t : tables) {
        std::cout << "i = " << t.index << ":\n";
        for (const auto& d : t.reducible) std::cout << "  " << d.name << " " << to_string(d.degree) << "\n";
        std::cout << "  sum " << to_string(t.reducible_sum) << "\n";
        if (t.irreducible_sum) {
            for (const auto& d : t.irreducible)
                std::cout << "  " << d.name << " " << to_string(d.degree) << " (weight " << d.weight << ")\n";
            std::cout << "  weighted sum " << to_string(*t.irreducible_sum) << "\n";
        }
        std::cout << "  " << (t.consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    if (o.suite != "worked-examples") throw UsageError("unknown suite '" + o.suite + "' (available: worked-examples)");
    return cli::run_worked_examples(std::cout) == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ghost automorphisms, ages and singularities of level curves"};
    app.require_subcommand(1);
    Options o;

    auto add = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--graph", o.graph, "graph JSON file");
        sub->add_option("--multiplicity", o.multiplicity, "multiplicity JSON file");
        sub->add_option("--element", o.element, "symmetric function JSON file");
        sub->add_option("--annotations", o.annotations, "annotation JSON file");
        sub->add_option("--level", o.level, "level l");
        sub->add_option("--max-edges", o.max_edges, "edge bound for sweeps")->capture_default_str();
        sub->add_option("--max-vertices", o.max_vertices, "vertex bound for sweeps")->capture_default_str();
        sub->add_option("--budget", o.budget, "oracle candidate budget (default 10^7 or GHOSTLAB_BUDGET)");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}))
            ->capture_default_str();
        sub->add_option("--emit-dot", o.emit_dot, "also write the contraction towers as DOT");
        sub->add_option("--genus", o.genus, "genus g");
        sub->add_option("--index", o.index, "boundary index i");
        sub->add_option("--threads", o.threads, "worker threads for sweeps (0 = all cores)");
        sub->add_option("--suite", o.suite, "verification suite");
        return sub;
    };
    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> verbs{
        {add("analyze", "summary of a graph and its multiplicity"), cmd_analyze},
        {add("ghosts", "ghost group structure and generators"), cmd_ghosts},
        {add("age", "age of a symmetric function"), cmd_age},
        {add("classify", "smooth / canonical / noncanonical verdict"), cmd_classify},
        {add("hunt-junior", "sweep small graphs for junior ghosts"), cmd_hunt},
        {add("witness", "junior ghost construction for a level"), cmd_witness},
        {add("fiber", "fiber length audit over all multiplicities"), cmd_fiber},
        {add("degrees", "forgetful and boundary degrees"), cmd_degrees},
        {add("verify", "run a built-in verification suite"), cmd_verify},
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        for (auto& [sub, fn] : verbs)
            if (sub->parsed()) return fn(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (" << e.scanned() << " scanned)\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kMismatch;
    }
    return kInvalid;
}
