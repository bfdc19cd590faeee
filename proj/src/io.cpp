#include "ghostlab/io.hpp"

#include <fstream>
#include <sstream>

namespace ghostlab {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
    return *it;
}

std::string get_string(const Json& j, const std::string& key, const std::string& where) {
    const auto& v = require(j, key, where);
    if (!v.is_string()) throw ParseError(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Residue get_int(const Json& j, const std::string& key, const std::string& where) {
    const auto& v = require(j, key, where);
    if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
    return v.get<Residue>();
}

std::vector<Residue> edge_values(const Json& j, const DualGraph& graph, const std::string& where) {
    std::vector<Residue> values(graph.edge_count(), 0);
    auto it = j.find("values");
    if (it == j.end()) return values;
    if (!it->is_object()) throw ParseError(where + ": \"values\" must be an object keyed by edge id");
    for (const auto& [id, v] : it->items()) {
        int e;
        try {
            e = graph.edge_index(id);
        } catch (const GraphError&) {
            throw ParseError(where + ": unknown edge id \"" + id + "\"");
        }
        if (!v.is_number_integer()) throw ParseError(where + ": value of edge \"" + id + "\" must be an integer");
        values[e] = v.get<Residue>();
    }
    return values;
}

Json values_object(const std::vector<Residue>& values, const DualGraph& graph) {
    Json out = Json::object();
    for (int e = 0; e < graph.edge_count(); ++e) out[graph.edge(e).id] = values.at(e);
    return out;
}

Residue positive_modulus(const Json& j, const std::string& key, const std::string& where) {
    Residue n = get_int(j, key, where);
    if (n < 1) throw ParseError(where + ": \"" + key + "\" must be positive");
    return n;
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

GraphSpec graph_spec_from_json(const Json& j) {
    GraphSpec spec;
    const auto& vertices = require(j, "vertices", "graph");
    const auto& edges = require(j, "edges", "graph");
    if (!vertices.is_array() || !edges.is_array()) throw ParseError("graph: \"vertices\" and \"edges\" must be arrays");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::string where = "graph vertex #" + std::to_string(i);
        const auto& v = vertices[i];
        VertexSpec vs{get_string(v, "id", where), 0};
        if (v.contains("genus")) vs.genus = static_cast<int>(get_int(v, "genus", where));
        spec.vertices.push_back(std::move(vs));
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string where = "graph edge #" + std::to_string(i);
        const auto& e = edges[i];
        spec.edges.push_back({get_string(e, "id", where), get_string(e, "tail", where), get_string(e, "head", where)});
    }
    return spec;
}

Json to_json(const GraphSpec& spec) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : spec.vertices) j["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
    j["edges"] = Json::array();
    for (const auto& e : spec.edges) j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    return j;
}

Cochain1 cochain_from_json(const Json& j, const DualGraph& graph, const std::string& modulus_key) {
    const std::string where = modulus_key == "level" ? "multiplicity" : "cochain";
    Residue n = positive_modulus(j, modulus_key, where);
    return Cochain1(n, edge_values(j, graph, where));
}

Json cochain_to_json(const Cochain1& c, const DualGraph& graph, const std::string& modulus_key) {
    Json j;
    j[modulus_key] = c.modulus;
    j["values"] = values_object(c.values, graph);
    return j;
}

MultiplicityCochain multiplicity_from_json(const Json& j, const DualGraph& graph) {
    auto c = cochain_from_json(j, graph, "level");
    if (!in_ker_partial(graph, c))
        throw ParseError("multiplicity: not in ker ∂ (sum at some vertex is nonzero mod " +
                         std::to_string(c.modulus) + ")");
    return MultiplicityCochain(graph, std::move(c));
}

Json to_json(const MultiplicityCochain& M, const DualGraph& graph) {
    return cochain_to_json(M.cochain(), graph, "level");
}

SymmetricFunction ghost_from_json(const Json& j, const DualGraph& graph) {
    Residue l = positive_modulus(j, "level", "ghost");
    return SymmetricFunction(l, edge_values(j, graph, "ghost"));
}

Json to_json(const SymmetricFunction& a, const DualGraph& graph) {
    Json j;
    j["level"] = a.level;
    j["values"] = values_object(a.values, graph);
    return j;
}

CurveAnnotations annotations_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("annotations: expected an object");
    CurveAnnotations notes;
    if (j.contains("eti")) {
        if (!j["eti"].is_boolean()) throw ParseError("annotations: \"eti\" must be a boolean");
        notes.eti = j["eti"].get<bool>();
    }
    if (j.contains("component_orders")) {
        const auto& orders = j["component_orders"];
        if (!orders.is_object()) throw ParseError("annotations: \"component_orders\" must be an object");
        for (const auto& [id, d] : orders.items()) {
            if (!d.is_number_integer())
                throw ParseError("annotations: component order of vertex \"" + id + "\" must be an integer");
            notes.component_orders[id] = d.get<Residue>();
        }
    }
    if (j.contains("order3_tails")) {
        const auto& tails = j["order3_tails"];
        if (!tails.is_array()) throw ParseError("annotations: \"order3_tails\" must be an array");
        for (const auto& id : tails) {
            if (!id.is_string()) throw ParseError("annotations: \"order3_tails\" entries must be vertex ids");
            notes.order3_tails.insert(id.get<std::string>());
        }
    }
    return notes;
}

Json to_json(const CurveAnnotations& notes) {
    Json j;
    j["eti"] = notes.eti;
    j["component_orders"] = Json::object();
    for (const auto& [id, d] : notes.component_orders) j["component_orders"][id] = d;
    j["order3_tails"] = Json::array();
    for (const auto& id : notes.order3_tails) j["order3_tails"].push_back(id);
    return j;
}

Json to_json(const AgeReport& report, const DualGraph& graph) {
    Json j;
    j["element"] = to_json(report.element, graph);
    j["order"] = element_order(report.element);
    j["age"] = to_string(report.age);
    j["verdict"] = to_string(report.verdict);
    return j;
}

Json to_json(const GhostGroup& group, const DualGraph& graph) {
    Json j;
    j["level"] = group.level;
    j["order"] = to_string(group.order);
    j["elementary_divisors"] = group.elementary_divisors();
    j["primes"] = Json::array();
    for (const auto& c : group.components) {
        Json pc;
        pc["prime"] = c.prime.prime;
        pc["exponent"] = c.prime.exponent;
        pc["vertex_counts"] = c.vertex_counts;
        pc["summands"] = c.alpha;
        j["primes"].push_back(std::move(pc));
    }
    j["generators"] = Json::array();
    for (const auto& g : group.generators) {
        Json gj;
        gj["order"] = g.order;
        gj["prime"] = g.prime;
        gj["stage"] = g.stage;
        gj["cut"] = g.cut_side;
        gj["element"] = to_json(g.element, graph);
        gj["age"] = to_string(age_of(g.element));
        j["generators"].push_back(std::move(gj));
    }
    return j;
}

Json to_json(const SingularityReport& report, const DualGraph& graph) {
    Json j;
    j["verdict"] = to_string(report.verdict);
    j["reasons"] = Json::array();
    for (const auto& r : report.reasons) {
        Json rj;
        rj["tag"] = to_string(r.tag);
        if (r.junior) rj["witness"] = to_json(*r.junior, graph);
        if (!r.vertex.empty()) rj["vertex"] = r.vertex;
        j["reasons"].push_back(std::move(rj));
    }
    j["junior_scan"] = to_string(report.junior_scan);
    if (report.junior_scan == ScanMethod::generators)
        j["caveat"] = "junior search scanned the subgroup spanned by the closed-form generators";
    return j;
}

Json to_json(const SweepReport& report) {
    Json j;
    j["level"] = report.level;
    j["max_edges"] = report.max_edges;
    j["max_vertices"] = report.max_vertices;
    j["instances"] = Json::array();
    for (const auto& inst : report.reported) {
        auto graph = DualGraph::from_spec(inst.graph);
        Json ij;
        ij["graph"] = to_json(inst.graph);
        ij["M"] = cochain_to_json(inst.multiplicity, graph, "level");
        if (inst.witness) {
            ij["witness"] = to_json(inst.witness->element, graph);
            ij["age"] = to_string(inst.witness->age);
        }
        if (!inst.skipped.empty()) ij["skipped"] = inst.skipped;
        j["instances"].push_back(std::move(ij));
    }
    Json summary;
    summary["graphs"] = report.graphs;
    summary["instances"] = report.instances;
    summary["witnesses"] = report.witnesses;
    summary["skipped"] = report.skipped;
    summary["max_age_below_1"] = report.max_age_below_1 ? Json(to_string(*report.max_age_below_1)) : Json(nullptr);
    j["summary"] = std::move(summary);
    return j;
}

std::string values_string(const std::vector<Residue>& values) {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
    return s + ")";
}

Json to_json(const FiberAudit& audit, const DualGraph& graph) {
    Json j;
    j["level"] = audit.level;
    j["genus"] = audit.genus;
    j["multiplicities"] = audit.multiplicities;
    j["rows"] = Json::object();
    for (const auto& row : audit.rows) {
        Json rj;
        rj["M"] = cochain_to_json(row.multiplicity, graph, "level");
        rj["components"] = to_string(row.components);
        rj["length"] = to_string(row.length);
        j["rows"][values_string(row.multiplicity.values)] = std::move(rj);
    }
    j["total"] = to_string(audit.total);
    j["expected"] = to_string(audit.expected);
    return j;
}

Json to_json(const BoundaryDegrees& table) {
    Json j;
    j["genus"] = table.genus;
    j["level"] = table.level;
    j["index"] = table.index;
    auto entries = [](const std::vector<DegreeEntry>& list) {
        Json arr = Json::array();
        for (const auto& d : list)
            arr.push_back({{"name", d.name}, {"degree", to_string(d.degree)}, {"weight", d.weight}});
        return arr;
    };
    j["reducible"] = entries(table.reducible);
    j["reducible_sum"] = to_string(table.reducible_sum);
    if (table.irreducible_sum) {
        j["irreducible"] = entries(table.irreducible);
        j["irreducible_weighted_sum"] = to_string(*table.irreducible_sum);
    }
    j["forgetful_degree"] = to_string(table.forgetful);
    j["consistent"] = table.consistent;
    return j;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string tower_dot(const DualGraph& graph, const MultiplicityCochain& M) {
    std::ostringstream out;
    out << "digraph towers {\n  compound=true;\n  node [shape=circle];\n";
    const auto profile = valuation(M);
    for (const auto& tower : contraction_towers(graph, M)) {
        const auto& nu = profile.for_prime(tower.prime.prime).per_edge;
        const Residue p = tower.prime.prime;
        auto emit_stage = [&](const std::string& name, const std::string& label, const DualGraph& g,
                              const std::vector<int>& edge_map) {
            out << "  subgraph " << quote("cluster_" + name) << " {\n    label=" << quote(label) << ";\n";
            for (int v = 0; v < g.vertex_count(); ++v)
                out << "    " << quote(name + ":" + g.vertex(v).id) << " [label=" << quote(g.vertex(v).id) << "];\n";
            for (int e = 0; e < g.edge_count(); ++e) {
                int src = edge_map.empty() ? e : edge_map[e];
                out << "    " << quote(name + ":" + g.vertex(g.edge(e).tail).id) << " -> "
                    << quote(name + ":" + g.vertex(g.edge(e).head).id) << " [label="
                    << quote(graph.edge(src).id + " (" + std::to_string(M[src]) + "," + nu[src].to_string() + ")")
                    << "];\n";
            }
            out << "  }\n";
        };
        const std::string prefix = "p" + std::to_string(p);
        emit_stage(prefix + "_source", "p = " + std::to_string(p) + ": dual graph", graph, {});
        for (int k = static_cast<int>(tower.stages.size()) - 1; k >= 0; --k) {
            const auto& st = tower.stages[k];
            emit_stage(prefix + "_k" + std::to_string(k),
                       "p = " + std::to_string(p) + ", k = " + std::to_string(k) + ": contract nu >= " +
                           std::to_string(k),
                       st.quotient, st.edge_map);
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace ghostlab
