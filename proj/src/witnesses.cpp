#include "ghostlab/witnesses.hpp"

#include <stdexcept>
#include <tuple>

namespace ghostlab {
namespace {

struct EdgeRow {
    std::string id, tail, head;
    Residue m;
};

LevelCurveData make(Residue level, const std::vector<std::string>& vertex_ids, const std::vector<EdgeRow>& rows) {
    GraphSpec spec;
    for (const auto& v : vertex_ids) spec.vertices.push_back({v, 0});
    std::vector<Residue> values;
    for (const auto& r : rows) {
        spec.edges.push_back({r.id, r.tail, r.head});
        values.push_back(r.m);
    }
    auto graph = DualGraph::from_spec(spec);
    MultiplicityCochain M(graph, Cochain1(level, values));
    return {std::move(graph), std::move(M)};
}

JuniorWitness with_ghost(LevelCurveData data, std::vector<Residue> ghost, std::string construction) {
    SymmetricFunction a(data.multiplicity.level(), std::move(ghost));
    auto age = age_of(a);
    return {std::move(data.graph), std::move(data.multiplicity), std::move(a), age, std::move(construction)};
}

}  // namespace

namespace instances {

LevelCurveData tower_level8() {
    return make(8, {"a", "b", "c", "d", "t"},
                {{"e1", "a", "b", 0},
                 {"e2", "a", "b", 0},
                 {"e3", "b", "d", 1},
                 {"e4", "c", "b", 6},
                 {"e5", "c", "b", 4},
                 {"e6", "b", "t", 1},
                 {"e7", "t", "d", 1},
                 {"e8", "d", "c", 2}});
}

std::vector<SymmetricFunction> tower_level8_generators() {
    return {SymmetricFunction(8, {0, 0, 0, 4, 4, 0, 0, 4}),
            SymmetricFunction(8, {0, 0, 2, 0, 0, 2, 0, 6}),
            SymmetricFunction(8, {0, 0, 0, 0, 0, 1, 7, 0})};
}

JuniorWitness odd_path_junior(Residue q) {
    if (q < 5 || q % 2 == 0) throw std::invalid_argument("odd_path_junior needs an odd level >= 5");
    const int k = static_cast<int>((q - 1) / 2);  // path length
    std::vector<std::string> vertices{"x"};
    for (int i = 1; i < k; ++i) vertices.push_back("y" + std::to_string(i));
    vertices.push_back("z");
    auto path_vertex = [&](int i) { return i == 0 ? std::string("x") : (i == k ? std::string("z") : "y" + std::to_string(i)); };

    std::vector<EdgeRow> rows{{"e1", path_vertex(1), "x", 2}, {"e2", "x", "z", 1}, {"e3", "x", "z", 1}};
    for (int i = 2; i <= k; ++i) rows.push_back({"e" + std::to_string(i + 2), path_vertex(i), path_vertex(i - 1), 2});
    auto data = make(q, vertices, rows);
    std::vector<Residue> ghost(rows.size(), 1);
    return with_ghost(std::move(data), std::move(ghost),
                      "double edge with M = 1 closed by a path of " + std::to_string(k) + " edges with M = 2, constant ghost");
}

JuniorWitness junior_level8() {
    auto data = make(8, {"t", "p", "q"},
                     {{"e1", "p", "t", 5}, {"e2", "t", "q", 1}, {"e3", "t", "q", 1}, {"e4", "t", "p", 3}, {"e5", "q", "p", 2}});
    return with_ghost(std::move(data), {1, 1, 1, 1, 2}, "level-8 junior instance");
}

JuniorWitness junior_level12() {
    auto data = make(12, {"t", "p", "q", "r"},
                     {{"e1", "p", "t", 7},
                      {"e2", "t", "r", 1},
                      {"e3", "t", "r", 1},
                      {"e4", "t", "p", 5},
                      {"e5", "q", "p", 2},
                      {"e6", "r", "q", 2}});
    return with_ghost(std::move(data), {1, 1, 1, 1, 2, 2}, "level-12 junior instance");
}

LevelCurveData vine_level3() {
    return make(3, {"v1", "v2"}, {{"e1", "v1", "v2", 1}, {"e2", "v1", "v2", 1}, {"e3", "v1", "v2", 1}});
}

LevelCurveData triangle_level3() {
    return make(3, {"v1", "v2", "v3"}, {{"e1", "v1", "v2", 1}, {"e2", "v2", "v3", 1}, {"e3", "v3", "v1", 1}});
}

LevelCurveData banana_level3() { return make(3, {"v1", "v2"}, {{"e1", "v1", "v2", 1}, {"e2", "v1", "v2", 2}}); }

LevelCurveData parallel_level6() {
    return make(6, {"v1", "v2"}, {{"e1", "v1", "v2", 1}, {"e2", "v1", "v2", 2}, {"e3", "v1", "v2", 3}});
}

}  // namespace instances

JuniorWitness scale(const JuniorWitness& w, Residue factor) {
    const Residue level = w.multiplicity.level() * factor;
    std::vector<Residue> m, a;
    for (auto x : w.multiplicity.cochain().values) m.push_back(x * factor);
    for (auto x : w.ghost.values) a.push_back(x * factor);
    MultiplicityCochain M(w.graph, Cochain1(level, m));
    SymmetricFunction ghost(level, a);
    auto age = age_of(ghost);
    std::string construction = factor == 1 ? w.construction : w.construction + ", scaled by " + std::to_string(factor);
    return {w.graph, std::move(M), std::move(ghost), age, std::move(construction)};
}

DualGraph stabilize_genera(const DualGraph& graph, int min_genus) {
    auto vertices = graph.vertices();
    for (int v = 0; v < graph.vertex_count(); ++v) {
        int val = graph.valence(v);
        if (vertices[v].genus == 0 && val < 3) vertices[v].genus = val >= 1 ? 1 : 2;
        if (vertices[v].genus == 1 && val < 1) vertices[v].genus = 2;
    }
    DualGraph out(vertices, graph.edges());
    int deficit = min_genus - total_genus(out);
    if (deficit > 0) {
        vertices[0].genus += deficit;
        out = DualGraph(vertices, graph.edges());
    }
    return out;
}

std::optional<JuniorWitness> junior_witness(Residue level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    if (level <= 4 || level == 6) return std::nullopt;

    JuniorWitness w = [&] {
        if (level % 5 == 0) return scale(instances::odd_path_junior(5), level / 5);
        if (level % 8 == 0) return scale(instances::junior_level8(), level / 8);
        if (level % 12 == 0) return scale(instances::junior_level12(), level / 12);
        for (Residue q = 7; q <= level; q += 2)
            if (level % q == 0) return scale(instances::odd_path_junior(q), level / q);
        throw std::logic_error("no junior construction for level " + std::to_string(level));
    }();

    DualGraph stable = stabilize_genera(w.graph);
    MultiplicityCochain M(stable, w.multiplicity.cochain());
    JuniorWitness out{std::move(stable), std::move(M), w.ghost, w.age, w.construction};
    if (!is_ghost(out.graph, out.ghost, out.multiplicity) || classify(out.ghost).verdict != AgeVerdict::junior ||
        !validate(out.graph, true, 4))
        throw std::logic_error("constructed witness for level " + std::to_string(level) + " failed validation");
    return out;
}

}  // namespace ghostlab
