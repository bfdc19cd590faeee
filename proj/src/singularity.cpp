#include "ghostlab/singularity.hpp"

#include <algorithm>

namespace ghostlab {

std::string to_string(PointVerdict v) {
    switch (v) {
        case PointVerdict::smooth: return "smooth";
        case PointVerdict::canonical_singular: return "canonical_singular";
        case PointVerdict::noncanonical: return "noncanonical";
    }
    return "?";
}

std::string to_string(ReasonTag t) {
    switch (t) {
        case ReasonTag::has_nontrivial_ghosts: return "has_nontrivial_ghosts";
        case ReasonTag::non_eti_coarse_aut: return "non_ETI_coarse_aut";
        case ReasonTag::j_curve: return "J_curve";
        case ReasonTag::t_curve: return "T_curve";
    }
    return "?";
}

bool SingularityReport::has(ReasonTag tag) const {
    return std::any_of(reasons.begin(), reasons.end(), [&](const Reason& r) { return r.tag == tag; });
}

bool is_elliptic_tail(const DualGraph& graph, int v) {
    if (graph.vertex(v).genus != 1) return false;
    const auto& inc = graph.incident_edges(v);
    return inc.size() == 1 && !graph.is_loop(inc.front());
}

void check_annotations(const DualGraph& graph, Residue level, const CurveAnnotations& notes) {
    for (const auto& [id, d] : notes.component_orders) {
        graph.vertex_index(id);
        if (d < 1 || level % d != 0)
            throw Error("component order " + std::to_string(d) + " of vertex " + id + " does not divide level " +
                        std::to_string(level));
    }
    for (const auto& id : notes.order3_tails)
        if (!is_elliptic_tail(graph, graph.vertex_index(id)))
            throw Error("vertex " + id + " is flagged as an order-3 tail but is not a genus-1 tail");
}

bool has_nontrivial_ghosts(const DualGraph& graph, const MultiplicityCochain& M) {
    for (const auto& pp : factorize(M.level())) {
        auto top = contract(graph, filtration_subgraph(M, pp.prime, pp.exponent));
        if (!is_bouquet(top.quotient)) return true;
    }
    return false;
}

bool is_smooth_point(const DualGraph& graph, const MultiplicityCochain& M, const CurveAnnotations& notes) {
    check_annotations(graph, M.level(), notes);
    return notes.eti && !has_nontrivial_ghosts(graph, M);
}

std::optional<std::string> detect_t_curve(const DualGraph& graph, const MultiplicityCochain& M,
                                          const CurveAnnotations& notes) {
    check_annotations(graph, M.level(), notes);
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const auto& id = graph.vertex(v).id;
        if (!notes.order3_tails.count(id)) continue;
        auto it = notes.component_orders.find(id);
        if (it == notes.component_orders.end()) throw Error("annotation required for vertex " + id);
        if (it->second == 1) return id;
    }
    return std::nullopt;
}

SingularityReport classify_point(const DualGraph& graph, const MultiplicityCochain& M, const CurveAnnotations& notes,
                                 std::uint64_t budget) {
    check_annotations(graph, M.level(), notes);
    SingularityReport report;
    if (has_nontrivial_ghosts(graph, M)) report.reasons.push_back({ReasonTag::has_nontrivial_ghosts, {}, {}});
    if (!notes.eti) report.reasons.push_back({ReasonTag::non_eti_coarse_aut, {}, {}});
    auto junior = find_junior_ghost(graph, M, budget);
    report.junior_scan = junior.method;
    if (junior.witness) report.reasons.push_back({ReasonTag::j_curve, junior.witness, {}});
    if (auto tail = detect_t_curve(graph, M, notes)) report.reasons.push_back({ReasonTag::t_curve, {}, *tail});

    if (report.has(ReasonTag::j_curve) || report.has(ReasonTag::t_curve))
        report.verdict = PointVerdict::noncanonical;
    else if (report.reasons.empty())
        report.verdict = PointVerdict::smooth;
    else
        report.verdict = PointVerdict::canonical_singular;
    return report;
}

}  // namespace ghostlab
