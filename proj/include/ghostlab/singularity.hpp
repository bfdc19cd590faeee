#pragma once

#include "ghostlab/age.hpp"

#include <map>
#include <optional>
#include <set>

namespace ghostlab {

/// Geometric input that the dual graph and multiplicity cannot determine.
struct CurveAnnotations {
    /// Aut′(C) of the coarse curve is spanned by elliptic tail involutions.
    bool eti = true;
    /// Order d_v of the line bundle restricted to each component (vertex id -> d_v).
    std::map<std::string, Residue> component_orders;
    /// Genus-1 tails admitting an order-3 automorphism.
    std::set<std::string> order3_tails;
};

/// Throws Error if some d_v does not divide ℓ, names an unknown vertex, or a
/// flagged tail is not an elliptic tail.
void check_annotations(const DualGraph& graph, Residue level, const CurveAnnotations& notes);

/// Genus 1, no loops, exactly one edge.
bool is_elliptic_tail(const DualGraph& graph, int v);

enum class PointVerdict { smooth, canonical_singular, noncanonical };

std::string to_string(PointVerdict v);

enum class ReasonTag { has_nontrivial_ghosts, non_eti_coarse_aut, j_curve, t_curve };

std::string to_string(ReasonTag t);

struct Reason {
    ReasonTag tag;
    std::optional<AgeReport> junior;  // j_curve
    std::string vertex;               // t_curve
};

struct SingularityReport {
    PointVerdict verdict = PointVerdict::smooth;
    std::vector<Reason> reasons;
    ScanMethod junior_scan = ScanMethod::oracle;

    bool has(ReasonTag tag) const;
};

/// Some Γ(ν_p^{e_p}) is not a bouquet.
bool has_nontrivial_ghosts(const DualGraph& graph, const MultiplicityCochain& M);

bool is_smooth_point(const DualGraph& graph, const MultiplicityCochain& M, const CurveAnnotations& notes);

/// An elliptic tail v with d_v = 1 flagged as admitting an order-3
/// automorphism. Throws Error("annotation required for vertex v") when a
/// flagged tail has no d_v.
std::optional<std::string> detect_t_curve(const DualGraph& graph, const MultiplicityCochain& M,
                                          const CurveAnnotations& notes);

SingularityReport classify_point(const DualGraph& graph, const MultiplicityCochain& M, const CurveAnnotations& notes,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace ghostlab
