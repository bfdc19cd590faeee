#pragma once

#include "ghostlab/ghosts.hpp"

#include <optional>

namespace ghostlab {

enum class AgeVerdict { trivial, junior, senior };

std::string to_string(AgeVerdict v);

struct AgeReport {
    SymmetricFunction element;
    Rational age;
    AgeVerdict verdict = AgeVerdict::trivial;
};

/// Σ_e ⟨ã(e)/ℓ⟩ over unoriented edges, exact.
Rational age_of(const SymmetricFunction& a);

/// junior iff 0 < age < 1; trivial iff a = 0.
AgeReport classify(const SymmetricFunction& a);

enum class ScanMethod { oracle, generators };

std::string to_string(ScanMethod m);

struct JuniorSearch {
    std::optional<AgeReport> witness;  // lexicographically least junior ghost
    ScanMethod method = ScanMethod::oracle;
    std::uint64_t scanned = 0;         // ghosts examined
};

/// Exhaustive brute-force scan when ∏ r(e) fits the budget, otherwise a scan
/// of the group spanned by the closed-form generators. Throws BudgetExceeded
/// when neither fits.
JuniorSearch find_junior_ghost(const DualGraph& graph, const MultiplicityCochain& M,
                               std::uint64_t budget = kDefaultBudget);

struct SweepInstance {
    GraphSpec graph;
    Cochain1 multiplicity;
    std::optional<AgeReport> witness;
    std::string skipped;  // budget message when the instance was not scanned
};

struct SweepReport {
    Residue level = 1;
    int max_edges = 0;
    int max_vertices = 0;
    std::uint64_t graphs = 0;
    std::uint64_t instances = 0;
    std::uint64_t witnesses = 0;
    std::uint64_t skipped = 0;
    std::optional<Rational> max_age_below_1;
    /// Instances with a junior witness or skipped for budget, in enumeration order.
    std::vector<SweepInstance> reported;
};

/// Scans every connected multigraph (loops allowed) up to the bounds and every
/// multiplicity on it for junior ghosts. `threads == 0` picks the hardware count.
SweepReport junior_sweep(Residue level, int max_edges, int max_vertices, std::uint64_t budget = kDefaultBudget,
                         unsigned threads = 0);

}  // namespace ghostlab
