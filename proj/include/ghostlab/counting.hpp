#pragma once

#include "ghostlab/level.hpp"
#include "ghostlab/rational.hpp"

#include <optional>

namespace ghostlab {

/// ℓ^n ∏_{p|ℓ} (1 - p^{-n}).
BigInt phi(int n, Residue level);

/// Φ_{2g}(ℓ)/ℓ, reduced. Throws Error for g < 2 or ℓ < 1.
Rational forgetful_degree(int genus, Residue level);

/// ∏_{p,k} p^{b1(Γ(ν_p^k))} over the contraction towers.
BigInt component_length(const DualGraph& graph, const MultiplicityCochain& M);
/// (∏_e r(e)) / #ghost group.
BigInt component_length_from_ghosts(const DualGraph& graph, const MultiplicityCochain& M);

struct FiberRow {
    Cochain1 multiplicity;
    BigInt components;  // ℓ^{2 p_g} ∏_{p,k} p^{b1(Δ(ν_p^k))}
    BigInt length;      // per component
    BigInt contribution() const { return components * length; }
};

struct FiberAudit {
    Residue level = 1;
    int genus = 0;
    std::uint64_t multiplicities = 0;
    std::vector<FiberRow> rows;  // empty in streaming mode
    BigInt total = 0;
    BigInt expected = 0;  // ℓ^{2g}
};

enum class FiberMode { rows, streaming };

/// Sums component count × length over every M ∈ ker ∂. Throws
/// std::logic_error naming the offending M if a row or the total breaks
/// the identity total = ℓ^{2g}.
FiberAudit fiber_audit(const DualGraph& graph, Residue level, FiberMode mode = FiberMode::rows);

struct DegreeEntry {
    std::string name;
    Rational degree;
    int weight = 1;
};

struct BoundaryDegrees {
    int genus = 0;
    Residue level = 1;
    int index = 1;
    std::vector<DegreeEntry> reducible;
    Rational reducible_sum;
    std::vector<DegreeEntry> irreducible;  // ℓ = 3 only
    std::optional<Rational> irreducible_sum;
    Rational forgetful;
    bool consistent = false;
};

/// Degrees over the boundary divisors of a prime level. Throws Error if ℓ
/// is not prime, g < 2 or i is outside 1..⌊g/2⌋.
BoundaryDegrees boundary_degrees_prime(int genus, Residue level, int index);

}  // namespace ghostlab
