#pragma once

#include "ghostlab/level.hpp"
#include "ghostlab/rational.hpp"

#include <cstdint>
#include <functional>

namespace ghostlab {

/// Symmetric edge function a with values in Z/ℓ, stored as exponents of a
/// fixed primitive ℓ-th root of unity. Membership in S_ν means a(e) is a
/// multiple of gcd(M(e), ℓ) = ℓ/r(e) for every edge.
struct SymmetricFunction {
    Residue level = 1;
    std::vector<Residue> values;

    SymmetricFunction() = default;
    SymmetricFunction(Residue l, std::vector<Residue> vals);

    bool is_zero() const;
    int support_size() const;
    SymmetricFunction operator+(const SymmetricFunction& other) const;
    SymmetricFunction scaled(Residue k) const;

    friend bool operator==(const SymmetricFunction&, const SymmetricFunction&) = default;
    friend auto operator<=>(const SymmetricFunction& a, const SymmetricFunction& b) { return a.values <=> b.values; }
};

/// Additive order of a in (Z/ℓ)^E.
Residue element_order(const SymmetricFunction& a);

bool in_symmetric_group(const SymmetricFunction& a, const MultiplicityCochain& M);

/// b(e) = m(e)·a(e) inside the order-r(e) subgroup; throws CochainError if a ∉ S_ν.
Cochain1 sym_to_cochain(const SymmetricFunction& a, const MultiplicityCochain& M);

/// a(e) = [m(e)^{-1}]_{r(e)}·b(e), zero where M(e) = 0; throws CochainError
/// ("b outside C¹_ν") if some b(e) leaves the order-r(e) subgroup.
SymmetricFunction cochain_to_sym(const Cochain1& b, const MultiplicityCochain& M);

bool is_ghost(const DualGraph& graph, const SymmetricFunction& a, const MultiplicityCochain& M);

struct GhostGenerator {
    SymmetricFunction element;
    Residue order = 1;
    Residue prime = 1;
    int stage = 0;                     // k: the cut lives on Γ(ν_p^k)
    std::vector<std::string> cut_side; // source vertex ids of the blown-up single-vertex cut
};

struct PrimeComponent {
    PrimePower prime;
    /// alpha[k-1] = number of Z/p^k summands, k = 1..e_p.
    std::vector<int> alpha;
    std::vector<int> vertex_counts;  // #V(ν_p^k), k = 0..e_p
};

struct GhostGroup {
    Residue level = 1;
    int edge_count = 0;
    std::vector<PrimeComponent> components;
    BigInt order = 1;
    std::vector<GhostGenerator> generators;

    /// Orders of the cyclic summands, ascending (e.g. {2, 4, 8}).
    std::vector<Residue> elementary_divisors() const;
    bool trivial() const { return order == 1; }
};

/// Closed-form structure from the contraction towers, with an explicit
/// generating set whose orders realise the elementary divisors.
GhostGroup ghost_group(const DualGraph& graph, const MultiplicityCochain& M);

/// Number of candidates ∏_e r(e) the brute-force scan visits (saturates at UINT64_MAX).
std::uint64_t candidate_count(const MultiplicityCochain& M);

/// Brute-force oracle: visits every a ∈ S_ν with aM ∈ im δ, in lexicographic
/// order of the value vector. The callback returns false to stop early.
/// Throws BudgetExceeded when ∏_e r(e) > budget.
void for_each_ghost(const DualGraph& graph, const MultiplicityCochain& M, std::uint64_t budget,
                    const std::function<bool(const SymmetricFunction&)>& fn);

std::vector<SymmetricFunction> enumerate_ghosts(const DualGraph& graph, const MultiplicityCochain& M,
                                                std::uint64_t budget = kDefaultBudget);

/// Visits every element of the subgroup spanned by the generators.
/// Throws BudgetExceeded when the group order exceeds the budget.
void for_each_group_element(const GhostGroup& group, std::uint64_t budget,
                            const std::function<bool(const SymmetricFunction&)>& fn);

}  // namespace ghostlab
