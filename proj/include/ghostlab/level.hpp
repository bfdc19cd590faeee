#pragma once

#include "ghostlab/cochain.hpp"

#include <compare>
#include <optional>

namespace ghostlab {

/// Multiplicity cochain of a level-ℓ curve: a Z/ℓ-valued 1-cochain in ker ∂.
class MultiplicityCochain {
public:
    /// Throws CochainError if `values` is not in ker ∂.
    MultiplicityCochain(const DualGraph& graph, Cochain1 values);

    static MultiplicityCochain zero(const DualGraph& graph, Residue level);

    Residue level() const { return values_.modulus; }
    const Cochain1& cochain() const { return values_; }
    Residue at(OrientedEdge e) const { return values_.at(e); }
    Residue operator[](int edge) const { return values_.values[edge]; }
    int edge_count() const { return static_cast<int>(values_.values.size()); }

    friend bool operator==(const MultiplicityCochain&, const MultiplicityCochain&) = default;

private:
    Cochain1 values_;
};

/// Stabiliser order r = ℓ / gcd(M, ℓ) and faithful character m = M / gcd(M, ℓ) mod r.
struct LocalIndices {
    Residue r = 1;
    Residue m = 0;
    friend bool operator==(const LocalIndices&, const LocalIndices&) = default;
};

LocalIndices local_indices(Residue level, Residue value);
LocalIndices local_indices(const MultiplicityCochain& M, OrientedEdge e);

/// gcd(M(e), ℓ) = ℓ / r(e); the step of the order-r(e) subgroup of Z/ℓ.
Residue stabiliser_step(Residue level, Residue value);

/// Truncated valuation: an integer or ∞, with ∞ above every integer.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(int v) : value_(v) {}
    static constexpr Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr int value() const { return value_; }

    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
    friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    int value_ = 0;
    bool infinite_ = false;
};

/// val_(p) of x mod p^e inside Z/p^e.
Valuation truncated_valuation(Residue x, const PrimePower& pp);

struct PrimeValuations {
    PrimePower prime;
    std::vector<Valuation> per_edge;
};

struct ValuationProfile {
    std::vector<PrimeValuations> primes;  // ascending primes dividing ℓ

    const PrimeValuations& for_prime(Residue p) const&;
    const PrimeValuations& for_prime(Residue p) const&& = delete;
};

ValuationProfile valuation(const MultiplicityCochain& M);

/// Edges with ν_p(e) >= k, ascending. Throws CochainError if p ∤ ℓ or k is out of range.
std::vector<int> filtration_subgraph(const MultiplicityCochain& M, Residue p, int k);

/// stages[k] contracts the filtration subgraph for k = 0..e_p; stage 0 is a point.
struct ContractionTower {
    PrimePower prime;
    std::vector<Contraction> stages;

    int vertex_count(int k) const { return stages.at(k).quotient.vertex_count(); }
    /// Σ_{k=1}^{e_p} #V(ν_p^k).
    int vertex_sum() const;
    const Contraction& top() const { return stages.back(); }
};

ContractionTower contraction_tower(const DualGraph& graph, const MultiplicityCochain& M, Residue p);
std::vector<ContractionTower> contraction_towers(const DualGraph& graph, const MultiplicityCochain& M);

/// All ℓ^{b1} multiplicity cochains on the graph.
void for_each_multiplicity(const DualGraph& graph, Residue level,
                           const std::function<void(const MultiplicityCochain&)>& fn);
std::vector<MultiplicityCochain> enumerate_multiplicities(const DualGraph& graph, Residue level);

}  // namespace ghostlab
