#include "ghostlab/level.hpp"

#include <numeric>

namespace ghostlab {

MultiplicityCochain::MultiplicityCochain(const DualGraph& graph, Cochain1 values) : values_(std::move(values)) {
    if (static_cast<int>(values_.values.size()) != graph.edge_count())
        throw CochainError("multiplicity has " + std::to_string(values_.values.size()) + " values for " +
                           std::to_string(graph.edge_count()) + " edges");
    auto d = partial(graph, values_);
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (d.values[v] != 0)
            throw CochainError("multiplicity not in ker ∂: sum at vertex " + graph.vertex(v).id + " is " +
                               std::to_string(d.values[v]) + " mod " + std::to_string(values_.modulus));
}

MultiplicityCochain MultiplicityCochain::zero(const DualGraph& graph, Residue level) {
    return MultiplicityCochain(graph, Cochain1::zero(graph, level));
}

Residue stabiliser_step(Residue level, Residue value) { return std::gcd(mod(value, level), level); }

LocalIndices local_indices(Residue level, Residue value) {
    value = mod(value, level);
    if (value == 0) return {1, 0};
    Residue g = std::gcd(value, level);
    Residue r = level / g;
    return {r, mod(value / g, r)};
}

LocalIndices local_indices(const MultiplicityCochain& M, OrientedEdge e) { return local_indices(M.level(), M.at(e)); }

Valuation truncated_valuation(Residue x, const PrimePower& pp) {
    x = mod(x, pp.power);
    if (x == 0) return Valuation::infinity();
    return Valuation(valuation_of(x, pp.prime));
}

const PrimeValuations& ValuationProfile::for_prime(Residue p) const& {
    for (const auto& pv : primes)
        if (pv.prime.prime == p) return pv;
    throw CochainError(std::to_string(p) + " does not divide the level");
}

ValuationProfile valuation(const MultiplicityCochain& M) {
    ValuationProfile out;
    for (const auto& pp : factorize(M.level())) {
        PrimeValuations pv{pp, {}};
        for (int e = 0; e < M.edge_count(); ++e) pv.per_edge.push_back(truncated_valuation(M[e], pp));
        out.primes.push_back(std::move(pv));
    }
    return out;
}

namespace {

PrimePower prime_power_of(Residue level, Residue p) {
    for (const auto& pp : factorize(level))
        if (pp.prime == p) return pp;
    throw CochainError(std::to_string(p) + " does not divide the level " + std::to_string(level));
}

std::vector<int> filtration(const MultiplicityCochain& M, const PrimePower& pp, int k) {
    std::vector<int> out;
    for (int e = 0; e < M.edge_count(); ++e)
        if (truncated_valuation(M[e], pp) >= Valuation(k)) out.push_back(e);
    return out;
}

}  // namespace

std::vector<int> filtration_subgraph(const MultiplicityCochain& M, Residue p, int k) {
    auto pp = prime_power_of(M.level(), p);
    if (k < 0 || k > pp.exponent)
        throw CochainError("filtration index " + std::to_string(k) + " outside 0.." + std::to_string(pp.exponent));
    return filtration(M, pp, k);
}

int ContractionTower::vertex_sum() const {
    int s = 0;
    for (std::size_t k = 1; k < stages.size(); ++k) s += stages[k].quotient.vertex_count();
    return s;
}

ContractionTower contraction_tower(const DualGraph& graph, const MultiplicityCochain& M, Residue p) {
    auto pp = prime_power_of(M.level(), p);
    ContractionTower tower{pp, {}};
    for (int k = 0; k <= pp.exponent; ++k) tower.stages.push_back(contract(graph, filtration(M, pp, k)));
    return tower;
}

std::vector<ContractionTower> contraction_towers(const DualGraph& graph, const MultiplicityCochain& M) {
    std::vector<ContractionTower> out;
    for (const auto& pp : factorize(M.level())) out.push_back(contraction_tower(graph, M, pp.prime));
    return out;
}

void for_each_multiplicity(const DualGraph& graph, Residue level,
                           const std::function<void(const MultiplicityCochain&)>& fn) {
    KernelEnumerator it(graph, level);
    Cochain1 b;
    while (it.next(b)) fn(MultiplicityCochain(graph, b));
}

std::vector<MultiplicityCochain> enumerate_multiplicities(const DualGraph& graph, Residue level) {
    std::vector<MultiplicityCochain> out;
    for_each_multiplicity(graph, level, [&](const MultiplicityCochain& M) { out.push_back(M); });
    return out;
}

}  // namespace ghostlab
