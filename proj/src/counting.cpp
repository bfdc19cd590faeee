#include "ghostlab/counting.hpp"

#include "ghostlab/ghosts.hpp"

#include <stdexcept>

namespace ghostlab {

BigInt phi(int n, Residue level) {
    if (level < 1 || n < 0) throw Error("phi: need n >= 0 and level >= 1");
    BigInt out = big_pow(level, static_cast<unsigned>(n));
    for (const auto& pp : factorize(level)) {
        BigInt pn = big_pow(pp.prime, static_cast<unsigned>(n));
        out = out / pn * (pn - 1);
    }
    return out;
}

Rational forgetful_degree(int genus, Residue level) {
    if (genus < 2) throw Error("forgetful degree: genus must be at least 2");
    if (level < 1) throw Error("forgetful degree: level must be positive");
    return Rational(phi(2 * genus, level), BigInt(level));
}

namespace {

struct RowFactors {
    BigInt delta_part = 1;  // ∏ p^{b1(Δ)}
    BigInt gamma_part = 1;  // ∏ p^{b1(Γ)}
};

RowFactors row_factors(const DualGraph& graph, const MultiplicityCochain& M) {
    RowFactors f;
    for (const auto& pp : factorize(M.level())) {
        for (int k = 1; k <= pp.exponent; ++k) {
            auto edges = filtration_subgraph(M, pp.prime, k);
            auto quotient = contract(graph, edges).quotient;
            f.delta_part *= big_pow(pp.prime, static_cast<unsigned>(subgraph_betti1(graph, edges)));
            f.gamma_part *= big_pow(pp.prime, static_cast<unsigned>(betti1(quotient)));
        }
    }
    return f;
}

std::string describe(const Cochain1& M) {
    std::string s = "(";
    for (std::size_t i = 0; i < M.values.size(); ++i) s += (i ? "," : "") + std::to_string(M.values[i]);
    return s + ") mod " + std::to_string(M.modulus);
}

}  // namespace

BigInt component_length(const DualGraph& graph, const MultiplicityCochain& M) {
    return row_factors(graph, M).gamma_part;
}

BigInt component_length_from_ghosts(const DualGraph& graph, const MultiplicityCochain& M) {
    BigInt stabilisers = 1;
    for (int e = 0; e < M.edge_count(); ++e) stabilisers *= local_indices(M.level(), M[e]).r;
    auto group = ghost_group(graph, M);
    if (stabilisers % group.order != 0) throw std::logic_error("ghost group order does not divide the stabiliser order");
    return stabilisers / group.order;
}

FiberAudit fiber_audit(const DualGraph& graph, Residue level, FiberMode mode) {
    if (level < 1) throw Error("fiber audit: level must be positive");
    FiberAudit audit;
    audit.level = level;
    audit.genus = total_genus(graph);
    audit.expected = big_pow(level, static_cast<unsigned>(2 * audit.genus));
    const BigInt base = big_pow(level, static_cast<unsigned>(2 * vertex_genus_sum(graph)));
    const BigInt per_row = base * big_pow(level, static_cast<unsigned>(betti1(graph)));

    KernelEnumerator kernel(graph, level);
    Cochain1 values;
    while (kernel.next(values)) {
        MultiplicityCochain M(graph, values);
        auto f = row_factors(graph, M);
        FiberRow row{values, base * f.delta_part, f.gamma_part};
        if (row.contribution() != per_row)
            throw std::logic_error("fiber audit: row for M = " + describe(values) + " contributes " +
                                   to_string(row.contribution()) + ", expected " + to_string(per_row));
        audit.total += row.contribution();
        ++audit.multiplicities;
        if (mode == FiberMode::rows) audit.rows.push_back(std::move(row));
    }
    if (audit.total != audit.expected)
        throw std::logic_error("fiber audit: total " + to_string(audit.total) + " differs from " +
                               to_string(audit.expected));
    return audit;
}

BoundaryDegrees boundary_degrees_prime(int genus, Residue level, int index) {
    if (!is_prime(level)) throw Error("boundary degrees: level " + std::to_string(level) + " is not prime");
    if (genus < 2) throw Error("boundary degrees: genus must be at least 2");
    if (index < 1 || index > genus / 2)
        throw Error("boundary degrees: index must lie in 1.." + std::to_string(genus / 2));

    BoundaryDegrees t;
    t.genus = genus;
    t.level = level;
    t.index = index;
    const BigInt l(level);
    const BigInt small = big_pow(l, 2 * index) - 1;
    const BigInt large = big_pow(l, 2 * (genus - index)) - 1;
    t.reducible = {{"trivial_on_genus_g_minus_i_side", Rational(small, l), 1},
                   {"trivial_on_genus_i_side", Rational(large, l), 1},
                   {"nontrivial_on_both_sides", Rational(small * large, l), 1}};
    for (const auto& d : t.reducible) t.reducible_sum += d.degree * d.weight;
    t.forgetful = forgetful_degree(genus, level);
    t.consistent = t.reducible_sum == t.forgetful;

    if (level == 3) {
        const BigInt top = big_pow(3, 2 * genus - 2);
        t.irreducible = {{"delta0_prime", Rational(3 * (top - 1), 3), 1},
                         {"delta0_double_prime", Rational(2, 3), 1},
                         {"delta0_ram", Rational(2 * top, 3), 3}};
        Rational sum = 0;
        for (const auto& d : t.irreducible) sum += d.degree * d.weight;
        t.irreducible_sum = sum;
        t.consistent = t.consistent && sum == t.forgetful;
    }
    return t;
}

}  // namespace ghostlab
