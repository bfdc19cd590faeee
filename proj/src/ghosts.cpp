#include "ghostlab/ghosts.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ghostlab {

SymmetricFunction::SymmetricFunction(Residue l, std::vector<Residue> vals) : level(l), values(std::move(vals)) {
    if (l < 1) throw CochainError("level must be positive");
    for (auto& x : values) x = mod(x, l);
}

bool SymmetricFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](Residue x) { return x == 0; });
}

int SymmetricFunction::support_size() const {
    return static_cast<int>(std::count_if(values.begin(), values.end(), [](Residue x) { return x != 0; }));
}

SymmetricFunction SymmetricFunction::operator+(const SymmetricFunction& other) const {
    if (level != other.level) throw CochainError("level mismatch between symmetric functions");
    SymmetricFunction out = *this;
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = mod(values[i] + other.values.at(i), level);
    return out;
}

SymmetricFunction SymmetricFunction::scaled(Residue k) const {
    SymmetricFunction out = *this;
    for (auto& x : out.values) x = mod(x * k, level);
    return out;
}

Residue element_order(const SymmetricFunction& a) {
    Residue order = 1;
    for (auto x : a.values) order = std::lcm(order, additive_order(x, a.level));
    return order;
}

bool in_symmetric_group(const SymmetricFunction& a, const MultiplicityCochain& M) {
    if (a.level != M.level() || static_cast<int>(a.values.size()) != M.edge_count()) return false;
    for (int e = 0; e < M.edge_count(); ++e)
        if (a.values[e] % stabiliser_step(M.level(), M[e]) != 0) return false;
    return true;
}

Cochain1 sym_to_cochain(const SymmetricFunction& a, const MultiplicityCochain& M) {
    if (!in_symmetric_group(a, M)) throw CochainError("symmetric function is not in S_ν for this multiplicity");
    std::vector<Residue> out(a.values.size());
    for (int e = 0; e < M.edge_count(); ++e) out[e] = local_indices(M.level(), M[e]).m * a.values[e];
    return Cochain1(M.level(), std::move(out));
}

SymmetricFunction cochain_to_sym(const Cochain1& b, const MultiplicityCochain& M) {
    if (b.modulus != M.level() || static_cast<int>(b.values.size()) != M.edge_count())
        throw CochainError("cochain does not match the multiplicity's level or edge count");
    std::vector<Residue> out(b.values.size(), 0);
    for (int e = 0; e < M.edge_count(); ++e) {
        Residue step = stabiliser_step(M.level(), M[e]);
        if (b.values[e] % step != 0)
            throw CochainError("b outside C¹_ν: value " + std::to_string(b.values[e]) + " on edge " +
                               std::to_string(e) + " is not in the order-" + std::to_string(M.level() / step) +
                               " subgroup");
        if (M[e] == 0) continue;
        auto idx = local_indices(M.level(), M[e]);
        out[e] = *inverse_mod(idx.m, idx.r) * b.values[e];
    }
    return SymmetricFunction(M.level(), std::move(out));
}

bool is_ghost(const DualGraph& graph, const SymmetricFunction& a, const MultiplicityCochain& M) {
    return in_im_delta(graph, sym_to_cochain(a, M));
}

std::vector<Residue> GhostGroup::elementary_divisors() const {
    std::vector<Residue> out;
    for (const auto& c : components)
        for (std::size_t k = 0; k < c.alpha.size(); ++k)
            for (int i = 0; i < c.alpha[k]; ++i) out.push_back(ipow(c.prime.prime, static_cast<int>(k) + 1));
    std::sort(out.begin(), out.end());
    return out;
}

GhostGroup ghost_group(const DualGraph& graph, const MultiplicityCochain& M) {
    if (!in_ker_partial(graph, M.cochain())) throw CochainError("multiplicity not in ker ∂");
    const Residue level = M.level();
    GhostGroup group;
    group.level = level;
    group.edge_count = graph.edge_count();
    for (const auto& tower : contraction_towers(graph, M)) {
        const auto& pp = tower.prime;
        PrimeComponent comp{pp, std::vector<int>(pp.exponent, 0), {}};
        for (int k = 0; k <= pp.exponent; ++k) comp.vertex_counts.push_back(tower.vertex_count(k));
        for (int k = 1; k <= pp.exponent; ++k)
            comp.alpha[k - 1] = tower.vertex_count(pp.exponent - k + 1) - tower.vertex_count(pp.exponent - k);
        group.order *= big_pow(BigInt(pp.prime), static_cast<unsigned>(tower.vertex_sum()));

        // The blocks of the stage-k partition form a laminar family as k grows.
        // Within each stage-(k-1) block, every child block except the one holding
        // the parent's least vertex contributes a cut scaled to order p^{e-k+1}.
        const Residue cofactor = level / pp.power;
        for (int k = 1; k <= pp.exponent; ++k) {
            const auto& stage = tower.stages[k];
            const auto& parent = tower.stages[k - 1];
            const Residue scale = cofactor * ipow(pp.prime, k - 1);
            std::vector<int> least_in_parent(parent.quotient.vertex_count(), -1);
            for (int v = 0; v < graph.vertex_count(); ++v) {
                int pb = parent.vertex_map[v];
                if (least_in_parent[pb] < 0) least_in_parent[pb] = v;
            }
            for (int block = 0; block < stage.quotient.vertex_count(); ++block) {
                std::vector<bool> side(graph.vertex_count(), false);
                int any = -1;
                for (int v = 0; v < graph.vertex_count(); ++v)
                    if (stage.vertex_map[v] == block) {
                        side[v] = true;
                        if (any < 0) any = v;
                    }
                if (side[least_in_parent[parent.vertex_map[any]]]) continue;
                Cochain1 b = delta(graph, indicator(side, level)).scaled(scale);
                GhostGenerator gen{cochain_to_sym(b, M), ipow(pp.prime, pp.exponent - k + 1), pp.prime, k, {}};
                for (int v = 0; v < graph.vertex_count(); ++v)
                    if (side[v]) gen.cut_side.push_back(graph.vertex(v).id);
                group.generators.push_back(std::move(gen));
            }
        }
        group.components.push_back(std::move(comp));
    }
    // Closed form: (1/ℓ)·∏_p p^{ΣV_p}.
    group.order /= level;
    std::stable_sort(group.generators.begin(), group.generators.end(),
                     [](const GhostGenerator& a, const GhostGenerator& b) { return a.order > b.order; });
    return group;
}

std::uint64_t candidate_count(const MultiplicityCochain& M) {
    std::uint64_t total = 1;
    for (int e = 0; e < M.edge_count(); ++e) {
        auto r = static_cast<std::uint64_t>(local_indices(M.level(), M[e]).r);
        if (total > std::numeric_limits<std::uint64_t>::max() / r) return std::numeric_limits<std::uint64_t>::max();
        total *= r;
    }
    return total;
}

void for_each_ghost(const DualGraph& graph, const MultiplicityCochain& M, std::uint64_t budget,
                    const std::function<bool(const SymmetricFunction&)>& fn) {
    const std::uint64_t total = candidate_count(M);
    if (total > budget)
        throw BudgetExceeded("oracle needs " + (total == std::numeric_limits<std::uint64_t>::max()
                                                    ? std::string("more than 2^64")
                                                    : std::to_string(total)) +
                                 " candidates, budget is " + std::to_string(budget),
                             0);
    const Residue level = M.level();
    const int n = M.edge_count();
    std::vector<Residue> step(n), radix(n), unit(n);
    for (int e = 0; e < n; ++e) {
        step[e] = stabiliser_step(level, M[e]);
        auto idx = local_indices(level, M[e]);
        radix[e] = idx.r;
        unit[e] = idx.m;
    }
    const auto circuits = fundamental_circuits(graph);

    SymmetricFunction a(level, std::vector<Residue>(n, 0));
    std::vector<Residue> digit(n, 0);
    std::vector<Residue> b(n, 0);
    for (;;) {
        for (int e = 0; e < n; ++e) b[e] = unit[e] * a.values[e] % level;
        bool ghost = true;
        for (const auto& c : circuits) {
            Residue s = 0;
            for (auto oe : c.edges) s += oe.reversed ? -b[oe.edge] : b[oe.edge];
            if (mod(s, level) != 0) {
                ghost = false;
                break;
            }
        }
        if (ghost && !fn(a)) return;
        int e = n - 1;
        for (; e >= 0; --e) {
            if (++digit[e] < radix[e]) {
                a.values[e] = digit[e] * step[e];
                break;
            }
            digit[e] = 0;
            a.values[e] = 0;
        }
        if (e < 0) return;
    }
}

std::vector<SymmetricFunction> enumerate_ghosts(const DualGraph& graph, const MultiplicityCochain& M,
                                                std::uint64_t budget) {
    std::vector<SymmetricFunction> out;
    for_each_ghost(graph, M, budget, [&](const SymmetricFunction& a) {
        out.push_back(a);
        return true;
    });
    return out;
}

void for_each_group_element(const GhostGroup& group, std::uint64_t budget,
                            const std::function<bool(const SymmetricFunction&)>& fn) {
    if (group.order > BigInt(budget))
        throw BudgetExceeded("group has " + group.order.str() + " elements, budget is " + std::to_string(budget), 0);
    const auto& gens = group.generators;
    std::vector<Residue> coeff(gens.size(), 0);
    SymmetricFunction current(group.level, std::vector<Residue>(group.edge_count, 0));
    if (gens.empty()) {
        fn(current);
        return;
    }
    for (;;) {
        if (!fn(current)) return;
        std::size_t i = gens.size();
        while (i > 0) {
            --i;
            current = current + gens[i].element;
            if (++coeff[i] < gens[i].order) break;
            coeff[i] = 0;  // adding the generator order times wrapped back to zero
            if (i == 0) return;
        }
    }
}

}  // namespace ghostlab
