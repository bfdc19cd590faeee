#include "ghostlab/age.hpp"

#include "ghostlab/multigraphs.hpp"

#include <atomic>
#include <thread>

namespace ghostlab {

std::string to_string(AgeVerdict v) {
    switch (v) {
        case AgeVerdict::trivial: return "trivial";
        case AgeVerdict::junior: return "junior";
        case AgeVerdict::senior: return "senior";
    }
    return "?";
}

std::string to_string(ScanMethod m) { return m == ScanMethod::oracle ? "oracle" : "generators"; }

namespace {

// ã is normalized to [0, ℓ), so ⟨ã/ℓ⟩ = ã/ℓ and the age is (Σ ã)/ℓ.
Residue age_numerator(const SymmetricFunction& a) {
    Residue s = 0;
    for (auto x : a.values) s += x;
    return s;
}

bool junior_numerator(Residue num, Residue level) { return num > 0 && num < level; }

}  // namespace

Rational age_of(const SymmetricFunction& a) { return Rational(BigInt(age_numerator(a)), BigInt(a.level)); }

AgeReport classify(const SymmetricFunction& a) {
    Residue num = age_numerator(a);
    AgeVerdict v = a.is_zero() ? AgeVerdict::trivial
                               : (junior_numerator(num, a.level) ? AgeVerdict::junior : AgeVerdict::senior);
    return {a, Rational(BigInt(num), BigInt(a.level)), v};
}

JuniorSearch find_junior_ghost(const DualGraph& graph, const MultiplicityCochain& M, std::uint64_t budget) {
    JuniorSearch out;
    const Residue level = M.level();
    if (candidate_count(M) <= budget) {
        out.method = ScanMethod::oracle;
        // Lexicographic scan order, so the first junior ghost is the least one.
        for_each_ghost(graph, M, budget, [&](const SymmetricFunction& a) {
            ++out.scanned;
            if (junior_numerator(age_numerator(a), level)) {
                out.witness = classify(a);
                return false;
            }
            return true;
        });
        return out;
    }
    out.method = ScanMethod::generators;
    auto group = ghost_group(graph, M);
    std::optional<SymmetricFunction> best;
    try {
        for_each_group_element(group, budget, [&](const SymmetricFunction& a) {
            ++out.scanned;
            if (junior_numerator(age_numerator(a), level) && (!best || a < *best)) best = a;
            return true;
        });
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(std::string("junior search: oracle needs more than ") + std::to_string(budget) +
                                 " candidates and " + e.what(),
                             out.scanned);
    }
    if (best) out.witness = classify(*best);
    return out;
}

SweepReport junior_sweep(Residue level, int max_edges, int max_vertices, std::uint64_t budget, unsigned threads) {
    const auto graphs = connected_multigraphs(max_vertices, max_edges);
    struct PerGraph {
        std::uint64_t instances = 0;
        std::uint64_t witnesses = 0;
        std::uint64_t skipped = 0;
        std::optional<Rational> max_age;
        std::vector<SweepInstance> reported;
    };
    std::vector<PerGraph> results(graphs.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            const auto& graph = graphs[i];
            auto& res = results[i];
            for_each_multiplicity(graph, level, [&](const MultiplicityCochain& M) {
                ++res.instances;
                try {
                    auto found = find_junior_ghost(graph, M, budget);
                    if (!found.witness) return;
                    ++res.witnesses;
                    if (!res.max_age || found.witness->age > *res.max_age) res.max_age = found.witness->age;
                    res.reported.push_back({graph.to_spec(), M.cochain(), found.witness, {}});
                } catch (const BudgetExceeded& e) {
                    ++res.skipped;
                    res.reported.push_back({graph.to_spec(), M.cochain(), std::nullopt, e.what()});
                }
            });
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SweepReport report;
    report.level = level;
    report.max_edges = max_edges;
    report.max_vertices = max_vertices;
    report.graphs = graphs.size();
    for (auto& res : results) {
        report.instances += res.instances;
        report.witnesses += res.witnesses;
        report.skipped += res.skipped;
        if (res.max_age && (!report.max_age_below_1 || *res.max_age > *report.max_age_below_1))
            report.max_age_below_1 = res.max_age;
        for (auto& inst : res.reported) report.reported.push_back(std::move(inst));
    }
    return report;
}

}  // namespace ghostlab
