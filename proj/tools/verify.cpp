#include "verify.hpp"

#include "ghostlab/ghostlab.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace ghostlab::cli {

namespace {

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string on success, else the mismatch
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

template <class T>
std::string show(const std::vector<T>& v) {
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << "]";
    return s.str();
}

std::vector<Check> checks() {
    std::vector<Check> list;
    list.push_back({"tower_level8.tower", [] {
        auto d = instances::tower_level8();
        auto t = contraction_tower(d.graph, d.multiplicity, 2);
        std::vector<int> counts{t.vertex_count(3), t.vertex_count(2), t.vertex_count(1)};
        return expect(counts == std::vector<int>{4, 3, 2} && t.vertex_sum() == 9,
                      "vertex counts " + show(counts) + ", sum " + std::to_string(t.vertex_sum()));
    }});
    list.push_back({"tower_level8.valuation", [] {
        auto d = instances::tower_level8();
        std::vector<std::string> nu;
        auto profile = valuation(d.multiplicity);
        for (auto v : profile.for_prime(2).per_edge) nu.push_back(v.to_string());
        return expect(nu == std::vector<std::string>{"inf", "inf", "0", "1", "2", "0", "0", "1"}, "nu " + show(nu));
    }});
    list.push_back({"tower_level8.group", [] {
        auto d = instances::tower_level8();
        auto g = ghost_group(d.graph, d.multiplicity);
        auto n = enumerate_ghosts(d.graph, d.multiplicity).size();
        return expect(g.order == 64 && g.elementary_divisors() == std::vector<Residue>{2, 4, 8} && n == 64,
                      "order " + to_string(g.order) + ", divisors " + show(g.elementary_divisors()) +
                          ", oracle " + std::to_string(n));
    }});
    list.push_back({"tower_level8.generator_ages", [] {
        auto d = instances::tower_level8();
        auto gens = instances::tower_level8_generators();
        std::vector<std::string> ages;
        bool ghosts = true;
        for (const auto& a : gens) {
            ages.push_back(to_string(age_of(a)));
            ghosts = ghosts && is_ghost(d.graph, a, d.multiplicity);
        }
        return expect(ghosts && ages == std::vector<std::string>{"3/2", "5/4", "1/1"}, "ages " + show(ages));
    }});
    list.push_back({"tower_level8.no_junior", [] {
        auto d = instances::tower_level8();
        auto r = classify_point(d.graph, d.multiplicity, {});
        return expect(r.verdict == PointVerdict::canonical_singular, "verdict " + to_string(r.verdict));
    }});
    struct Junior {
        const char* name;
        std::function<JuniorWitness()> make;
        Rational age;
    };
    for (const auto& j : std::vector<Junior>{{"junior_level5", [] { return instances::odd_path_junior(5); }, {4, 5}},
                                             {"junior_level8", instances::junior_level8, {3, 4}},
                                             {"junior_level12", instances::junior_level12, {2, 3}}}) {
        list.push_back({j.name, [j] {
            auto w = j.make();
            bool ghost = is_ghost(w.graph, w.ghost, w.multiplicity);
            auto r = classify_point(w.graph, w.multiplicity, {});
            return expect(ghost && age_of(w.ghost) == j.age && r.verdict == PointVerdict::noncanonical &&
                              r.has(ReasonTag::j_curve),
                          "age " + to_string(age_of(w.ghost)) + ", verdict " + to_string(r.verdict));
        }});
    }
    list.push_back({"level5.dictionary", [] {
        auto w = instances::odd_path_junior(5);
        return expect(sym_to_cochain(w.ghost, w.multiplicity) == w.multiplicity.cochain() &&
                          cochain_to_sym(w.multiplicity.cochain(), w.multiplicity) == w.ghost,
                      "b differs from M");
    }});
    list.push_back({"circuit.triangle", [] {
        auto d = instances::triangle_level3();
        auto g = ghost_group(d.graph, d.multiplicity);
        return expect(g.elementary_divisors() == std::vector<Residue>{3, 3} &&
                          !find_junior_ghost(d.graph, d.multiplicity).witness,
                      "divisors " + show(g.elementary_divisors()));
    }});
    list.push_back({"circuit.banana", [] {
        auto d = instances::banana_level3();
        auto ghosts = enumerate_ghosts(d.graph, d.multiplicity);
        bool ages = true;
        for (const auto& a : ghosts)
            if (!a.is_zero()) ages = ages && age_of(a) == 1;
        return expect(ghosts.size() == 3 && ages, "ghosts " + std::to_string(ghosts.size()));
    }});
    list.push_back({"circuit.loop", [] {
        auto g = DualGraph({{"v", 1}}, {{"e1", 0, 0}});
        bool trivial = true;
        for (Residue m = 0; m < 3; ++m) {
            MultiplicityCochain M(g, Cochain1(3, {m}));
            trivial = trivial && ghost_group(g, M).trivial() && enumerate_ghosts(g, M).size() == 1;
        }
        return expect(trivial, "nontrivial ghosts on a loop");
    }});
    list.push_back({"vine", [] {
        auto d = instances::vine_level3();
        return expect(in_im_delta(d.graph, d.multiplicity.cochain()) &&
                          is_ghost(d.graph, SymmetricFunction(3, {1, 1, 1}), d.multiplicity),
                      "constant ghost rejected");
    }});
    list.push_back({"parallel_level6", [] {
        auto d = instances::parallel_level6();
        return expect(ghost_group(d.graph, d.multiplicity).trivial() && !has_nontrivial_ghosts(d.graph, d.multiplicity),
                      "ghosts found");
    }});
    list.push_back({"no_junior_levels", [] {
        std::vector<Residue> bad;
        for (Residue l : {1, 2, 3, 4, 6})
            if (junior_witness(l)) bad.push_back(l);
        for (Residue l : {5, 7, 8, 10, 12})
            if (!junior_witness(l)) bad.push_back(l);
        return expect(bad.empty(), "wrong answer at levels " + show(bad));
    }});
    list.push_back({"tail_stabilizers", [] {
        using V = std::vector<TailAutomorphism>;
        bool ok = tail_stabilizer(TailLineBundle(1, 1, 0, 0)) == V{{1, 0}} &&
                  tail_stabilizer(TailLineBundle(2, 1, 1, 0)) == V{{1, 0}} &&
                  tail_stabilizer(TailLineBundle(2, 2, 1, 1)) == V{{1, 0}} &&
                  tail_stabilizer(TailLineBundle(4, 2, 1, 1)) == V{{1, 1}} &&
                  tail_stabilizer(TailLineBundle(3, 3, 1, 1)).empty();
        return expect(ok, "stabilizer mismatch");
    }});
    list.push_back({"counting.phi", [] {
        bool ok = phi(4, 2) == 15 && phi(2, 6) == 24 && forgetful_degree(2, 2) == Rational(15, 2);
        for (int g = 2; g <= 6; ++g)
            for (Residue l : {2, 3, 5, 7}) ok = ok && forgetful_degree(g, l) == Rational(big_pow(l, 2 * g) - 1, l);
        return expect(ok, "degree mismatch");
    }});
    list.push_back({"counting.boundary", [] {
        bool ok = boundary_degrees_prime(4, 3, 1).reducible.at(0).degree == Rational(8, 3);
        for (int g = 2; g <= 8; ++g)
            for (int i = 1; i <= g / 2; ++i) ok = ok && boundary_degrees_prime(g, 3, i).consistent;
        return expect(ok, "boundary degrees do not add up");
    }});
    list.push_back({"fiber.banana", [] {
        auto g = DualGraph({{"v1", 1}, {"v2", 1}}, {{"e1", 0, 1}, {"e2", 0, 1}});
        auto a = fiber_audit(g, 2);
        return expect(a.total == 64 && a.rows.size() == 2 && a.rows[0].components == 32 && a.rows[1].length == 2,
                      "total " + to_string(a.total));
    }});
    list.push_back({"fiber.tower_level8", [] {
        auto d = instances::tower_level8();
        auto a = fiber_audit(d.graph, 8, FiberMode::streaming);
        return expect(a.total == big_pow(8, 8) &&
                          component_length(d.graph, d.multiplicity) ==
                              component_length_from_ghosts(d.graph, d.multiplicity),
                      "total " + to_string(a.total));
    }});
    return list;
}

}  // namespace

int run_worked_examples(std::ostream& out) {
    int failures = 0;
    for (const auto& c : checks()) {
        std::string problem;
        try {
            problem = c.run();
        } catch (const std::exception& e) {
            problem = std::string("threw: ") + e.what();
        }
        if (problem.empty()) {
            out << "ok       " << c.name << "\n";
        } else {
            ++failures;
            out << "MISMATCH " << c.name << ": " << problem << "\n";
        }
    }
    out << (failures ? std::to_string(failures) + " mismatches\n" : "all checks passed\n");
    return failures;
}

}  // namespace ghostlab::cli
