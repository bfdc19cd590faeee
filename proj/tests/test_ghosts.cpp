#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("sym_to_cochain and cochain_to_sym") {
    auto five = instances::odd_path_junior(5);
    CHECK(sym_to_cochain(SymmetricFunction(5, {0, 0, 0, 0}), five.multiplicity).is_zero());
    CHECK(sym_to_cochain(five.ghost, five.multiplicity) == five.multiplicity.cochain());
    CHECK(cochain_to_sym(five.multiplicity.cochain(), five.multiplicity) == five.ghost);

    auto eight = instances::junior_level8();
    CHECK(sym_to_cochain(eight.ghost, eight.multiplicity) == eight.multiplicity.cochain());

    auto ban = instances::banana_level3();
    CHECK(cochain_to_sym(Cochain1(3, {1, 2}), ban.multiplicity) == SymmetricFunction(3, {1, 1}));
    CHECK(cochain_to_sym(Cochain1(3, {0, 0}), ban.multiplicity).is_zero());

    auto M = MultiplicityCochain(banana(), Cochain1(8, {6, 2}));
    CHECK_THROWS_AS(sym_to_cochain(SymmetricFunction(8, {1, 0}), M), CochainError);
    CHECK_THROWS_WITH_AS(cochain_to_sym(Cochain1(8, {1, 0}), M), doctest::Contains("outside"), CochainError);
}

TEST_CASE("the two dictionaries are mutually inverse") {
    for (Residue l : {4, 6, 8, 9, 12}) {
        for_each_multiplicity(banana(), l, [&](const MultiplicityCochain& M) {
            std::vector<Residue> step(2);
            for (int e = 0; e < 2; ++e) step[e] = stabiliser_step(l, M[e]);
            for (Residue x = 0; x < l; x += step[0])
                for (Residue y = 0; y < l; y += step[1]) {
                    SymmetricFunction a(l, {x, y});
                    CHECK(in_symmetric_group(a, M));
                    CHECK(cochain_to_sym(sym_to_cochain(a, M), M) == a);
                    Cochain1 b(l, {x, y});
                    CHECK(sym_to_cochain(cochain_to_sym(b, M), M) == b);
                }
        });
    }
}

TEST_CASE("is_ghost") {
    auto vine = instances::vine_level3();
    CHECK(is_ghost(vine.graph, SymmetricFunction(3, {0, 0, 0}), vine.multiplicity));
    CHECK(is_ghost(vine.graph, SymmetricFunction(3, {1, 1, 1}), vine.multiplicity));
    auto loop = single_loop();
    for (Residue l = 2; l <= 6; ++l)
        for (Residue m = 1; m < l; ++m) {
            MultiplicityCochain M(loop, Cochain1(l, {m}));
            for (Residue a = stabiliser_step(l, m); a < l; a += stabiliser_step(l, m))
                CHECK_FALSE(is_ghost(loop, SymmetricFunction(l, {a}), M));
        }
}

TEST_CASE("ghost group of the worked instances") {
    auto fig = instances::tower_level8();
    auto group = ghost_group(fig.graph, fig.multiplicity);
    CHECK(group.order == 64);
    CHECK(group.elementary_divisors() == std::vector<Residue>{2, 4, 8});
    REQUIRE(group.generators.size() == 3);
    for (const auto& g : group.generators) CHECK(is_ghost(fig.graph, g.element, fig.multiplicity));

    auto tri = instances::triangle_level3();
    auto t = ghost_group(tri.graph, tri.multiplicity);
    CHECK(t.order == 9);
    CHECK(t.elementary_divisors() == std::vector<Residue>{3, 3});

    auto zero = MultiplicityCochain::zero(fig.graph, 8);
    CHECK(ghost_group(fig.graph, zero).trivial());

    auto par = instances::parallel_level6();
    CHECK(ghost_group(par.graph, par.multiplicity).trivial());
    std::vector<int> divisible;
    for (int e = 0; e < par.multiplicity.edge_count(); ++e)
        if (par.multiplicity[e] == 0) divisible.push_back(e);
    CHECK_FALSE(is_bouquet(contract(par.graph, divisible).quotient));
}

TEST_CASE("enumerate ghosts") {
    auto ban = instances::banana_level3();
    auto ghosts = enumerate_ghosts(ban.graph, ban.multiplicity);
    REQUIRE(ghosts.size() == 3);
    CHECK(ghosts[0] == SymmetricFunction(3, {0, 0}));
    CHECK(ghosts[1] == SymmetricFunction(3, {1, 2}));
    CHECK(ghosts[2] == SymmetricFunction(3, {2, 1}));

    auto tree_like = make_graph({{"a", 0}, {"b", 0}, {"c", 0}},
                                {{"e1", "a", "b"}, {"e2", "b", "c"}, {"l1", "a", "a"}, {"l2", "c", "c"}});
    for_each_multiplicity(tree_like, 6, [&](const MultiplicityCochain& M) {
        CHECK(enumerate_ghosts(tree_like, M).size() == 1);
    });

    auto fig = instances::tower_level8();
    CHECK(enumerate_ghosts(fig.graph, fig.multiplicity).size() == 64);
    CHECK_THROWS_AS(enumerate_ghosts(fig.graph, fig.multiplicity, 100), BudgetExceeded);
}

TEST_CASE("ghost oracle agrees with an orthogonality oracle") {
    for (const auto& g : connected_multigraphs(3, 4))
        for (Residue l : {2, 3, 4, 6}) {
            for_each_multiplicity(g, l, [&](const MultiplicityCochain& M) {
                std::vector<std::vector<Residue>> mine;
                for (const auto& a : enumerate_ghosts(g, M)) mine.push_back(a.values);
                CHECK(mine == brute_ghosts(g, M.cochain().values, l));
            });
        }
}

TEST_CASE("ghost group structure matches the oracle") {
    for (const auto& g : connected_multigraphs(4, 4))
        for (Residue l = 1; l <= 8; ++l)
            for_each_multiplicity(g, l, [&](const MultiplicityCochain& M) {
                auto group = ghost_group(g, M);
                auto ghosts = enumerate_ghosts(g, M);
                REQUIRE(BigInt(ghosts.size()) == group.order);
                CHECK(order_histogram(ghosts) == order_histogram(group.elementary_divisors()));
                std::set<SymmetricFunction> spanned;
                for_each_group_element(group, kDefaultBudget, [&](const SymmetricFunction& a) {
                    spanned.insert(a);
                    return true;
                });
                CHECK(spanned == std::set<SymmetricFunction>(ghosts.begin(), ghosts.end()));
                CHECK(has_nontrivial_ghosts(g, M) == (group.order > 1));
            });
}

TEST_CASE("ghosts vanish on loops and are never supported on one edge") {
    for (const auto& g : connected_multigraphs(3, 5))
        for (Residue l : {2, 3, 4, 5, 6})
            for_each_multiplicity(g, l, [&](const MultiplicityCochain& M) {
                for_each_ghost(g, M, kDefaultBudget, [&](const SymmetricFunction& a) {
                    for (int e = 0; e < g.edge_count(); ++e)
                        if (g.is_loop(e)) CHECK(a.values[e] == 0);
                    if (!a.is_zero()) CHECK(a.support_size() >= 2);
                    return true;
                });
            });
}

TEST_CASE("ghost group structure matches the oracle on sampled five-edge instances") {
    int compared = 0;
    for (const auto& g : connected_multigraphs(6, 5)) {
        if (g.edge_count() < 5) continue;
        for (Residue l = 2; l <= 12; ++l) {
            const auto total = static_cast<std::uint64_t>(std::pow(double(l), betti1(g)));
            const std::uint64_t stride = std::max<std::uint64_t>(1, total / 10);
            std::uint64_t index = 0;
            for_each_multiplicity(g, l, [&](const MultiplicityCochain& M) {
                if (index++ % stride != 0 || candidate_count(M) > 50000) return;
                auto group = ghost_group(g, M);
                auto ghosts = enumerate_ghosts(g, M);
                REQUIRE(BigInt(ghosts.size()) == group.order);
                CHECK(order_histogram(ghosts) == order_histogram(group.elementary_divisors()));
                ++compared;
            });
        }
    }
    CHECK(compared > 1000);
}
