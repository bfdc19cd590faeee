#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("phi") {
    for (Residue l : {2, 3, 5, 7, 11})
        for (int n = 1; n <= 8; ++n) CHECK(phi(n, l) == big_pow(l, n) - 1);
    CHECK(phi(4, 2) == 15);
    CHECK(phi(2, 6) == 24);
    CHECK(phi(3, 1) == 1);
    // Φ_n(ℓ) counts vectors of order exactly ℓ in (Z/ℓ)^n.
    for (Residue l = 1; l <= 8; ++l)
        for (int n = 1; n <= 3; ++n) {
            int count = 0;
            odometer(n, l, [&](const std::vector<Residue>& x) {
                Residue ord = 1;
                for (auto v : x) ord = std::lcm(ord, l / std::gcd(v, l));
                if (ord == l) ++count;
            });
            CHECK(phi(n, l) == count);
        }
}

TEST_CASE("forgetful degree") {
    for (int g = 2; g <= 6; ++g) CHECK(forgetful_degree(g, 3) == Rational(big_pow(3, 2 * g) - 1, 3));
    CHECK(forgetful_degree(2, 2) == Rational(15, 2));
    CHECK(forgetful_degree(5, 1) == 1);
    CHECK_THROWS_AS(forgetful_degree(1, 3), Error);
}

TEST_CASE("component length") {
    auto g = banana();
    CHECK(component_length(g, MultiplicityCochain::zero(g, 2)) == 1);
    CHECK(component_length(g, MultiplicityCochain(g, Cochain1(2, {1, 1}))) == 2);
    auto fig = instances::tower_level8();
    CHECK(component_length(fig.graph, fig.multiplicity) == 256);
    CHECK(component_length_from_ghosts(fig.graph, fig.multiplicity) == 256);
    for (const auto& h : connected_multigraphs(4, 4))
        for (Residue l = 1; l <= 12; ++l)
            for_each_multiplicity(h, l, [&](const MultiplicityCochain& M) {
                CHECK(component_length(h, M) == component_length_from_ghosts(h, M));
            });
}

TEST_CASE("fiber audit") {
    auto audit = fiber_audit(banana(1, 1), 2);
    REQUIRE(audit.rows.size() == 2);
    CHECK(audit.rows[0].multiplicity.is_zero());
    CHECK(audit.rows[0].components == 32);
    CHECK(audit.rows[0].length == 1);
    CHECK(audit.rows[1].components == 16);
    CHECK(audit.rows[1].length == 2);
    CHECK(audit.total == 64);

    GraphSpec tree{{{"a", 2}, {"b", 1}, {"c", 3}}, {{"e1", "a", "b"}, {"e2", "b", "c"}}};
    auto t = fiber_audit(DualGraph::from_spec(tree), 5);
    CHECK(t.rows.size() == 1);
    CHECK(t.total == big_pow(5, 12));

    auto fig = instances::tower_level8();
    auto big = fiber_audit(fig.graph, 8, FiberMode::streaming);
    CHECK(big.rows.empty());
    CHECK(big.multiplicities == 4096);
    CHECK(big.total == big_pow(8, 8));
}

TEST_CASE("fiber audit identity over small graphs and genera") {
    std::mt19937 rng(11);
    for (const auto& h : connected_multigraphs(4, 4)) {
        if (betti1(h) > 5) continue;
        for (Residue l = 1; l <= 12; ++l) {
            auto vertices = h.vertices();
            int budget = 5 - betti1(h);
            for (auto& v : vertices) {
                v.genus = std::uniform_int_distribution<int>(0, budget)(rng);
                budget -= v.genus;
            }
            DualGraph g(vertices, h.edges());
            auto audit = fiber_audit(g, l, FiberMode::streaming);
            CHECK(audit.total == big_pow(l, 2 * total_genus(g)));
        }
    }
}

TEST_CASE("boundary degrees") {
    auto t = boundary_degrees_prime(4, 3, 1);
    CHECK(t.reducible.at(0).degree == Rational(8, 3));
    CHECK(t.consistent);
    REQUIRE(t.irreducible_sum);
    CHECK(*t.irreducible_sum == Rational(big_pow(3, 8) - 1, 3));
    for (int g = 4; g <= 8; ++g)
        for (Residue l : {2, 3, 5, 7})
            for (int i = 1; i <= g / 2; ++i) {
                auto d = boundary_degrees_prime(g, l, i);
                CHECK(d.reducible_sum == Rational(big_pow(l, 2 * g) - 1, l));
                CHECK(d.consistent);
                CHECK(d.irreducible_sum.has_value() == (l == 3));
            }
    CHECK_THROWS_AS(boundary_degrees_prime(4, 6, 1), Error);
    CHECK_THROWS_AS(boundary_degrees_prime(4, 3, 3), Error);
}
