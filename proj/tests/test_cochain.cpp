#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("delta") {
    auto g = banana();
    CHECK(delta(g, Cochain0(3, {2, 2})).is_zero());
    CHECK(delta(g, Cochain0(3, {0, 1})).values == std::vector<Residue>{1, 1});
    auto t = triangle();
    auto cuts = cuts_basis(t);
    // Cut of W is δ of the indicator of the complement.
    for (const auto& cut : cuts) {
        std::vector<bool> rest(cut.side.size());
        for (std::size_t v = 0; v < rest.size(); ++v) rest[v] = !cut.side[v];
        CHECK(delta(t, indicator(rest, 5)) == cut_cochain(t, cut, 5));
    }
    CHECK(delta(single_loop(), Cochain0(7, {3})).is_zero());
}

TEST_CASE("partial") {
    auto g = banana();
    CHECK(partial(g, Cochain1::zero(g, 3)).values == std::vector<Residue>{0, 0});
    CHECK(partial(g, Cochain1(3, {1, 1})).values == std::vector<Residue>{1, 2});
    for (const auto& c : fundamental_circuits(triangle()))
        CHECK(partial(triangle(), circuit_cochain(triangle(), c, 4)).values == std::vector<Residue>{0, 0, 0});
    CHECK(partial(single_loop(), Cochain1(5, {3})).values == std::vector<Residue>{0});
}

TEST_CASE("pairings and circuit values") {
    auto g = banana();
    Cochain1 b(3, {1, 1});
    CHECK(pairing1(b, Cochain1::zero(g, 3)) == 0);
    CHECK(pairing1(b, b) == 2);
    auto circuit = fundamental_circuits(g).at(0);
    CHECK(pairing1(cut_cochain(g, cuts_basis(g)[0], 3), circuit_cochain(g, circuit, 3)) == 0);
    CHECK(circuit_value(Cochain1::zero(g, 3), circuit) == 0);
    CHECK(circuit_value(Cochain1(3, {1, 2}), circuit) == 2);
    CHECK_THROWS_AS(pairing1(Cochain1(3, {1, 1}), Cochain1(4, {1, 1})), CochainError);

    auto vine = instances::vine_level3();
    for (const auto& c : fundamental_circuits(vine.graph)) {
        CHECK(c.edges.size() == 2);
        CHECK(circuit_value(vine.multiplicity.cochain(), c) == 0);
    }
}

TEST_CASE("membership") {
    auto g = banana();
    CHECK(in_im_delta(g, Cochain1(3, {1, 1})));
    CHECK_FALSE(in_im_delta(g, Cochain1(3, {1, 2})));
    CHECK(in_im_delta(instances::vine_level3().graph, instances::vine_level3().multiplicity.cochain()));
    CHECK(in_ker_partial(g, Cochain1(3, {1, 2})));
    CHECK_FALSE(in_ker_partial(g, Cochain1(3, {1, 1})));
    auto fig = instances::tower_level8();
    CHECK(in_ker_partial(fig.graph, fig.multiplicity.cochain()));
}

TEST_CASE("enumerate ker partial") {
    CHECK(enumerate_ker_partial(path4(), 5).size() == 1);
    CHECK(enumerate_ker_partial(banana(), 2).size() == 2);
    auto fig = instances::tower_level8();
    CHECK(enumerate_ker_partial(fig.graph, 8).size() == 4096);

    KernelEnumerator it(banana(), 3);
    Cochain1 c;
    int first = 0, second = 0;
    while (it.next(c)) ++first;
    it.reset();
    while (it.next(c)) ++second;
    CHECK(first == 3);
    CHECK(second == 3);
    CHECK(it.size() == 3);
}

TEST_CASE("adjointness over small graphs") {
    std::mt19937 rng(7);
    for (const auto& g : connected_multigraphs(4, 5)) {
        for (Residue n = 1; n <= 12; ++n) {
            std::uniform_int_distribution<Residue> d(0, n - 1);
            for (int trial = 0; trial < 4; ++trial) {
                std::vector<Residue> a(g.vertex_count()), b(g.edge_count());
                for (auto& x : a) x = d(rng);
                for (auto& x : b) x = d(rng);
                Cochain0 A(n, a);
                Cochain1 B(n, b);
                CHECK(pairing1(delta(g, A), B) == pairing0(A, partial(g, B)));
            }
        }
    }
}

TEST_CASE("im delta agrees with brute-force preimage search") {
    for (const auto& g : connected_multigraphs(4, 4)) {
        for (Residue n = 1; n <= 6; ++n) {
            if (std::pow(double(n), g.edge_count() + g.vertex_count()) > 2e5) continue;
            odometer(g.edge_count(), n, [&](const std::vector<Residue>& b) {
                CHECK(in_im_delta(g, Cochain1(n, b)) == brute_in_image(g, b, n));
            });
        }
    }
}

TEST_CASE("ker partial is spanned by the fundamental circuits") {
    for (const auto& g : connected_multigraphs(4, 4)) {
        for (Residue n = 1; n <= 6; ++n) {
            auto brute = brute_kernel(g, n);
            std::set<std::vector<Residue>> spanned;
            for (const auto& c : enumerate_ker_partial(g, n)) spanned.insert(c.values);
            CHECK(std::set<std::vector<Residue>>(brute.begin(), brute.end()) == spanned);
            odometer(g.edge_count(), n, [&](const std::vector<Residue>& b) {
                CHECK(in_ker_partial(g, Cochain1(n, b)) == (spanned.count(b) == 1));
            });
        }
    }
}

TEST_CASE("blowup and contraction homomorphisms") {
    auto fig = instances::tower_level8();
    const auto& g = fig.graph;
    auto c = contract_ids(g, {"e1", "e2"});
    CHECK(blowup1(Cochain1::zero(c.quotient, 8), g, c).is_zero());
    for (const auto& cut : cuts_basis(c.quotient)) {
        auto up = blowup1(cut_cochain(c.quotient, cut, 8), g, c);
        std::vector<bool> side(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) side[v] = cut.side[c.vertex_map[v]];
        CHECK(up == cut_cochain(g, Cut{side}, 8));
    }
    Cochain0 a(8, {1, 5, 2, 7});
    CHECK(blowup1(delta(c.quotient, a), g, c) == delta(g, blowup0(a, c)));

    CHECK(contract0(Cochain0(8, {3, 3, 3, 3, 3}), c).values == std::vector<Residue>{3, 3, 3, 3});
    std::vector<bool> piece(g.vertex_count(), false);
    piece[g.vertex_index("a")] = piece[g.vertex_index("b")] = true;
    auto down = contract0(indicator(piece, 8), c);
    CHECK(down.values[c.vertex_map[g.vertex_index("a")]] == 1);
    CHECK(std::accumulate(down.values.begin(), down.values.end(), Residue(0)) == 1);
    CHECK_THROWS_WITH_AS(contract0(Cochain0(8, {1, 2, 0, 0, 0}), c), doctest::Contains("not ν-compatible"),
                         CochainError);
}

TEST_CASE("blowup of im delta is im delta restricted to C1_nu") {
    for (const auto& g : connected_multigraphs(3, 4)) {
        const Residue n = 4;
        const int m = g.edge_count();
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> s;
            for (int e = 0; e < m; ++e)
                if (mask >> e & 1) s.push_back(e);
            auto c = contract(g, s);
            std::set<std::vector<Residue>> lifted, restricted;
            odometer(c.quotient.vertex_count(), n, [&](const std::vector<Residue>& a) {
                lifted.insert(blowup1(delta(c.quotient, Cochain0(n, a)), g, c).values);
            });
            odometer(g.vertex_count(), n, [&](const std::vector<Residue>& a) {
                auto b = naive_delta(g, a, n);
                bool vanishes = true;
                for (int e : s) vanishes = vanishes && b[e] == 0;
                if (vanishes) restricted.insert(b);
            });
            CHECK(lifted == restricted);
        }
    }
}
