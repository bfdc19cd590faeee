#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("tail_act") {
    TailLineBundle L(6, 3, 4, 2);
    CHECK(tail_act({0, 0}, L) == L);
    CHECK(tail_act({1, 1}, TailLineBundle(4, 2, 1, 1)) == TailLineBundle(4, 2, 1, 1));
    CHECK(tail_act({1, 0}, L) == TailLineBundle(6, 3, -4, -2));
    CHECK_THROWS_AS(TailLineBundle(6, 4, 1, 1), Error);
}

TEST_CASE("tail_stabilizer") {
    using V = std::vector<TailAutomorphism>;
    CHECK(tail_stabilizer(TailLineBundle(1, 1, 0, 0)) == V{{1, 0}});
    CHECK(tail_stabilizer(TailLineBundle(4, 2, 1, 1)) == V{{1, 1}});
    CHECK(tail_stabilizer(TailLineBundle(4, 2, 3, 1)) == V{{1, 1}});
    CHECK(tail_stabilizer(TailLineBundle(3, 3, 0, 1)).empty());
    CHECK(tail_stabilizer(TailLineBundle(3, 3, 2, 1)).empty());
    CHECK_THROWS_AS(tail_stabilizer(TailLineBundle(3, 3, 0, 0)), Error);
    CHECK_THROWS_AS(tail_stabilizer(TailLineBundle(6, 3, 0, 1)), Error);
}

TEST_CASE("composition law is an action") {
    for (Residue l = 1; l <= 12; ++l)
        for (Residue r = 1; r <= l; ++r) {
            if (l % r) continue;
            auto group = tail_automorphisms(r);
            CHECK(group.size() == static_cast<std::size_t>(2 * r));
            for (Residue k1 = 0; k1 < l; ++k1)
                for (Residue k2 = 0; k2 < r; ++k2) {
                    TailLineBundle L(l, r, k1, k2);
                    for (const auto& g : group)
                        for (const auto& h : group)
                            CHECK(tail_act(compose(g, h, r), L) == tail_act(g, tail_act(h, L)));
                }
        }
}

TEST_CASE("orbit-stabilizer and the four exceptional cases") {
    std::vector<std::tuple<Residue, Residue, Residue, Residue, Residue, Residue>> found;
    for (Residue l = 1; l <= 12; ++l)
        for (Residue r = 1; r <= l; ++r) {
            if (l % r) continue;
            for (Residue k1 = 0; k1 < l; ++k1)
                for (Residue k2 = 0; k2 < r; ++k2) {
                    TailLineBundle L(l, r, k1, k2);
                    if (!L.faithful() || L.order() != l) continue;
                    auto stab = tail_stabilizer(L);
                    std::set<std::pair<Residue, Residue>> orbit;
                    for (const auto& g : tail_automorphisms(r)) {
                        auto x = tail_act(g, L);
                        orbit.insert({x.k1, x.k2});
                    }
                    CHECK(orbit.size() * (stab.size() + 1) == static_cast<std::size_t>(2 * r));
                    for (const auto& g : stab) found.emplace_back(l, r, k1, k2, g.a1, g.a2);
                }
        }
    using T = std::tuple<Residue, Residue, Residue, Residue, Residue, Residue>;
    std::vector<T> expected{{1, 1, 0, 0, 1, 0}, {2, 1, 1, 0, 1, 0}, {2, 2, 0, 1, 1, 0},
                            {2, 2, 1, 1, 1, 0}, {4, 2, 1, 1, 1, 1}, {4, 2, 3, 1, 1, 1}};
    CHECK(found == expected);
}
