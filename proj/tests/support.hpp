#pragma once

#include "ghostlab/ghostlab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace testing {

using namespace ghostlab;

inline DualGraph make_graph(std::vector<std::pair<std::string, int>> vertices,
                            std::vector<std::tuple<std::string, std::string, std::string>> edges) {
    GraphSpec spec;
    for (auto& [id, g] : vertices) spec.vertices.push_back({id, g});
    for (auto& [id, t, h] : edges) spec.edges.push_back({id, t, h});
    return DualGraph::from_spec(spec);
}

inline DualGraph banana(int g1 = 0, int g2 = 0) {
    return make_graph({{"v1", g1}, {"v2", g2}}, {{"e1", "v1", "v2"}, {"e2", "v1", "v2"}});
}

inline DualGraph triangle() {
    return make_graph({{"v1", 0}, {"v2", 0}, {"v3", 0}},
                      {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v1"}});
}

inline DualGraph single_loop(int genus = 0) { return make_graph({{"v", genus}}, {{"e1", "v", "v"}}); }

inline DualGraph path4() {
    return make_graph({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}},
                      {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "d"}});
}

/// Visits every vector in {0..radix-1}^length, last coordinate fastest.
inline void odometer(int length, Residue radix, const std::function<void(const std::vector<Residue>&)>& fn) {
    std::vector<Residue> x(length, 0);
    for (;;) {
        fn(x);
        int i = length - 1;
        while (i >= 0 && x[i] == radix - 1) x[i--] = 0;
        if (i < 0) return;
        ++x[i];
    }
}

// Independent oracles: plain loops over edge endpoints, no spanning trees or circuits.

inline std::vector<Residue> naive_delta(const DualGraph& g, const std::vector<Residue>& a, Residue n) {
    std::vector<Residue> out;
    for (const auto& e : g.edges()) out.push_back(((a[e.head] - a[e.tail]) % n + n) % n);
    return out;
}

inline std::vector<Residue> naive_partial(const DualGraph& g, const std::vector<Residue>& b, Residue n) {
    std::vector<Residue> out(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        out[e.head] = (out[e.head] + b[i]) % n;
        out[e.tail] = ((out[e.tail] - b[i]) % n + n) % n;
    }
    return out;
}

inline bool brute_in_image(const DualGraph& g, const std::vector<Residue>& b, Residue n) {
    bool found = false;
    odometer(g.vertex_count(), n, [&](const std::vector<Residue>& a) {
        if (!found && naive_delta(g, a, n) == b) found = true;
    });
    return found;
}

inline std::vector<std::vector<Residue>> brute_kernel(const DualGraph& g, Residue n) {
    std::vector<std::vector<Residue>> out;
    const std::vector<Residue> zero(g.vertex_count(), 0);
    odometer(g.edge_count(), n, [&](const std::vector<Residue>& b) {
        if (naive_partial(g, b, n) == zero) out.push_back(b);
    });
    return out;
}

/// Ghosts via orthogonality with the whole of ker ∂ (found by brute force):
/// b̃(e) = (M(e)/gcd(M(e), ℓ))·ã(e) must pair to zero with every kernel element.
inline std::vector<std::vector<Residue>> brute_ghosts(const DualGraph& g, const std::vector<Residue>& M, Residue l) {
    const auto kernel = brute_kernel(g, l);
    std::vector<Residue> step(M.size()), mult(M.size());
    for (std::size_t e = 0; e < M.size(); ++e) {
        Residue d = std::gcd(M[e] % l, l);
        step[e] = d;
        mult[e] = (M[e] % l) / d;
    }
    std::vector<Residue> radix(M.size());
    for (std::size_t e = 0; e < M.size(); ++e) radix[e] = l / step[e];
    std::vector<std::vector<Residue>> out;
    std::vector<Residue> t(M.size(), 0);
    for (;;) {
        std::vector<Residue> a(M.size()), b(M.size());
        for (std::size_t e = 0; e < M.size(); ++e) {
            a[e] = t[e] * step[e];
            b[e] = mult[e] * a[e] % l;
        }
        bool ok = true;
        for (const auto& k : kernel) {
            Residue s = 0;
            for (std::size_t e = 0; e < M.size(); ++e) s = (s + b[e] * k[e]) % l;
            if (s != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(a);
        int i = static_cast<int>(M.size()) - 1;
        while (i >= 0 && t[i] == radix[i] - 1) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

inline std::map<Residue, int> order_histogram(const std::vector<SymmetricFunction>& elements) {
    std::map<Residue, int> h;
    for (const auto& a : elements) ++h[element_order(a)];
    return h;
}

/// Element-order histogram of ⊕ Z/d over the given divisors.
inline std::map<Residue, int> order_histogram(const std::vector<Residue>& divisors) {
    std::map<Residue, int> h;
    std::vector<Residue> x(divisors.size(), 0);
    for (;;) {
        Residue ord = 1;
        for (std::size_t i = 0; i < divisors.size(); ++i) ord = std::lcm(ord, divisors[i] / std::gcd(x[i], divisors[i]));
        ++h[ord];
        int i = static_cast<int>(divisors.size()) - 1;
        while (i >= 0 && x[i] == divisors[i] - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return h;
}

inline Rational frac_sum(const std::vector<Residue>& a, Residue l) {
    Rational s = 0;
    for (auto x : a) s += Rational(((x % l) + l) % l, l);
    return s;
}

}  // namespace testing
