#include "ghostlab/tails.hpp"

#include <numeric>

namespace ghostlab {

TailLineBundle::TailLineBundle(Residue l_, Residue r_, Residue k1_, Residue k2_) : l(l_), r(r_) {
    if (l < 1 || r < 1 || l % r != 0)
        throw Error("tail bundle: r = " + std::to_string(r) + " does not divide l = " + std::to_string(l));
    k1 = mod(k1_, l);
    k2 = mod(k2_, r);
}

Residue TailLineBundle::order() const {
    for (Residue t = 1;; ++t)
        if (mod(t * k1, l) == 0 && mod(t * k2, r) == 0) return t;
}

bool TailLineBundle::faithful() const { return std::gcd(k2, r) == 1; }

TailLineBundle tail_act(const TailAutomorphism& g, const TailLineBundle& L) {
    if (L.r < 1 || L.l % L.r != 0) throw Error("tail action: r does not divide l");
    const Residue sign = g.a1 % 2 == 0 ? 1 : -1;
    const Residue shift = mod(g.a2 * L.k2, L.r) * (L.l / L.r);
    return TailLineBundle(L.l, L.r, sign * L.k1 + shift, sign * L.k2);
}

TailAutomorphism compose(const TailAutomorphism& g, const TailAutomorphism& h, Residue r) {
    const Residue sg = g.a1 % 2 == 0 ? 1 : -1;
    const Residue sh = h.a1 % 2 == 0 ? 1 : -1;
    return {mod(g.a1 + h.a1, 2), mod(sh * g.a2 + sg * h.a2, r)};
}

std::vector<TailAutomorphism> tail_automorphisms(Residue r) {
    std::vector<TailAutomorphism> out;
    for (Residue a1 = 0; a1 < 2; ++a1)
        for (Residue a2 = 0; a2 < r; ++a2) out.push_back({a1, a2});
    return out;
}

std::vector<TailAutomorphism> tail_stabilizer(const TailLineBundle& L) {
    if (!L.faithful()) throw Error("tail stabilizer: bundle is not faithful (gcd(k2, r) != 1)");
    if (L.order() != L.l)
        throw Error("tail stabilizer: bundle has order " + std::to_string(L.order()) + ", expected " +
                    std::to_string(L.l));
    std::vector<TailAutomorphism> out;
    for (const auto& g : tail_automorphisms(L.r))
        if (!g.is_identity() && tail_act(g, L) == L) out.push_back(g);
    return out;
}

}  // namespace ghostlab
