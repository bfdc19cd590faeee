#pragma once

#include "ghostlab/modular.hpp"

#include <vector>

namespace ghostlab {

/// Element (k1, k2) of Z/l ⊕ Z/r, the l-torsion of the Picard group of an
/// elliptic tail with a stabiliser of order r at its node.
struct TailLineBundle {
    Residue l = 1;
    Residue r = 1;
    Residue k1 = 0;  // mod l
    Residue k2 = 0;  // mod r

    TailLineBundle() = default;
    /// Throws Error unless r divides l.
    TailLineBundle(Residue l_, Residue r_, Residue k1_, Residue k2_);

    /// Smallest t >= 1 with t·(k1, k2) = 0.
    Residue order() const;
    bool faithful() const;

    friend bool operator==(const TailLineBundle&, const TailLineBundle&) = default;
};

/// (a1, a2) ∈ Z/2 ⊕ Z/r: the involution exponent and the ghost exponent.
struct TailAutomorphism {
    Residue a1 = 0;  // mod 2
    Residue a2 = 0;  // mod r

    bool is_identity() const { return a1 == 0 && a2 == 0; }
    friend bool operator==(const TailAutomorphism&, const TailAutomorphism&) = default;
    friend auto operator<=>(const TailAutomorphism&, const TailAutomorphism&) = default;
};

/// ((-1)^{a1}k1 + a2·k2·(l/r), (-1)^{a1}k2).
TailLineBundle tail_act(const TailAutomorphism& g, const TailLineBundle& L);

/// The automorphism acting as g after h. With u = (-1)^{a1}a2 the group is
/// Z/2 ⊕ Z/r; in (a1, a2) coordinates the law is
/// (a1 + b1, (-1)^{b1}a2 + (-1)^{a1}b2).
TailAutomorphism compose(const TailAutomorphism& g, const TailAutomorphism& h, Residue r);

/// All 2r automorphisms, identity first.
std::vector<TailAutomorphism> tail_automorphisms(Residue r);

/// Nontrivial automorphisms fixing L, ascending. Throws Error unless L is
/// faithful of order exactly l.
std::vector<TailAutomorphism> tail_stabilizer(const TailLineBundle& L);

}  // namespace ghostlab
