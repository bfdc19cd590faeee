#pragma once

#include "ghostlab/graph.hpp"

#include <functional>
#include <vector>

namespace ghostlab {

class CochainError : public Error {
public:
    using Error::Error;
};

/// Z/n-valued function on vertices.
struct Cochain0 {
    Residue modulus = 1;
    std::vector<Residue> values;

    Cochain0() = default;
    Cochain0(Residue n, std::vector<Residue> vals);
    static Cochain0 zero(const DualGraph& graph, Residue n);

    friend bool operator==(const Cochain0&, const Cochain0&) = default;
};

/// Antisymmetric Z/n-valued function on oriented edges, stored on the
/// stored orientation of each edge; the reverse orientation carries the
/// negated value.
struct Cochain1 {
    Residue modulus = 1;
    std::vector<Residue> values;

    Cochain1() = default;
    Cochain1(Residue n, std::vector<Residue> vals);
    static Cochain1 zero(const DualGraph& graph, Residue n);

    Residue at(OrientedEdge e) const { return e.reversed ? mod(-values[e.edge], modulus) : values[e.edge]; }
    bool is_zero() const;

    Cochain1 operator+(const Cochain1& other) const;
    Cochain1 operator-() const;
    Cochain1 scaled(Residue k) const;

    friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

/// (δa)(e) = a(head e) - a(tail e).
Cochain1 delta(const DualGraph& graph, const Cochain0& a);

/// (∂b)(v) = sum of b over oriented edges with head v.
Cochain0 partial(const DualGraph& graph, const Cochain1& b);

Residue pairing0(const Cochain0& a1, const Cochain0& a2);

/// Half the sum over both orientations, i.e. the sum over stored ones.
Residue pairing1(const Cochain1& b1, const Cochain1& b2);

Residue circuit_value(const Cochain1& b, const Circuit& circuit);

/// Characteristic cochain of a circuit: +1 per forward traversal, -1 per reverse.
Cochain1 circuit_cochain(const DualGraph& graph, const Circuit& circuit, Residue n);

Cochain1 cut_cochain(const DualGraph& graph, const Cut& cut, Residue n);

/// Indicator 0-cochain of a vertex subset.
Cochain0 indicator(const std::vector<bool>& subset, Residue n);

/// Annihilated by every fundamental circuit.
bool in_im_delta(const DualGraph& graph, const Cochain1& b);
bool in_im_delta(const Cochain1& b, const std::vector<Circuit>& circuits);

bool in_ker_partial(const DualGraph& graph, const Cochain1& b);

/// Restartable stream over ker ∂ mod n: all Z/n-combinations of the
/// fundamental circuits, coefficient vectors in lexicographic order.
class KernelEnumerator {
public:
    KernelEnumerator(const DualGraph& graph, Residue n);

    bool next(Cochain1& out);
    void reset();
    /// n^b1, or 0 when it does not fit in 64 bits.
    std::uint64_t size() const { return size_; }
    const std::vector<Residue>& coefficients() const { return coeffs_; }

private:
    Residue modulus_;
    std::vector<Cochain1> basis_;
    std::vector<Residue> coeffs_;
    bool started_ = false;
    bool done_ = false;
    std::uint64_t size_ = 0;
};

std::vector<Cochain1> enumerate_ker_partial(const DualGraph& graph, Residue n);

/// Extension by zero from the quotient to the source graph.
Cochain1 blowup1(const Cochain1& c, const DualGraph& source, const Contraction& contraction);

/// Pullback of a quotient 0-cochain along the vertex map.
Cochain0 blowup0(const Cochain0& a, const Contraction& contraction);

/// Descends a 0-cochain constant on contracted pieces; throws CochainError
/// ("not ν-compatible") otherwise.
Cochain0 contract0(const Cochain0& a, const Contraction& contraction);

}  // namespace ghostlab
