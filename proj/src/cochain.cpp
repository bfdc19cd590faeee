#include "ghostlab/cochain.hpp"

#include <limits>

namespace ghostlab {
namespace {

void check_modulus(Residue n) {
    if (n < 1) throw CochainError("modulus must be positive, got " + std::to_string(n));
}

void require_same(Residue a, Residue b) {
    if (a != b) throw CochainError("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Cochain0::Cochain0(Residue n, std::vector<Residue> vals) : modulus(n), values(std::move(vals)) {
    check_modulus(n);
    for (auto& x : values) x = mod(x, n);
}

Cochain0 Cochain0::zero(const DualGraph& graph, Residue n) {
    return Cochain0(n, std::vector<Residue>(graph.vertex_count(), 0));
}

Cochain1::Cochain1(Residue n, std::vector<Residue> vals) : modulus(n), values(std::move(vals)) {
    check_modulus(n);
    for (auto& x : values) x = mod(x, n);
}

Cochain1 Cochain1::zero(const DualGraph& graph, Residue n) {
    return Cochain1(n, std::vector<Residue>(graph.edge_count(), 0));
}

bool Cochain1::is_zero() const {
    for (auto x : values)
        if (x != 0) return false;
    return true;
}

Cochain1 Cochain1::operator+(const Cochain1& other) const {
    require_same(modulus, other.modulus);
    Cochain1 out = *this;
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = mod(values[i] + other.values[i], modulus);
    return out;
}

Cochain1 Cochain1::operator-() const { return scaled(-1); }

Cochain1 Cochain1::scaled(Residue k) const {
    Cochain1 out = *this;
    for (auto& x : out.values) x = mod(x * k, modulus);
    return out;
}

Cochain1 delta(const DualGraph& graph, const Cochain0& a) {
    std::vector<Residue> out(graph.edge_count());
    for (int e = 0; e < graph.edge_count(); ++e)
        out[e] = a.values.at(graph.edge(e).head) - a.values.at(graph.edge(e).tail);
    return Cochain1(a.modulus, std::move(out));
}

Cochain0 partial(const DualGraph& graph, const Cochain1& b) {
    std::vector<Residue> out(graph.vertex_count(), 0);
    for (int e = 0; e < graph.edge_count(); ++e) {
        out[graph.edge(e).head] += b.values.at(e);
        out[graph.edge(e).tail] -= b.values.at(e);
    }
    return Cochain0(b.modulus, std::move(out));
}

Residue pairing0(const Cochain0& a1, const Cochain0& a2) {
    require_same(a1.modulus, a2.modulus);
    Residue s = 0;
    for (std::size_t i = 0; i < a1.values.size(); ++i) s = mod(s + a1.values[i] * a2.values.at(i), a1.modulus);
    return s;
}

Residue pairing1(const Cochain1& b1, const Cochain1& b2) {
    require_same(b1.modulus, b2.modulus);
    Residue s = 0;
    for (std::size_t i = 0; i < b1.values.size(); ++i) s = mod(s + b1.values[i] * b2.values.at(i), b1.modulus);
    return s;
}

Residue circuit_value(const Cochain1& b, const Circuit& circuit) {
    Residue s = 0;
    for (auto e : circuit.edges) s += e.reversed ? -b.values.at(e.edge) : b.values.at(e.edge);
    return mod(s, b.modulus);
}

Cochain1 circuit_cochain(const DualGraph& graph, const Circuit& circuit, Residue n) {
    auto out = Cochain1::zero(graph, n);
    for (auto e : circuit.edges) out.values[e.edge] = mod(out.values[e.edge] + (e.reversed ? -1 : 1), n);
    return out;
}

Cochain1 cut_cochain(const DualGraph& graph, const Cut& cut, Residue n) {
    auto vals = cut.edge_values(graph);
    return Cochain1(n, std::vector<Residue>(vals.begin(), vals.end()));
}

Cochain0 indicator(const std::vector<bool>& subset, Residue n) {
    std::vector<Residue> vals(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) vals[i] = subset[i] ? 1 : 0;
    return Cochain0(n, std::move(vals));
}

bool in_im_delta(const Cochain1& b, const std::vector<Circuit>& circuits) {
    for (const auto& c : circuits)
        if (circuit_value(b, c) != 0) return false;
    return true;
}

bool in_im_delta(const DualGraph& graph, const Cochain1& b) { return in_im_delta(b, fundamental_circuits(graph)); }

bool in_ker_partial(const DualGraph& graph, const Cochain1& b) {
    for (auto x : partial(graph, b).values)
        if (x != 0) return false;
    return true;
}

KernelEnumerator::KernelEnumerator(const DualGraph& graph, Residue n) : modulus_(n) {
    check_modulus(n);
    for (const auto& c : fundamental_circuits(graph)) basis_.push_back(circuit_cochain(graph, c, n));
    coeffs_.assign(basis_.size(), 0);
    size_ = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (size_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
            size_ = 0;
            break;
        }
        size_ *= static_cast<std::uint64_t>(n);
    }
    if (basis_.empty()) basis_.push_back(Cochain1::zero(graph, n));  // tree: only the zero cochain
}

void KernelEnumerator::reset() {
    std::fill(coeffs_.begin(), coeffs_.end(), 0);
    started_ = false;
    done_ = false;
}

bool KernelEnumerator::next(Cochain1& out) {
    if (done_) return false;
    if (started_) {
        // Odometer, last coefficient fastest.
        std::size_t i = coeffs_.size();
        while (i > 0) {
            --i;
            if (++coeffs_[i] < modulus_) break;
            coeffs_[i] = 0;
            if (i == 0) {
                done_ = true;
                return false;
            }
        }
        if (coeffs_.empty()) {
            done_ = true;
            return false;
        }
    }
    started_ = true;
    out = Cochain1(modulus_, std::vector<Residue>(basis_.front().values.size(), 0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out = out + basis_[i].scaled(coeffs_[i]);
    return true;
}

std::vector<Cochain1> enumerate_ker_partial(const DualGraph& graph, Residue n) {
    std::vector<Cochain1> out;
    KernelEnumerator it(graph, n);
    Cochain1 b;
    while (it.next(b)) out.push_back(b);
    return out;
}

Cochain1 blowup1(const Cochain1& c, const DualGraph& source, const Contraction& contraction) {
    auto out = Cochain1::zero(source, c.modulus);
    for (std::size_t q = 0; q < contraction.edge_map.size(); ++q) out.values[contraction.edge_map[q]] = c.values.at(q);
    return out;
}

Cochain0 blowup0(const Cochain0& a, const Contraction& contraction) {
    std::vector<Residue> vals(contraction.vertex_map.size());
    for (std::size_t v = 0; v < vals.size(); ++v) vals[v] = a.values.at(contraction.vertex_map[v]);
    return Cochain0(a.modulus, std::move(vals));
}

Cochain0 contract0(const Cochain0& a, const Contraction& contraction) {
    const int q = contraction.quotient.vertex_count();
    std::vector<Residue> vals(q, 0);
    std::vector<int> seen(q, -1);
    for (std::size_t v = 0; v < contraction.vertex_map.size(); ++v) {
        int target = contraction.vertex_map[v];
        if (seen[target] < 0) {
            seen[target] = static_cast<int>(v);
            vals[target] = a.values.at(v);
        } else if (vals[target] != a.values.at(v)) {
            throw CochainError("not ν-compatible: 0-cochain differs inside contracted vertex " +
                               contraction.quotient.vertex(target).id);
        }
    }
    return Cochain0(a.modulus, std::move(vals));
}

}  // namespace ghostlab
