#include "ghostlab/modular.hpp"

#include <cstdlib>
#include <numeric>

namespace ghostlab {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("GHOSTLAB_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(std::string("GHOSTLAB_BUDGET is not a number: ") + env);
        }
    }
    return kDefaultBudget;
}

Residue mod(Residue x, Residue n) {
    Residue r = x % n;
    return r < 0 ? r + n : r;
}

std::optional<Residue> inverse_mod(Residue a, Residue n) {
    if (n == 1) return Residue{0};
    Residue old_r = mod(a, n), r = n;
    Residue old_s = 1, s = 0;
    while (r != 0) {
        Residue q = old_r / r;
        Residue t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) return std::nullopt;
    return mod(old_s, n);
}

std::vector<PrimePower> factorize(Residue n) {
    if (n < 1) throw Error("cannot factor non-positive integer " + std::to_string(n));
    std::vector<PrimePower> out;
    for (Residue p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
            pp.power *= p;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

bool is_prime(Residue n) {
    if (n < 2) return false;
    for (Residue d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int valuation_of(Residue n, Residue p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Residue ipow(Residue base, int exp) {
    Residue out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

Residue additive_order(Residue x, Residue n) {
    return n / std::gcd(mod(x, n), n);
}

}  // namespace ghostlab
