#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghostlab {

/// Residues and moduli. All residues handed out by the library are
/// normalized to [0, n).
using Residue = std::int64_t;

/// Base class for every error the library reports for bad input data.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive scan would exceed its candidate budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t scanned)
        : Error(what), scanned_(scanned) {}
    std::uint64_t scanned() const noexcept { return scanned_; }

private:
    std::uint64_t scanned_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Default oracle budget, honouring the GHOSTLAB_BUDGET environment variable.
std::uint64_t default_budget();

Residue mod(Residue x, Residue n);

std::optional<Residue> inverse_mod(Residue a, Residue n);

struct PrimePower {
    Residue prime = 1;
    int exponent = 0;
    Residue power = 1;  // prime^exponent

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes ascending.
std::vector<PrimePower> factorize(Residue n);

bool is_prime(Residue n);

/// Exponent of p in n (n != 0).
int valuation_of(Residue n, Residue p);

Residue ipow(Residue base, int exp);

/// Additive order of x in Z/n.
Residue additive_order(Residue x, Residue n);

}  // namespace ghostlab
