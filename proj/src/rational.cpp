#include "ghostlab/rational.hpp"

#include "ghostlab/modular.hpp"

namespace ghostlab {

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const BigInt& n) { return n.str(); }

Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        if (q == 0) throw Error("zero denominator in rational '" + text + "'");
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error("malformed rational '" + text + "'");
    }
}

BigInt big_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace ghostlab
