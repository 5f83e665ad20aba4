#ifndef EULERIAN_RATIONAL_HPP
#define EULERIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "eulerian/errors.hpp"

namespace eulerian {

using Integer = mpz_class;

// mpq_class keeps every value in lowest terms with a positive denominator,
// and zero as 0/1, so structural equality is value equality.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_value(const Rational& r) { return abs(r); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Parses "p", "p/q", "-p/q". Rejects anything else, including q = 0.
inline Rational parse_rational(std::string_view text) {
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    return make_rational(Integer(n), Integer(std::string(den)));
}

inline Integer parse_integer(std::string_view text) {
    Rational r = parse_rational(text);
    if (r.get_den() != 1 || text.find('/') != std::string_view::npos)
        throw DomainError("malformed integer: '" + std::string(text) + "'");
    return r.get_num();
}

inline Integer pow_integer(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace eulerian

#endif
