#ifndef EULERIAN_POLYNOMIAL_HPP
#define EULERIAN_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/errors.hpp"
#include "eulerian/rational.hpp"

namespace eulerian {

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// is the empty vector and has degree `kZeroDegree`.
class Polynomial {
public:
    static constexpr long kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    /// c * x^k
    static Polynomial monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    static Polynomial x() { return monomial(1, 1); }

    /// (x + a)^k
    static Polynomial linear_power(const Rational& a, std::size_t k) {
        std::vector<Rational> v(k + 1);
        Rational power = 1;
        for (std::size_t i = 0; i <= k; ++i) {
            // coefficient of x^(k-i) is C(k, i) a^i
            v[k - i] = Rational(binomial(k, i)) * power;
            power *= a;
        }
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero past the degree.
    const Rational& operator[](std::size_t i) const noexcept {
        static const Rational zero = 0;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const Rational& leading() const {
        if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        std::vector<Rational> out(lhs.size() + rhs.size() - 1);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (lhs.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    /// Multiplies by x^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Rational> v(k, Rational(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    /// Number of factors of x dividing this polynomial (zero for the zero polynomial).
    std::size_t trailing_zeros() const noexcept {
        std::size_t k = 0;
        while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
        return is_zero() ? 0 : k;
    }

    /// Divides by x^k; requires x^k | p.
    Polynomial shifted_down(std::size_t k) const {
        if (k > trailing_zeros() && !is_zero()) throw DomainError("shifted_down: x^k does not divide p");
        if (is_zero()) return {};
        return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial out = Polynomial::constant(1);
    Polynomial b = base;
    while (exponent) {
        if (exponent & 1u) out *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return out;
}

inline Polynomial derivative(const Polynomial& p) {
    if (p.size() <= 1) return {};
    std::vector<Rational> v(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

/// x^m p(1/x): the coefficient of x^i moves to x^(m-i).
inline Polynomial reciprocal(const Polynomial& p, long m) {
    if (m < p.degree() || m < 0)
        throw DomainError("reciprocal: m = " + std::to_string(m) + " is below degree " + std::to_string(p.degree()));
    if (p.is_zero()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < p.size(); ++i) v[static_cast<std::size_t>(m) - i] = p[i];
    return Polynomial(std::move(v));
}

struct EvenOddParts {
    Polynomial even;
    Polynomial odd;
};

/// The unique (E, O) with p(x) = E(x^2) + x O(x^2).
inline EvenOddParts even_odd_split(const Polynomial& p) {
    std::vector<Rational> e((p.size() + 1) / 2), o(p.size() / 2);
    for (std::size_t i = 0; i < p.size(); ++i) (i % 2 == 0 ? e[i / 2] : o[i / 2]) = p[i];
    return {Polynomial(std::move(e)), Polynomial(std::move(o))};
}

/// e(x^2) + x o(x^2); inverse of even_odd_split.
inline Polynomial interleave(const Polynomial& e, const Polynomial& o) {
    std::size_t n = std::max(2 * e.size(), 2 * o.size() + 1);
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < e.size(); ++i) v[2 * i] = e[i];
    for (std::size_t i = 0; i < o.size(); ++i) v[2 * i + 1] = o[i];
    return Polynomial(std::move(v));
}

inline Rational evaluate(const Polynomial& p, const Rational& r) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc *= r;
        acc += p[i];
    }
    return acc;
}

inline int sign_at(const Polynomial& p, const Rational& r) { return sign(evaluate(p, r)); }

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

inline DivisionResult divide(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    if (num.degree() < den.degree()) return {{}, num};
    std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
    std::vector<Rational> quot(num.size() - den.size() + 1);
    const Rational& lead = den.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + den.size() - 1] / lead;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
    }
    rem.resize(den.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Quotient of an exact division; throws InvariantError if a remainder is left.
inline Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divide(num, den);
    if (!r.is_zero()) throw InvariantError("exact_quotient: nonzero remainder");
    return q;
}

inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

/// Positive rational c such that p / c has coprime integer coefficients.
inline Rational content(const Polynomial& p) {
    if (p.is_zero()) return 0;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        num_gcd = gcd(num_gcd, Integer(c.get_num()));
        den_lcm = lcm(den_lcm, Integer(c.get_den()));
    }
    return make_rational(num_gcd, den_lcm);
}

/// p / content(p): integer coefficients, same sign pattern as p.
inline Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / content(p));
}

/// Monic greatest common divisor. The Euclidean loop runs on primitive parts
/// so that coefficient sizes stay bounded by the inputs.
inline Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
    Polynomial a = primitive_part(p), b = primitive_part(q);
    while (!b.is_zero()) {
        Polynomial r = divide(a, b).remainder;
        a = std::move(b);
        b = primitive_part(r);
    }
    return monic(a);
}

inline std::string to_string(const Polynomial& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rational& c = p[i];
        if (c == 0) continue;
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (i == 0 || !unit) out += to_string(mag);
        if (i >= 1) {
            if (!unit) out += "*";
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

} // namespace eulerian

#endif
