#ifndef EULERIAN_GENERATORS_HPP
#define EULERIAN_GENERATORS_HPP

#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/errors.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/rational.hpp"

// Eulerian polynomial families of the Coxeter groups A, B and D.
//
// Index convention: eulerian_a(m) is the type A_m polynomial, the descent
// generating function of the symmetric group on m + 1 letters. B_n, D_n and
// the half polynomials are indexed by rank n, i.e. signed permutations of n
// letters.

namespace eulerian {

enum class Family { A, B, D, AffineB, BPlus, BMinus, DPlus, DMinus };

inline constexpr Family kAllFamilies[] = {Family::A,      Family::B,     Family::D,      Family::AffineB,
                                          Family::BPlus,  Family::BMinus, Family::DPlus, Family::DMinus};

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::AffineB: return "AffineB";
    case Family::BPlus: return "BPlus";
    case Family::BMinus: return "BMinus";
    case Family::DPlus: return "DPlus";
    case Family::DMinus: return "DMinus";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies)
        if (family_name(f) == name) return f;
    return std::nullopt;
}

/// Smallest admissible rank: 0 for A (Coxeter index), 1 for the B families,
/// 2 for the D families.
inline long min_rank(Family f) {
    switch (f) {
    case Family::A: return 0;
    case Family::B:
    case Family::AffineB:
    case Family::BPlus:
    case Family::BMinus: return 1;
    case Family::D:
    case Family::DPlus:
    case Family::DMinus: return 2;
    }
    return 0;
}

struct FamilyId {
    Family tag;
    long rank;

    FamilyId(Family t, long n) : tag(t), rank(n) {
        if (n < min_rank(t))
            throw DomainError(std::string(family_name(t)) + " needs rank >= " + std::to_string(min_rank(t)) +
                              ", got " + std::to_string(n));
    }
};

namespace detail {

inline void require_rank(const char* what, long n, long lo) {
    if (n < lo) throw DomainError(std::string(what) + ": rank " + std::to_string(n) + " < " + std::to_string(lo));
}

inline Polynomial power_of_two(long n) { return Polynomial::constant(Rational(pow_integer(2, static_cast<unsigned long>(n)))); }

class EulerianACache {
public:
    Polynomial get(long m) {
        std::lock_guard lock(mutex_);
        if (table_.empty()) table_.push_back(Polynomial::constant(1));
        while (static_cast<long>(table_.size()) <= m) {
            // A_j = (j x + 1) A_{j-1} - x (x - 1) A'_{j-1}
            long j = static_cast<long>(table_.size());
            const Polynomial& prev = table_.back();
            Polynomial next = Polynomial{1, j} * prev - Polynomial{0, -1, 1} * derivative(prev);
            table_.push_back(std::move(next));
        }
        return table_[static_cast<std::size_t>(m)];
    }

private:
    std::mutex mutex_;
    std::vector<Polynomial> table_;
};

inline EulerianACache& eulerian_a_cache() {
    static EulerianACache cache;
    return cache;
}

} // namespace detail

/// Type A_m Eulerian polynomial (m + 1 letters), from the derivative recurrence.
inline Polynomial eulerian_a(long m) {
    detail::require_rank("eulerian_a", m, 0);
    return detail::eulerian_a_cache().get(m);
}

/// Type B_n: the even part of (x + 1)^(n + 1) A_{n-1}(x). The odd part must be
/// 2^n A_{n-1}; a mismatch is reported as an InvariantError.
inline Polynomial eulerian_b(long n) {
    detail::require_rank("eulerian_b", n, 1);
    Polynomial a = eulerian_a(n - 1);
    auto [even, odd] = even_odd_split(Polynomial::linear_power(1, static_cast<std::size_t>(n + 1)) * a);
    if (odd != detail::power_of_two(n) * a)
        throw InvariantError("eulerian_b: odd part of (x+1)^(n+1) A_{n-1} is not 2^n A_{n-1}");
    return even;
}

/// Type D_n = B_n - n 2^(n-1) x A_{n-2}, n >= 2.
inline Polynomial eulerian_d(long n) {
    detail::require_rank("eulerian_d", n, 2);
    Rational scale = Rational(n) * Rational(pow_integer(2, static_cast<unsigned long>(n - 1)));
    return eulerian_b(n) - (scale * eulerian_a(n - 2)).shifted_up(1);
}

/// Affine type B: 2x (2^n A_{n-1} - n B_{n-1}), with B_0 = 1.
inline Polynomial affine_b(long n) {
    detail::require_rank("affine_b", n, 1);
    Polynomial b_prev = n == 1 ? Polynomial::constant(1) : eulerian_b(n - 1);
    Polynomial inner = detail::power_of_two(n) * eulerian_a(n - 1) - Rational(n) * b_prev;
    return (Rational(2) * inner).shifted_up(1);
}

struct HalfPolynomials {
    Polynomial plus;  ///< last entry of the window positive
    Polynomial minus; ///< last entry negative
};

/// B_n^+ and B_n^- from (x + 1)^n A_{n-1}(x) = B^+(x^2) + B^-(x^2) / x.
inline HalfPolynomials half_b(long n) {
    detail::require_rank("half_b", n, 1);
    auto [even, odd] = even_odd_split(Polynomial::linear_power(1, static_cast<std::size_t>(n)) * eulerian_a(n - 1));
    HalfPolynomials h{std::move(even), odd.shifted_up(1)};
    if (h.plus + h.minus != eulerian_b(n)) throw InvariantError("half_b: B^+ + B^- != B_n");
    if (h.minus != reciprocal(h.plus, n)) throw InvariantError("half_b: B^- != x^n B^+(1/x)");
    return h;
}

/// D_n^+ and D_n^- from
/// (x + 1)^n A_{n-1} - n x (x + 1)^(n-1) A_{n-2} = D^+(x^2) + D^-(x^2) / x.
inline HalfPolynomials half_d(long n) {
    detail::require_rank("half_d", n, 2);
    const auto un = static_cast<std::size_t>(n);
    Polynomial padded = Polynomial::linear_power(1, un) * eulerian_a(n - 1) -
                        (Rational(n) * Polynomial::linear_power(1, un - 1) * eulerian_a(n - 2)).shifted_up(1);
    auto [even, odd] = even_odd_split(padded);
    HalfPolynomials h{std::move(even), odd.shifted_up(1)};
    if (h.plus + h.minus != eulerian_d(n)) throw InvariantError("half_d: D^+ + D^- != D_n");
    if (h.minus != reciprocal(h.plus, n)) throw InvariantError("half_d: D^- != x^n D^+(1/x)");
    if (Rational(2) * (h.plus.shifted_up(1) + h.minus) != affine_b(n))
        throw InvariantError("half_d: 2 (x D^+ + D^-) != affine B_n");
    return h;
}

inline Polynomial generate(const FamilyId& id) {
    switch (id.tag) {
    case Family::A: return eulerian_a(id.rank);
    case Family::B: return eulerian_b(id.rank);
    case Family::D: return eulerian_d(id.rank);
    case Family::AffineB: return affine_b(id.rank);
    case Family::BPlus: return half_b(id.rank).plus;
    case Family::BMinus: return half_b(id.rank).minus;
    case Family::DPlus: return half_d(id.rank).plus;
    case Family::DMinus: return half_d(id.rank).minus;
    }
    throw DomainError("unknown family");
}

/// Euler zigzag numbers E_0..E_n.
struct ZigzagTable {
    std::vector<Integer> values;
};

/// Seidel-Entringer boustrophedon: each row is the running sum of the
/// previous row read backwards, and E_m is the last entry of row m.
inline ZigzagTable zigzag(long n) {
    detail::require_rank("zigzag", n, 0);
    ZigzagTable t;
    t.values.push_back(1);
    std::vector<Integer> row{1};
    for (long m = 1; m <= n; ++m) {
        std::vector<Integer> next;
        next.reserve(row.size() + 1);
        next.push_back(0);
        for (auto it = row.rbegin(); it != row.rend(); ++it) next.push_back(next.back() + *it);
        row = std::move(next);
        t.values.push_back(row.back());
    }
    return t;
}

} // namespace eulerian

#endif
