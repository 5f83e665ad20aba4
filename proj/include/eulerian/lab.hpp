#ifndef EULERIAN_LAB_HPP
#define EULERIAN_LAB_HPP

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/errors.hpp"
#include "eulerian/generators.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/stability.hpp"

// Executable checks of the Eulerian identities and stability statements,
// plus bracketing tools for the two open threshold conjectures.

namespace eulerian::lab {

struct Failure {
    long rank;
    std::string description;
};

struct VerificationReport {
    std::string check_id;
    long rank_lo = 0;
    long rank_hi = 0;
    long checks = 0;
    std::vector<Failure> failures{};
    std::vector<std::string> notes{}; ///< observations that carry no verdict
    std::chrono::duration<double> elapsed{0};

    bool passed() const noexcept { return failures.empty(); }

    void check(bool ok, long rank, std::string description) {
        ++checks;
        if (!ok) failures.push_back({rank, std::move(description)});
    }

    VerificationReport& absorb(VerificationReport other) {
        checks += other.checks;
        for (auto& f : other.failures) failures.push_back(std::move(f));
        for (auto& n : other.notes) notes.push_back(std::move(n));
        elapsed += other.elapsed;
        return *this;
    }
};

namespace detail {

class Stopwatch {
public:
    explicit Stopwatch(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~Stopwatch() { report_.elapsed = std::chrono::steady_clock::now() - start_; }
    Stopwatch(const Stopwatch&) = delete;
    Stopwatch& operator=(const Stopwatch&) = delete;

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_;
};

inline Polynomial x_plus_one_pow(long k) { return Polynomial::linear_power(1, static_cast<std::size_t>(k)); }

/// p(x^2)
inline Polynomial at_x_squared(const Polynomial& p) { return interleave(p, {}); }

/// Runs `body`, turning exceptions into recorded failures.
inline void guarded(VerificationReport& report, long rank, const std::string& what, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report.check(false, rank, what + ": " + e.what());
    }
}

} // namespace detail

/// (x + 1)^(n+1) A_{n-1} - n x (x + 1)^n A_{n-2}; its even part is D_n and its
/// odd part is affine B_n / (2x).
inline Polynomial padded_type_d(long n) {
    return detail::x_plus_one_pow(n + 1) * eulerian_a(n - 1) -
           (Rational(n) * detail::x_plus_one_pow(n) * eulerian_a(n - 2)).shifted_up(1);
}

/// P_n(x) = (x + 1) A_{n-1}(x) + k x A_{n-2}(x), n >= 2.
inline Polynomial stability_family(long n, const Rational& k) {
    if (n < 2) throw DomainError("stability_family needs n >= 2");
    return Polynomial{1, 1} * eulerian_a(n - 1) + (k * eulerian_a(n - 2)).shifted_up(1);
}

/// Every identity is checked by exact polynomial equality, with 1/x and
/// 1/(2x) cleared by multiplying through. Where possible the two sides come
/// from different constructions (e.g. D_n as D^+ + D^- versus B_n minus the
/// type A correction).
inline VerificationReport verify_identities(long n_max) {
    if (n_max < 2) throw DomainError("verify_identities needs n_max >= 2");
    VerificationReport report{"identities", 1, n_max};
    detail::Stopwatch sw(report);
    const Polynomial x = Polynomial::x();
    for (long n = 1; n <= n_max; ++n) {
        detail::guarded(report, n, "construction", [&] {
            const Rational two_n(pow_integer(2, static_cast<unsigned long>(n)));
            Polynomial a1 = eulerian_a(n - 1);
            Polynomial b = eulerian_b(n);
            auto hb = half_b(n);
            Polynomial bt = affine_b(n);

            // (x+1)^(n+1) A_{n-1} = 2^n x A_{n-1}(x^2) + B_n(x^2)
            report.check(detail::x_plus_one_pow(n + 1) * a1 ==
                             (two_n * detail::at_x_squared(a1)).shifted_up(1) + detail::at_x_squared(b),
                         n, "A-B split");
            // affine B_n = 2x (2^n A_{n-1} - n B_{n-1}), against the oracle-free
            // route through the even part of (x+1)^n A_{n-1}
            Polynomial b_prev = n == 1 ? Polynomial::constant(1) : half_b(n - 1).plus + half_b(n - 1).minus;
            report.check(bt == (Rational(2) * (two_n * a1 - Rational(n) * b_prev)).shifted_up(1), n, "affineB");
            // x (x+1)^n A_{n-1} = x B^+(x^2) + B^-(x^2)
            report.check((detail::x_plus_one_pow(n) * a1).shifted_up(1) ==
                             detail::at_x_squared(hb.plus).shifted_up(1) + detail::at_x_squared(hb.minus),
                         n, "half-B split");
            report.check(hb.minus == reciprocal(hb.plus, n), n, "half-B reciprocity");
            report.check(hb.plus + hb.minus == b, n, "B = B^+ + B^-");
            if (n < 2) return;

            Polynomial a2 = eulerian_a(n - 2);
            auto hd = half_d(n);
            Polynomial d = hd.plus + hd.minus;
            Rational scale = Rational(n) * Rational(pow_integer(2, static_cast<unsigned long>(n - 1)));
            // D_n = B_n - n 2^(n-1) x A_{n-2}
            report.check(d == b - (scale * a2).shifted_up(1), n, "D from B");
            // 2x * padded = 2x D_n(x^2) + affine B_n(x^2)
            report.check((Rational(2) * padded_type_d(n)).shifted_up(1) ==
                             (Rational(2) * detail::at_x_squared(d)).shifted_up(1) + detail::at_x_squared(bt),
                         n, "D-affineB split");
            report.check(Rational(2) * (hd.plus.shifted_up(1) + hd.minus) == bt, n, "affine B from half-D");
            // x [(x+1)^n A_{n-1} - n x (x+1)^(n-1) A_{n-2}] = x D^+(x^2) + D^-(x^2)
            Polynomial lhs = detail::x_plus_one_pow(n) * a1 - (Rational(n) * detail::x_plus_one_pow(n - 1) * a2).shifted_up(1);
            report.check(lhs.shifted_up(1) ==
                             detail::at_x_squared(hd.plus).shifted_up(1) + detail::at_x_squared(hd.minus),
                         n, "half-D split");
            report.check(hd.minus == reciprocal(hd.plus, n), n, "half-D reciprocity");
        });
    }
    return report;
}

/// D_n and affine B_n are real-rooted, D_n interlaces affine B_n, and both are
/// recovered from the even/odd split of the padded stable polynomial.
inline VerificationReport verify_main_theorem(long n) {
    if (n < 2) throw DomainError("verify_main_theorem needs n >= 2");
    VerificationReport report{"main-theorem", n, n};
    detail::Stopwatch sw(report);
    detail::guarded(report, n, "main theorem", [&] {
        Polynomial d = eulerian_d(n);
        Polynomial bt = affine_b(n);
        bool d_real = is_real_rooted(d), bt_real = is_real_rooted(bt);
        report.check(d_real, n, "D_n is not real-rooted");
        report.check(bt_real, n, "affine B_n is not real-rooted");
        if (d_real && bt_real) report.check(interlaces(d, bt), n, "D_n does not interlace affine B_n");

        Polynomial padded = padded_type_d(n);
        auto [even, odd] = even_odd_split(padded);
        report.check(even == d, n, "even part of padded polynomial != D_n");
        report.check((Rational(2) * odd).shifted_up(1) == bt, n, "2x * odd part of padded polynomial != affine B_n");
        report.check(hermite_biehler_weakly_stable(padded).verdict == Verdict::weakly_stable, n,
                     "padded polynomial fails the Hermite-Biehler test");
    });
    return report;
}

/// B_n^+ interlaces x^n B_n^+(1/x) (n >= 1) and D_n^+ interlaces
/// x^n D_n^+(1/x) (n >= 2); B_n and D_n are real-rooted.
inline VerificationReport verify_hyatt(long n) {
    if (n < 1) throw DomainError("verify_hyatt needs n >= 1");
    VerificationReport report{"half-interlacing", n, n};
    detail::Stopwatch sw(report);
    detail::guarded(report, n, "half interlacing", [&] {
        Polynomial bp = half_b(n).plus;
        report.check(interlaces(bp, reciprocal(bp, n)), n, "B_n^+ does not interlace x^n B_n^+(1/x)");
        report.check(is_real_rooted(eulerian_b(n)), n, "B_n is not real-rooted");
        if (n < 2) return;
        Polynomial dp = half_d(n).plus;
        report.check(interlaces(dp, reciprocal(dp, n)), n, "D_n^+ does not interlace x^n D_n^+(1/x)");
        report.check(is_real_rooted(eulerian_d(n)), n, "D_n is not real-rooted");
    });
    return report;
}

/// The k grid {-n, -n + 1/2, ..., hi}.
inline std::vector<Rational> half_step_grid(long n, const Rational& hi) {
    std::vector<Rational> ks;
    for (Rational k = -n; k <= hi; k += Rational(1, 2)) ks.push_back(k);
    return ks;
}

/// P_n = (x + 1) A_{n-1} + k x A_{n-2} is weakly Hurwitz stable for each k >= -n.
inline VerificationReport verify_stability_theorem(long n, const std::vector<Rational>& ks) {
    if (n < 2) throw DomainError("verify_stability_theorem needs n >= 2");
    for (const auto& k : ks)
        if (k < -n) throw DomainError("verify_stability_theorem: k = " + to_string(k) + " is below -n");
    VerificationReport report{"stability-theorem", n, n};
    detail::Stopwatch sw(report);
    for (const auto& k : ks) {
        detail::guarded(report, n, "k = " + to_string(k), [&] {
            report.check(hermite_biehler_weakly_stable(stability_family(n, k)).verdict == Verdict::weakly_stable, n,
                         "not weakly stable at k = " + to_string(k));
        });
    }
    return report;
}

/// Polynomial in x and y stored as its y-coefficients: terms[j] multiplies y^j.
struct BivariatePolynomial {
    std::vector<Polynomial> terms;

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        std::size_t n = std::max(a.terms.size(), b.terms.size());
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial& pa = j < a.terms.size() ? a.terms[j] : Polynomial{};
            const Polynomial& pb = j < b.terms.size() ? b.terms[j] : Polynomial{};
            if (pa != pb) return false;
        }
        return true;
    }

    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        if (a.terms.empty() || b.terms.empty()) return {};
        BivariatePolynomial out{std::vector<Polynomial>(a.terms.size() + b.terms.size() - 1)};
        for (std::size_t i = 0; i < a.terms.size(); ++i)
            for (std::size_t j = 0; j < b.terms.size(); ++j) out.terms[i + j] += a.terms[i] * b.terms[j];
        return out;
    }
};

/// T = (n x + n + k) - (x^2 - 1) d/dx.
inline Polynomial apply_operator(long n, const Rational& k, const Polynomial& f) {
    return Polynomial{Rational(n) + k, Rational(n)} * f - Polynomial{-1, 0, 1} * derivative(f);
}

/// sum_j C(n, j) T(x^j) y^j
inline BivariatePolynomial operator_symbol(long n, const Rational& k) {
    BivariatePolynomial s;
    for (long j = 0; j <= n; ++j)
        s.terms.push_back(Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
                          apply_operator(n, k, Polynomial::monomial(1, static_cast<std::size_t>(j))));
    return s;
}

/// (x y + 1)^(n-1) ((k + n)(x y + 1) + n (x + y))
inline BivariatePolynomial operator_symbol_closed_form(long n, const Rational& k) {
    BivariatePolynomial power;
    for (long j = 0; j <= n - 1; ++j)
        power.terms.push_back(Polynomial::monomial(Rational(binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(j))),
                                                   static_cast<std::size_t>(j)));
    BivariatePolynomial factor{{Polynomial{k + n, Rational(n)}, Polynomial{Rational(n), k + n}}};
    return power * factor;
}

/// Symbol expansion equals its closed form, and T(x A_{n-2}) equals P_n.
inline VerificationReport operator_symbol_check(long n, const Rational& k) {
    if (n < 1) throw DomainError("operator_symbol_check needs n >= 1");
    VerificationReport report{"operator-symbol", n, n};
    detail::Stopwatch sw(report);
    detail::guarded(report, n, "symbol", [&] {
        report.check(operator_symbol(n, k) == operator_symbol_closed_form(n, k), n,
                     "symbol expansion differs from closed form at k = " + to_string(k));
        if (n >= 2)
            report.check(apply_operator(n, k, eulerian_a(n - 2).shifted_up(1)) == stability_family(n, k), n,
                         "T(x A_{n-2}) != P_n at k = " + to_string(k));
    });
    return report;
}

// ---------------------------------------------------------------------------
// Threshold conjectures
// ---------------------------------------------------------------------------

/// -2 E_n / E_{n-1}
inline Rational conjectured_threshold(long n) {
    auto z = zigzag(n);
    return make_rational(-2 * z.values[static_cast<std::size_t>(n)], z.values[static_cast<std::size_t>(n - 1)]);
}

inline bool strictly_stable_at(long n, const Rational& k) {
    return is_strictly_hurwitz_stable(stability_family(n, k)).verdict == Verdict::strictly_stable;
}

struct ThresholdBracket {
    long n;
    Rational lower;       ///< not strictly stable here
    Rational upper;       ///< strictly stable here
    Rational conjectured; ///< -2 E_n / E_{n-1}
    Rational width;

    bool contains_conjectured() const { return lower <= conjectured && conjectured <= upper; }
};

/// Bisects the strict-stability threshold of P_n in k, starting from
/// [conjectured - 1, 0].
///
/// The bisection needs stability to switch exactly once inside the bracket.
/// That is checked on a 16-point grid first; a non-monotone grid or a bad
/// starting bracket raises ConjectureViolation.
inline ThresholdBracket critical_k(long n, const Rational& width_target) {
    if (n < 3) throw DomainError("critical_k needs n >= 3");
    if (sgn(width_target) <= 0) throw DomainError("critical_k: width target must be positive");
    const Rational conj = conjectured_threshold(n);
    Rational lo = conj - 1, hi = 0;
    if (strictly_stable_at(n, lo))
        throw ConjectureViolation("n = " + std::to_string(n) + ": strictly stable at k = " + to_string(lo));
    if (!strictly_stable_at(n, hi))
        throw ConjectureViolation("n = " + std::to_string(n) + ": not strictly stable at k = 0");

    constexpr int kGrid = 16;
    bool seen_stable = false;
    for (int i = 0; i < kGrid; ++i) {
        Rational k = lo + (hi - lo) * Rational(i, kGrid - 1);
        bool s = strictly_stable_at(n, k);
        if (seen_stable && !s)
            throw ConjectureViolation("n = " + std::to_string(n) + ": stability is not monotone in k near " + to_string(k));
        seen_stable = seen_stable || s;
    }

    while (hi - lo > width_target) {
        Rational mid = (lo + hi) / 2;
        (strictly_stable_at(n, mid) ? hi : lo) = mid;
    }
    return {n, lo, hi, conj, hi - lo};
}

/// -n(n-1) and -E_{2m+1}/E_{2m-1} with m = floor(n/2).
struct RealZeroRegion {
    Rational lower_boundary;
    Rational upper_boundary;

    /// Strictly inside the conjectured region of distinct real zeros.
    bool predicts_distinct_real(const Rational& k) const { return k < lower_boundary || k > upper_boundary; }
    bool on_boundary(const Rational& k) const { return k == lower_boundary || k == upper_boundary; }
};

inline RealZeroRegion real_zero_region(long n) {
    long m = n / 2;
    auto z = zigzag(2 * m + 1);
    return {Rational(-n * (n - 1)), make_rational(-z.values[static_cast<std::size_t>(2 * m + 1)],
                                                  z.values[static_cast<std::size_t>(2 * m - 1)])};
}

/// A_{n-1}(x) + k x A_{n-3}(x)
inline Polynomial real_zero_family(long n, const Rational& k) {
    if (n < 4) throw DomainError("real_zero_family needs n >= 4");
    return eulerian_a(n - 1) + (k * eulerian_a(n - 3)).shifted_up(1);
}

inline bool has_distinct_real_zeros(const Polynomial& p) {
    return is_real_rooted(p) && poly_gcd(p, derivative(p)).is_constant();
}

/// Eight points in each of (-inf, L), (L, U), (U, +inf), where L and U are
/// the region boundaries; the outer segments are sampled over a window as
/// wide as |L| and |U| respectively.
inline std::vector<Rational> real_zero_sample_grid(long n) {
    RealZeroRegion r = real_zero_region(n);
    std::vector<Rational> ks;
    for (int j = 1; j <= 8; ++j) ks.push_back(r.lower_boundary + r.lower_boundary * Rational(j, 4));
    for (int j = 1; j <= 8; ++j) ks.push_back(r.lower_boundary + (r.upper_boundary - r.lower_boundary) * Rational(j, 9));
    for (int j = 1; j <= 8; ++j) ks.push_back(r.upper_boundary - r.upper_boundary * Rational(j, 4));
    return ks;
}

/// Compares the distinct-real-zeros verdict for each k against the
/// conjectured region. Boundary points are recorded as notes only.
inline VerificationReport real_zero_scan(long n, const std::vector<Rational>& ks) {
    if (n < 4) throw DomainError("real_zero_scan needs n >= 4");
    VerificationReport report{"real-zero", n, n};
    detail::Stopwatch sw(report);
    RealZeroRegion region = real_zero_region(n);
    for (const auto& k : ks) {
        detail::guarded(report, n, "k = " + to_string(k), [&] {
            bool distinct = has_distinct_real_zeros(real_zero_family(n, k));
            if (region.on_boundary(k)) {
                report.notes.push_back("n = " + std::to_string(n) + ", boundary k = " + to_string(k) +
                                       ": distinct real zeros = " + (distinct ? "yes" : "no"));
                return;
            }
            bool predicted = region.predicts_distinct_real(k);
            report.check(distinct == predicted, n,
                         "k = " + to_string(k) + ": distinct real zeros = " + (distinct ? "yes" : "no") +
                             ", conjectured " + (predicted ? "yes" : "no"));
        });
    }
    return report;
}

/// One row of the paired threshold table: the conjectured strict-stability
/// threshold of P_n next to the two boundaries of the distinct-real-zeros
/// region of the A_{n-1} + k x A_{n-3} family.
struct ThresholdRow {
    long n;
    Rational stability_threshold;
    Rational real_zero_lower;
    Rational real_zero_upper;
};

inline std::vector<ThresholdRow> threshold_table(long n_lo, long n_hi) {
    if (n_lo < 4 || n_hi < n_lo) throw DomainError("threshold_table needs 4 <= n_lo <= n_hi");
    std::vector<ThresholdRow> rows;
    for (long n = n_lo; n <= n_hi; ++n) {
        RealZeroRegion z = real_zero_region(n);
        rows.push_back({n, conjectured_threshold(n), z.lower_boundary, z.upper_boundary});
    }
    return rows;
}

} // namespace eulerian::lab

#endif
