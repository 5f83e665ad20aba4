#ifndef EULERIAN_STABILITY_HPP
#define EULERIAN_STABILITY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eulerian/errors.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/rational.hpp"

// Exact real-root and stability decisions. Nothing in this header touches
// floating point except approximate_root, which only formats a number for
// display after the exact isolation is done.

namespace eulerian {

// ---------------------------------------------------------------------------
// Sturm chains
// ---------------------------------------------------------------------------

/// p, p', then negated remainders. Every element is scaled by a positive
/// rational to primitive integer form, which leaves sign variations unchanged.
struct SturmChain {
    std::vector<Polynomial> polys;
};

inline SturmChain sturm_chain(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("sturm_chain of the zero polynomial");
    SturmChain chain;
    chain.polys.push_back(primitive_part(p));
    Polynomial dp = derivative(p);
    if (dp.is_zero()) return chain;
    chain.polys.push_back(primitive_part(dp));
    for (;;) {
        const auto& a = chain.polys[chain.polys.size() - 2];
        const auto& b = chain.polys.back();
        Polynomial r = divide(a, b).remainder;
        if (r.is_zero()) break;
        chain.polys.push_back(primitive_part(-r));
    }
    return chain;
}

namespace detail {

inline int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace detail

inline int sign_variations(const SturmChain& chain, const Rational& at) {
    std::vector<int> s;
    s.reserve(chain.polys.size());
    for (const auto& q : chain.polys) s.push_back(sign_at(q, at));
    return detail::variations(s);
}

/// Sign variations at -infinity (`negative_side`) or +infinity.
inline int sign_variations_at_infinity(const SturmChain& chain, bool negative_side) {
    std::vector<int> s;
    for (const auto& q : chain.polys) {
        int lead = sgn(q.leading());
        s.push_back(negative_side && q.degree() % 2 ? -lead : lead);
    }
    return detail::variations(s);
}

/// Distinct real roots of the chain's polynomial in (lo, hi). Both endpoints
/// must be non-roots.
inline int count_real_roots(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw DomainError("count_real_roots: need lo < hi");
    const Polynomial& p = chain.polys.front();
    if (evaluate(p, lo) == 0 || evaluate(p, hi) == 0)
        throw DomainError("count_real_roots: interval endpoint is a root");
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

inline int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    return count_real_roots(sturm_chain(p), lo, hi);
}

/// Distinct real roots on the whole line.
inline int count_all_real_roots(const Polynomial& p) {
    SturmChain c = sturm_chain(p);
    return sign_variations_at_infinity(c, true) - sign_variations_at_infinity(c, false);
}

// ---------------------------------------------------------------------------
// Squarefree decomposition
// ---------------------------------------------------------------------------

struct SquarefreeFactor {
    Polynomial factor; ///< monic, squarefree, nonconstant
    int multiplicity;
};

/// Yun's algorithm: p = c * prod factor_i^multiplicity_i with pairwise
/// coprime squarefree factors. Constants decompose to the empty list.
inline std::vector<SquarefreeFactor> squarefree_decompose(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("squarefree_decompose of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;
    Polynomial dp = derivative(p);
    Polynomial a = poly_gcd(p, dp);
    Polynomial b = exact_quotient(p, a);
    Polynomial c = exact_quotient(dp, a);
    Polynomial d = c - derivative(b);
    for (int i = 1; !b.is_constant(); ++i) {
        Polynomial g = d.is_zero() ? monic(b) : poly_gcd(b, d);
        if (!g.is_constant()) out.push_back({monic(g), i});
        b = exact_quotient(b, g);
        c = exact_quotient(d, g);
        d = c - derivative(b);
    }
    return out;
}

/// p / gcd(p, p'), monic.
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
    if (p.is_constant()) return Polynomial::constant(1);
    return monic(exact_quotient(p, poly_gcd(p, derivative(p))));
}

// ---------------------------------------------------------------------------
// Real root isolation
// ---------------------------------------------------------------------------

/// One distinct real root: either the open interval (lo, hi) containing
/// exactly that root, or the exact rational root when lo == hi.
///
/// `witness` is a squarefree polynomial vanishing at the root, nonzero at both
/// endpoints and with no other root inside; it is what refinement bisects.
struct IsolatedRoot {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
    Polynomial witness;

    bool is_exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

struct RootIsolation {
    std::vector<IsolatedRoot> roots; ///< sorted ascending, pairwise disjoint

    std::size_t distinct() const noexcept { return roots.size(); }
    long count_with_multiplicity() const {
        long n = 0;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    }
};

/// 1 + max |a_i / a_n|. Every complex root has modulus strictly below it.
inline Rational cauchy_bound(const Polynomial& p) {
    Rational m = 0;
    const Rational& lead = p.leading();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / lead)));
    return m + 1;
}

/// One bisection step. Returns false once the root is exact.
inline bool bisect(IsolatedRoot& r) {
    if (r.is_exact()) return false;
    Rational mid = r.midpoint();
    int s_mid = sign_at(r.witness, mid);
    if (s_mid == 0) {
        r.lo = r.hi = mid;
        return false;
    }
    if (s_mid == sign_at(r.witness, r.lo))
        r.lo = mid;
    else
        r.hi = mid;
    return true;
}

inline void refine(IsolatedRoot& r, const Rational& max_width) {
    while (!r.is_exact() && r.hi - r.lo > max_width) bisect(r);
}

namespace detail {

inline bool overlaps(const IsolatedRoot& a, const IsolatedRoot& b) {
    if (a.is_exact() && b.is_exact()) return a.lo == b.lo;
    if (a.is_exact()) return b.lo < a.lo && a.lo < b.hi;
    if (b.is_exact()) return a.lo < b.lo && b.lo < a.hi;
    return a.lo < b.hi && b.lo < a.hi;
}

/// Moves a non-exact root's interval so it lies strictly on one side of `cut`,
/// where `cut` is not a root of the witness.
inline void separate_from_point(IsolatedRoot& r, const Rational& cut) {
    if (r.is_exact() || !(r.lo < cut && cut < r.hi)) return;
    if (sign_at(r.witness, cut) == sign_at(r.witness, r.lo))
        r.lo = cut;
    else
        r.hi = cut;
}

/// Distinct real roots of a squarefree polynomial, each with its own bracket.
inline std::vector<IsolatedRoot> isolate_squarefree(const Polynomial& q, int multiplicity) {
    std::vector<IsolatedRoot> out;
    if (q.is_constant()) return out;
    if (q.degree() == 1) {
        Rational root = -q[0] / q[1];
        out.push_back({root, root, multiplicity, q});
        return out;
    }
    SturmChain chain = sturm_chain(q);
    Rational bound = cauchy_bound(q);
    while (sign_at(q, bound) == 0 || sign_at(q, -bound) == 0) bound += 1;

    struct Pending {
        Rational lo, hi;
        int count;
    };
    std::vector<Pending> stack{{-bound, bound, count_real_roots(chain, -bound, bound)}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.count == 0) continue;
        if (cur.count == 1) {
            out.push_back({cur.lo, cur.hi, multiplicity, q});
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        if (sign_at(q, mid) != 0) {
            int left = count_real_roots(chain, cur.lo, mid);
            stack.push_back({cur.lo, mid, left});
            stack.push_back({mid, cur.hi, cur.count - left});
            continue;
        }
        // mid is an exact root: find a punctured neighbourhood free of other roots.
        out.push_back({mid, mid, multiplicity, q});
        Rational delta = (cur.hi - cur.lo) / 4;
        for (;;) {
            Rational a = mid - delta, b = mid + delta;
            if (sign_at(q, a) != 0 && sign_at(q, b) != 0 && count_real_roots(chain, a, b) == 1) {
                int left = count_real_roots(chain, cur.lo, a);
                stack.push_back({cur.lo, a, left});
                stack.push_back({b, cur.hi, cur.count - 1 - left});
                break;
            }
            delta /= 2;
        }
    }
    return out;
}

/// A root bracket together with the index of the part it belongs to.
struct TaggedRoot {
    IsolatedRoot root;
    std::size_t owner;
};

/// Isolates the roots of pairwise coprime squarefree parts jointly, so the
/// returned brackets are pairwise disjoint and sorted.
inline std::vector<TaggedRoot> isolate_jointly(const std::vector<Polynomial>& parts) {
    std::vector<TaggedRoot> all;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto& r : isolate_squarefree(parts[i], 1)) all.push_back({std::move(r), i});

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                auto& a = all[i].root;
                auto& b = all[j].root;
                while (overlaps(a, b)) {
                    changed = true;
                    if (a.is_exact() && b.is_exact()) throw InvariantError("isolate_jointly: parts share a root");
                    if (a.is_exact())
                        separate_from_point(b, a.lo);
                    else if (b.is_exact())
                        separate_from_point(a, b.lo);
                    else if (a.hi - a.lo >= b.hi - b.lo)
                        bisect(a);
                    else
                        bisect(b);
                }
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const TaggedRoot& x, const TaggedRoot& y) {
        return x.root.lo < y.root.lo || (x.root.lo == y.root.lo && x.root.hi < y.root.hi);
    });
    return all;
}

} // namespace detail

/// Distinct real roots of p with multiplicities. Linear squarefree factors
/// give exact rational points; every interval endpoint is a non-root of p.
inline RootIsolation isolate_real_roots(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) throw DomainError("isolate_real_roots needs a nonconstant polynomial");
    auto factors = squarefree_decompose(p);
    std::vector<Polynomial> parts;
    for (const auto& f : factors) parts.push_back(f.factor);
    RootIsolation iso;
    for (auto& t : detail::isolate_jointly(parts)) {
        t.root.multiplicity = factors[t.owner].multiplicity;
        // Neighbouring exact roots of other factors may sit on an endpoint.
        while (!t.root.is_exact() && (sign_at(p, t.root.lo) == 0 || sign_at(p, t.root.hi) == 0)) bisect(t.root);
        iso.roots.push_back(std::move(t.root));
    }
    return iso;
}

/// Decimal approximation of a root with `digits` significant digits, taken
/// from the midpoint of a refined isolating interval. Display only.
inline std::string approximate_root(IsolatedRoot r, int digits = 20) {
    const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits) * 4 + 64;
    if (!r.is_exact()) {
        Rational scale = std::max(Rational(abs(r.lo)), Rational(abs(r.hi)));
        if (scale == 0) scale = 1;
        Rational width = scale;
        mpz_class two_pow = pow_integer(2, bits - 32);
        width /= Rational(two_pow);
        refine(r, width);
    }
    mpf_class value(r.midpoint(), bits);
    if (value == 0) return "0";
    mp_exp_t exp = 0;
    std::string mant = value.get_str(exp, 10, static_cast<std::size_t>(digits));
    bool negative = !mant.empty() && mant.front() == '-';
    if (negative) mant.erase(0, 1);
    // scientific form d.ddd e(exp-1)
    std::string out = negative ? "-" : "";
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    if (exp - 1 != 0) out += "e" + std::to_string(exp - 1);
    return out;
}

// ---------------------------------------------------------------------------
// Real-rootedness and interlacing
// ---------------------------------------------------------------------------

/// True iff every complex root of p is real.
inline bool is_real_rooted(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("is_real_rooted of the zero polynomial");
    if (p.is_constant()) return true;
    Polynomial s = squarefree_part(p);
    return count_all_real_roots(s) == s.degree();
}

/// Real-rooted with every root <= 0.
inline bool has_only_nonpositive_real_roots(const Polynomial& p) {
    if (!is_real_rooted(p)) return false;
    Polynomial s = squarefree_part(p);
    s = s.shifted_down(s.trailing_zeros());
    if (s.is_constant()) return true;
    Rational bound = cauchy_bound(s);
    return count_real_roots(s, 0, bound) == 0;
}

namespace detail {

/// Distinct real roots of f and g in ascending order with their
/// multiplicities in each.
struct MergedRoot {
    IsolatedRoot where;
    int mult_f = 0;
    int mult_g = 0;
};

inline std::vector<MergedRoot> merge_roots(const Polynomial& f, const Polynomial& g) {
    std::vector<SquarefreeFactor> ff = f.is_constant() ? std::vector<SquarefreeFactor>{} : squarefree_decompose(f);
    std::vector<SquarefreeFactor> gg = g.is_constant() ? std::vector<SquarefreeFactor>{} : squarefree_decompose(g);

    // Common refinement into coprime squarefree parts tagged (mult_f, mult_g).
    std::vector<Polynomial> parts;
    std::vector<std::pair<int, int>> mults;
    std::vector<Polynomial> g_rest;
    for (const auto& q : gg) g_rest.push_back(q.factor);
    for (const auto& p : ff) {
        Polynomial rest = p.factor;
        for (std::size_t j = 0; j < gg.size(); ++j) {
            Polynomial h = poly_gcd(rest, g_rest[j]);
            if (h.is_constant()) continue;
            parts.push_back(h);
            mults.emplace_back(p.multiplicity, gg[j].multiplicity);
            rest = exact_quotient(rest, h);
            g_rest[j] = exact_quotient(g_rest[j], h);
        }
        if (!rest.is_constant()) {
            parts.push_back(rest);
            mults.emplace_back(p.multiplicity, 0);
        }
    }
    for (std::size_t j = 0; j < gg.size(); ++j) {
        if (g_rest[j].is_constant()) continue;
        parts.push_back(g_rest[j]);
        mults.emplace_back(0, gg[j].multiplicity);
    }

    std::vector<MergedRoot> out;
    for (auto& t : isolate_jointly(parts)) out.push_back({std::move(t.root), mults[t.owner].first, mults[t.owner].second});
    return out;
}

} // namespace detail

/// g interlaces f: with roots r_1 >= r_2 >= ... of f and s_1 >= s_2 >= ... of
/// g (with multiplicity), ... <= s_2 <= r_2 <= s_1 <= r_1.
///
/// Requires both real-rooted with positive leading coefficients and
/// deg g in {deg f - 1, deg f}. Coincident roots are allowed.
inline bool interlaces(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero() || g.is_zero()) throw DomainError("interlaces: zero polynomial");
    if (sgn(f.leading()) <= 0 || sgn(g.leading()) <= 0)
        throw DomainError("interlaces: leading coefficients must be positive");
    if (g.degree() != f.degree() && g.degree() != f.degree() - 1)
        throw DomainError("interlaces: need deg g in {deg f - 1, deg f}");
    if (!is_real_rooted(f) || !is_real_rooted(g)) throw DomainError("interlaces: inputs must be real-rooted");

    auto merged = detail::merge_roots(f, g);
    // Descending sequences of positions into `merged`.
    std::vector<std::size_t> r, s;
    for (std::size_t i = merged.size(); i-- > 0;) {
        r.insert(r.end(), static_cast<std::size_t>(merged[i].mult_f), i);
        s.insert(s.end(), static_cast<std::size_t>(merged[i].mult_g), i);
    }
    if (static_cast<long>(r.size()) != f.degree() || static_cast<long>(s.size()) != g.degree())
        throw InvariantError("interlaces: root count does not match degree");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] > r[i]) return false;
        if (i + 1 < r.size() && r[i + 1] > s[i]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Stability
// ---------------------------------------------------------------------------

enum class Verdict { weakly_stable, strictly_stable, unstable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::weakly_stable: return "weakly_stable";
    case Verdict::strictly_stable: return "strictly_stable";
    case Verdict::unstable: return "unstable";
    }
    return "?";
}

struct HermiteBiehlerEvidence {
    Polynomial even_part;
    Polynomial odd_part;
    RootIsolation even_roots;
    RootIsolation odd_roots;
    bool even_real_nonpositive = false;
    bool odd_real_nonpositive = false;
    bool interlacing = false;
    bool degenerate = false; ///< one of the parts vanishes identically
};

struct HurwitzEvidence {
    std::vector<Rational> determinants;
};

/// `unstable` from the Hurwitz test means "not strictly stable"; the
/// polynomial may still be weakly stable.
struct StabilityCertificate {
    Verdict verdict = Verdict::unstable;
    std::variant<HermiteBiehlerEvidence, HurwitzEvidence> evidence;
};

namespace detail {

inline RootIsolation isolate_or_empty(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return {};
    return isolate_real_roots(p);
}

} // namespace detail

/// Weak Hurwitz stability (no roots with positive real part) via the
/// Hermite-Biehler criterion on p(x) = E(x^2) + x O(x^2): both parts
/// real-rooted with nonpositive roots and O interlacing E.
///
/// If O == 0 then p(z) = E(z^2) and the criterion reduces to E having only
/// real nonpositive roots; symmetrically for E == 0 with p(z) = z O(z^2).
inline StabilityCertificate hermite_biehler_weakly_stable(const Polynomial& p_in) {
    if (p_in.is_zero()) throw DomainError("hermite_biehler_weakly_stable of the zero polynomial");
    Polynomial p = sgn(p_in.leading()) < 0 ? -p_in : p_in;
    auto [even, odd] = even_odd_split(p);

    HermiteBiehlerEvidence ev;
    ev.even_roots = detail::isolate_or_empty(even);
    ev.odd_roots = detail::isolate_or_empty(odd);
    ev.even_real_nonpositive = even.is_zero() || has_only_nonpositive_real_roots(even);
    ev.odd_real_nonpositive = odd.is_zero() || has_only_nonpositive_real_roots(odd);
    ev.degenerate = even.is_zero() || odd.is_zero();

    bool stable;
    if (ev.degenerate) {
        stable = ev.even_real_nonpositive && ev.odd_real_nonpositive;
        ev.interlacing = stable;
    } else {
        bool shape_ok = sgn(even.leading()) > 0 && sgn(odd.leading()) > 0 &&
                        (odd.degree() == even.degree() || odd.degree() == even.degree() - 1);
        ev.interlacing = shape_ok && ev.even_real_nonpositive && ev.odd_real_nonpositive && interlaces(odd, even);
        stable = ev.even_real_nonpositive && ev.odd_real_nonpositive && ev.interlacing;
    }
    ev.even_part = std::move(even);
    ev.odd_part = std::move(odd);
    return {stable ? Verdict::weakly_stable : Verdict::unstable, std::move(ev)};
}

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign > 0 ? Integer(m[n - 1][n - 1]) : Integer(-m[n - 1][n - 1]);
}

/// Hurwitz determinants D_1..D_n of p(z) = sum a_{n-k} z^k (a_0 leading):
/// D_k is the leading k x k minor of the matrix with entry (i, j) = a_{2j-i}.
///
/// The coefficients are scaled to integers by the lcm L of their
/// denominators, the minors are taken fraction-free, and D_k is recovered by
/// dividing by L^k.
inline std::vector<Rational> hurwitz_determinants(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("hurwitz_determinants of the zero polynomial");
    const long n = p.degree();
    Integer scale = 1;
    for (const auto& c : p.coeffs()) scale = lcm(scale, Integer(c.get_den()));
    auto a = [&](long j) -> Integer {
        if (j < 0 || j > n) return 0;
        Rational v = p[static_cast<std::size_t>(n - j)] * scale;
        return v.get_num();
    };
    std::vector<Rational> out;
    Integer scale_power = 1;
    for (long k = 1; k <= n; ++k) {
        scale_power *= scale;
        std::vector<std::vector<Integer>> m(static_cast<std::size_t>(k), std::vector<Integer>(static_cast<std::size_t>(k)));
        for (long i = 1; i <= k; ++i)
            for (long j = 1; j <= k; ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = a(2 * j - i);
        out.push_back(make_rational(bareiss_determinant(std::move(m)), scale_power));
    }
    return out;
}

/// Strict Hurwitz stability (no roots with nonnegative real part): every
/// Hurwitz determinant positive. The leading coefficient must be positive.
inline StabilityCertificate is_strictly_hurwitz_stable(const Polynomial& p) {
    if (p.is_zero() || sgn(p.leading()) <= 0)
        throw DomainError("is_strictly_hurwitz_stable: leading coefficient must be positive");
    HurwitzEvidence ev{hurwitz_determinants(p)};
    bool ok = std::all_of(ev.determinants.begin(), ev.determinants.end(), [](const Rational& d) { return sgn(d) > 0; });
    return {ok ? Verdict::strictly_stable : Verdict::unstable, std::move(ev)};
}

} // namespace eulerian

#endif
