#ifndef EULERIAN_ORACLE_HPP
#define EULERIAN_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "eulerian/errors.hpp"
#include "eulerian/polynomial.hpp"

// Exhaustive enumeration of (signed) permutations and their descent
// statistics, computed from window notation.
//
//   type A: classical descents of the one-line word
//   type B: descents of (0, w_1, ..., w_n)
//   type D: descents of (-w_2, w_1, ..., w_n)
//   affine B: des_B plus one when the entry of smaller absolute value among
//             w_1, w_2 is positive

namespace eulerian::oracle {

class SignedPerm {
public:
    explicit SignedPerm(std::vector<int> window) : window_(std::move(window)) {
        const auto n = static_cast<int>(window_.size());
        std::vector<bool> seen(window_.size() + 1, false);
        for (int v : window_) {
            int a = std::abs(v);
            if (v == 0 || a > n || seen[static_cast<std::size_t>(a)])
                throw DomainError("not a signed permutation window");
            seen[static_cast<std::size_t>(a)] = true;
        }
    }

    std::span<const int> window() const noexcept { return window_; }
    int rank() const noexcept { return static_cast<int>(window_.size()); }
    int operator[](std::size_t i) const { return window_[i]; }

    /// Membership in D_n: an even number of negative entries.
    bool is_even_signed() const noexcept {
        return std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }) % 2 == 0;
    }

    SignedPerm negated() const {
        SignedPerm out = *this;
        for (int& v : out.window_) v = -v;
        return out;
    }

    SignedPerm first_sign_flipped() const {
        SignedPerm out = *this;
        if (!out.window_.empty()) out.window_[0] = -out.window_[0];
        return out;
    }

    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

private:
    std::vector<int> window_;
};

namespace detail {

inline int count_descents(std::span<const int> w, int padding) {
    int d = 0, prev = padding;
    for (int v : w) {
        if (prev > v) ++d;
        prev = v;
    }
    return d;
}

} // namespace detail

/// Descents of an ordinary word with distinct entries.
inline int des_a(std::span<const int> perm) {
    std::vector<int> sorted(perm.begin(), perm.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("des_a: repeated entries");
    int d = 0;
    for (std::size_t i = 1; i < perm.size(); ++i)
        if (perm[i - 1] > perm[i]) ++d;
    return d;
}

inline int des_b(const SignedPerm& sp) { return detail::count_descents(sp.window(), 0); }

inline int des_d(const SignedPerm& sp) {
    if (sp.rank() < 2) throw DomainError("des_d needs rank >= 2");
    return detail::count_descents(sp.window(), -sp[1]);
}

inline int affdes_b(const SignedPerm& sp) {
    if (sp.rank() < 2) throw DomainError("affdes_b needs rank >= 2");
    int small = std::abs(sp[0]) < std::abs(sp[1]) ? sp[0] : sp[1];
    return des_b(sp) + (small > 0 ? 1 : 0);
}

enum class Group { A, B, D };
enum class Statistic { des, affdes, des_d };
enum class Filter { all, last_positive, last_negative };

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Exponent histogram. Per-worker histograms merge by addition.
struct Histogram {
    std::vector<std::uint64_t> counts;

    void add(int exponent) {
        if (static_cast<std::size_t>(exponent) >= counts.size()) counts.resize(static_cast<std::size_t>(exponent) + 1);
        ++counts[static_cast<std::size_t>(exponent)];
    }

    Histogram& merge(const Histogram& other) {
        if (other.counts.size() > counts.size()) counts.resize(other.counts.size());
        for (std::size_t i = 0; i < other.counts.size(); ++i) counts[i] += other.counts[i];
        return *this;
    }

    Polynomial to_polynomial() const {
        std::vector<Rational> c;
        c.reserve(counts.size());
        for (auto v : counts) c.emplace_back(Integer(std::to_string(v)));
        return Polynomial(std::move(c));
    }
};

/// Visits every element of B_n in deterministic order: permutations of 1..n in
/// lexicographic order, and for each one the sign masks 0 .. 2^n - 1 (bit i
/// negates entry i). `mask_lo`/`mask_hi` restrict the mask range.
template <class Visitor>
void for_each_signed_perm(int n, Visitor&& visit, std::uint32_t mask_lo = 0, std::uint32_t mask_hi = ~0u) {
    if (n < 1) return;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    const std::uint32_t masks = 1u << n;
    mask_hi = std::min(mask_hi, masks);
    std::vector<int> w(perm.size());
    do {
        for (std::uint32_t mask = mask_lo; mask < mask_hi; ++mask) {
            for (std::size_t i = 0; i < perm.size(); ++i) w[i] = (mask >> i) & 1u ? -perm[i] : perm[i];
            visit(std::span<const int>(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<SignedPerm> enumerate_signed_perms(int n) {
    std::vector<SignedPerm> out;
    for_each_signed_perm(n, [&](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); });
    return out;
}

inline std::uint64_t group_order(Group g, int n) {
    // All groups are enumerated via B_n (or S_n for A).
    std::uint64_t order = 1;
    for (int i = 2; i <= n; ++i) order *= static_cast<std::uint64_t>(i);
    if (g != Group::A) order <<= n;
    return order;
}

/// Descent distribution over the filtered elements of a group.
///
/// For Group::A, `n` counts letters: the result is eulerian_a(n - 1).
/// Statistic::affdes is only defined for B; Statistic::des_d evaluates the
/// type D descent statistic over all of B_n (so that half classes of B_n can
/// be compared against 2 D_n^{+-}).
inline Polynomial distribution(Group group, Statistic stat, int n, Filter filter = Filter::all,
                               std::uint64_t budget = kDefaultBudget) {
    if (stat == Statistic::affdes && group != Group::B) throw DomainError("affine descents are only defined for type B");
    if (stat == Statistic::des_d && group != Group::B) throw DomainError("des_d on B_n requires group B");
    if (n < 1 || n > 20) throw DomainError("distribution: rank out of range");
    if ((group == Group::D || stat != Statistic::des) && n < 2)
        throw DomainError("distribution: rank must be >= 2 for this statistic");
    if (group == Group::A && filter != Filter::all) throw DomainError("sign filters do not apply to type A");
    if (group_order(group, n) > budget)
        throw BudgetExceeded("enumerating " + std::to_string(group_order(group, n)) + " elements exceeds budget " +
                             std::to_string(budget));

    if (group == Group::A) {
        Histogram h;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do h.add(detail::count_descents(perm, 0)); // entries positive, so the padding never counts
        while (std::next_permutation(perm.begin(), perm.end()));
        return h.to_polynomial();
    }

    auto accumulate = [=](Histogram& h, std::uint32_t lo, std::uint32_t hi) {
        for_each_signed_perm(
            n,
            [&](std::span<const int> w) {
                int last = w.back();
                if (filter == Filter::last_positive && last < 0) return;
                if (filter == Filter::last_negative && last > 0) return;
                if (group == Group::D && std::count_if(w.begin(), w.end(), [](int v) { return v < 0; }) % 2) return;
                switch (stat) {
                case Statistic::des:
                    h.add(group == Group::D ? detail::count_descents(w, -w[1]) : detail::count_descents(w, 0));
                    break;
                case Statistic::des_d: h.add(detail::count_descents(w, -w[1])); break;
                case Statistic::affdes: {
                    int small = std::abs(w[0]) < std::abs(w[1]) ? w[0] : w[1];
                    h.add(detail::count_descents(w, 0) + (small > 0 ? 1 : 0));
                    break;
                }
                }
            },
            lo, hi);
    };

    const std::uint32_t masks = 1u << n;
    unsigned workers = group_order(group, n) < 100'000 ? 1u : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, masks);
    std::vector<Histogram> partial(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            std::uint32_t lo = masks * t / workers, hi = masks * (t + 1) / workers;
            pool.emplace_back([&, t, lo, hi] { accumulate(partial[t], lo, hi); });
        }
    }
    Histogram total;
    for (const auto& h : partial) total.merge(h);
    return total.to_polynomial();
}

} // namespace eulerian::oracle

#endif
