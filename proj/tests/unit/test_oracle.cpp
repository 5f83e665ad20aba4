#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "eulerian/generators.hpp"
#include "eulerian/oracle.hpp"

using namespace eulerian;
using namespace eulerian::oracle;

TEST(SignedPerm, Validation) {
    EXPECT_NO_THROW(SignedPerm({-2, 1}));
    EXPECT_THROW(SignedPerm({1, 1}), DomainError);
    EXPECT_THROW(SignedPerm({0, 1}), DomainError);
    EXPECT_THROW(SignedPerm({1, 3}), DomainError);
    EXPECT_TRUE(SignedPerm({-1, -2}).is_even_signed());
    EXPECT_FALSE(SignedPerm({-1, 2}).is_even_signed());
}

TEST(Descents, TypeA) {
    std::vector<int> id{1, 2, 3}, rev{3, 2, 1}, one{2, 1, 3}, rep{1, 1};
    EXPECT_EQ(des_a(id), 0);
    EXPECT_EQ(des_a(rev), 2);
    EXPECT_EQ(des_a(one), 1);
    EXPECT_THROW(des_a(rep), DomainError);
}

TEST(Descents, TypeB) {
    EXPECT_EQ(des_b(SignedPerm({1, 2})), 0);
    EXPECT_EQ(des_b(SignedPerm({-1, -2})), 2);
    EXPECT_EQ(des_b(SignedPerm({2, -1})), 1);
}

TEST(Descents, TypeD) {
    EXPECT_EQ(des_d(SignedPerm({1, 2})), 0);
    EXPECT_EQ(des_d(SignedPerm({-1, -2})), 2);
    EXPECT_THROW(des_d(SignedPerm({1})), DomainError);
}

TEST(Descents, AffineB) {
    EXPECT_EQ(affdes_b(SignedPerm({1, 2})), 1);
    EXPECT_EQ(affdes_b(SignedPerm({-1, 2})), 1);
    EXPECT_THROW(affdes_b(SignedPerm({1})), DomainError);
}

TEST(Distribution, HandCheckedRankTwo) {
    EXPECT_EQ(distribution(Group::B, Statistic::des, 2), (Polynomial{1, 6, 1}));
    EXPECT_EQ(distribution(Group::D, Statistic::des, 2), (Polynomial{1, 2, 1}));
    EXPECT_EQ(distribution(Group::B, Statistic::affdes, 2), (Polynomial{0, 4, 4}));
    EXPECT_EQ(distribution(Group::B, Statistic::des, 2, Filter::last_positive), (Polynomial{1, 3}));
    EXPECT_EQ(distribution(Group::A, Statistic::des, 3), (Polynomial{1, 4, 1}));
}

TEST(Distribution, Errors) {
    EXPECT_THROW(distribution(Group::A, Statistic::affdes, 3), DomainError);
    EXPECT_THROW(distribution(Group::D, Statistic::affdes, 3), DomainError);
    EXPECT_THROW(distribution(Group::D, Statistic::des, 1), DomainError);
    EXPECT_THROW(distribution(Group::B, Statistic::des, 6, Filter::all, 1000), BudgetExceeded);
    EXPECT_NO_THROW(distribution(Group::B, Statistic::des, 6, Filter::all, 46080));
}

TEST(Enumeration, LexicographicPermutationThenMask) {
    auto all = enumerate_signed_perms(2);
    ASSERT_EQ(all.size(), 8u);
    std::vector<std::vector<int>> expected{{1, 2}, {-1, 2}, {1, -2}, {-1, -2}, {2, 1}, {-2, 1}, {2, -1}, {-2, -1}};
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto w = all[i].window();
        EXPECT_EQ(std::vector<int>(w.begin(), w.end()), expected[i]) << i;
    }
}

TEST(Distribution, MatchesGeneratedFamilies) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(distribution(Group::B, Statistic::des, n), eulerian_b(n)) << n;
        auto h = half_b(n);
        EXPECT_EQ(distribution(Group::B, Statistic::des, n, Filter::last_positive), h.plus) << n;
        EXPECT_EQ(distribution(Group::B, Statistic::des, n, Filter::last_negative), h.minus) << n;
        if (n < 2) continue;
        EXPECT_EQ(distribution(Group::B, Statistic::affdes, n), affine_b(n)) << n;
        EXPECT_EQ(distribution(Group::D, Statistic::des, n), eulerian_d(n)) << n;
        auto hd = half_d(n);
        EXPECT_EQ(distribution(Group::D, Statistic::des, n, Filter::last_positive), hd.plus) << n;
        EXPECT_EQ(distribution(Group::D, Statistic::des, n, Filter::last_negative), hd.minus) << n;
        EXPECT_EQ(distribution(Group::B, Statistic::des_d, n, Filter::last_positive), Rational(2) * hd.plus) << n;
        EXPECT_EQ(distribution(Group::B, Statistic::des_d, n, Filter::last_negative), Rational(2) * hd.minus) << n;
    }
}

TEST(Involutions, FirstSignFlipKeepsLastSignClass) {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& sp : enumerate_signed_perms(n)) {
            auto flipped = sp.first_sign_flipped();
            EXPECT_EQ(flipped.first_sign_flipped(), sp);
            EXPECT_EQ(flipped[static_cast<std::size_t>(n - 1)] > 0, sp[static_cast<std::size_t>(n - 1)] > 0);
            EXPECT_NE(flipped.is_even_signed(), sp.is_even_signed());
        }
    }
}

TEST(Involutions, NegationComplementsDescents) {
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> pos_b, neg_b, pos_d, neg_d;
        for_each_signed_perm(n, [&](std::span<const int> w) {
            SignedPerm sp(std::vector<int>(w.begin(), w.end()));
            SignedPerm neg = sp.negated();
            EXPECT_EQ(des_b(neg), n - des_b(sp));
            EXPECT_EQ(des_d(neg), n - des_d(sp));
            if (w.back() > 0) {
                pos_b.push_back(n - des_b(sp));
                pos_d.push_back(n - des_d(sp));
            } else {
                neg_b.push_back(des_b(sp));
                neg_d.push_back(des_d(sp));
            }
        });
        // The complemented last-positive multiset equals the last-negative one.
        for (auto* v : {&pos_b, &neg_b, &pos_d, &neg_d}) std::sort(v->begin(), v->end());
        EXPECT_EQ(pos_b, neg_b) << n;
        EXPECT_EQ(pos_d, neg_d) << n;
    }
}
