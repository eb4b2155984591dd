#include <gtest/gtest.h>

#include "supercong/harmonic.hpp"
#include "supercong/oracle.hpp"
#include "padic_matchers.hpp"

using namespace supercong;

namespace {

std::vector<MhsSignature> signatures(int max_depth, int max_weight) {
    std::vector<MhsSignature> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int weight) -> void {
        if (!cur.empty()) out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_depth) return;
        for (int a = 1; weight + a <= max_weight; ++a)
            for (int s : {a, -a}) {
                cur.push_back(s);
                self(self, weight + a);
                cur.pop_back();
            }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST(Mhs, Examples) {
    const Qp F(7, 8);
    EXPECT_TRUE(Same(mhs(MhsSignature{1}, 6, F), F.rational(49, 20)));
    EXPECT_TRUE(Same(mhs(MhsSignature{2}, 1, F), F.one()));
    EXPECT_TRUE(Same(mhs(MhsSignature{-1}, 2, F), F.rational(-1, 2)));
    EXPECT_TRUE(Same(mhs(MhsSignature{1, 2}, 2, F), F.rational(1, 4)));
    EXPECT_TRUE(mhs(MhsSignature{1, 1}, 1, F).is_exact_zero());
    EXPECT_TRUE(mhs(MhsSignature{3}, 0, F).is_exact_zero());
}

TEST(Mhs, SignatureValidation) {
    EXPECT_THROW(MhsSignature(std::vector<int>{}), BadParameter);
    EXPECT_THROW((MhsSignature{1, 0}), BadParameter);
    EXPECT_EQ((MhsSignature{1, -3}).str(), "(1,-3)");
    EXPECT_EQ((MhsSignature{1, -3}).weight(), 4);
    EXPECT_EQ((MhsSignature{1, -3}).depth(), 2);
}

TEST(Mhs, PrefixesMatchPointValues) {
    const Qp F(11, 6);
    for (const MhsSignature& sig : {MhsSignature{1}, MhsSignature{2, -1}, MhsSignature{1, 1, 2}}) {
        const auto pre = mhs_prefixes(sig, 10, F);
        ASSERT_EQ(pre.size(), 11u);
        for (u64 k = 0; k <= 10; ++k) EXPECT_EQ(pre[k], mhs(sig, k, F)) << sig.str() << " k=" << k;
    }
}

TEST(Mhs, LastIndexRecurrence) {
    // H(s_1..s_m; n) = H(s_1..s_m; n-1) + sign^n/n^|s_m| * H(s_1..s_{m-1}; n-1)
    const Qp F(13, 6);
    const MhsSignature full{2, -1, 1}, head{2, -1};
    for (u64 n = 2; n <= 12; ++n) {
        const PAdic lhs = mhs(full, n, F);
        const PAdic rhs = mhs(full, n - 1, F) + F.reciprocal(n) * mhs(head, n - 1, F);
        EXPECT_TRUE(congruent_mod(lhs, rhs, 5)) << n;
    }
}

TEST(Mhs, OracleGridSmall) {
    for (u64 p : {7ULL, 11ULL}) {
        const Qp F(p, 8);
        for (const auto& sig : signatures(3, 4)) {
            const auto fast = mhs_prefixes(sig, 20, F);
            const auto exact = oracle::mhs_exact_prefixes(sig, 20);
            for (u64 n = 0; n <= 20; ++n) {
                const PAdic ref = F.rational(exact[n]);
                if (ref.is_exact_zero()) {
                    EXPECT_TRUE(fast[n].is_exact_zero() || congruent_mod(fast[n], ref, 4)) << sig.str() << " n=" << n;
                    continue;
                }
                EXPECT_TRUE(congruent_mod(fast[n], ref, ref.valuation() + 4)) << sig.str() << " n=" << n << " p=" << p;
            }
        }
    }
}

TEST(NestedSum, Examples) {
    const Qp F(7, 8);
    WeightSpec h{3, false, 1, {{PrefixKind::harmonic(1), 1}}};
    EXPECT_TRUE(Same(nested_sum(h, 1, F), F.one()));

    WeightSpec o{2, false, 1, {{PrefixKind::odd(1), 2}}};
    EXPECT_TRUE(Same(nested_sum(o, 2, F), F.rational(13, 9)));
}

TEST(NestedSum, GeometricAgainstExactSum) {
    const u64 p = 7;
    const Qp F(p, 6);
    WeightSpec g{3, false, 2, {}};
    Rational exact = 0;
    Rational pow2 = 1;
    for (u64 k = 1; k <= p - 1; ++k) {
        pow2 *= 2;
        exact += pow2 / Rational(static_cast<long>(k * k * k));
    }
    EXPECT_TRUE(congruent_mod(nested_sum(g, p - 1, F), F.rational(exact), 6));
}

TEST(NestedSum, AlternatingSignedPrefix) {
    const Qp F(11, 6);
    // sum_k (-1)^k/k^2 * H^{(-)}_k with H^{(-)}_k = sum_{j<=k} (-1)^j/j
    WeightSpec w{2, true, 1, {{PrefixKind::signed_harmonic(1), 1}}};
    Rational exact = 0, prefix = 0;
    for (long k = 1; k <= 9; ++k) {
        prefix += Rational(k % 2 ? -1 : 1, k);
        exact += Rational(k % 2 ? -1 : 1, k * k) * prefix;
    }
    EXPECT_TRUE(congruent_mod(nested_sum(w, 9, F), F.rational(exact), 6));
}

TEST(NestedSum, H2kPrefix) {
    const Qp F(13, 6);
    WeightSpec w{2, false, 1, {{PrefixKind::h2k(), 1}}};
    Rational exact = 0;
    for (long k = 1; k <= 6; ++k) {
        Rational h2k = 0;
        for (long j = 1; j <= 2 * k; ++j) h2k += Rational(1, j);
        exact += h2k / Rational(k * k);
    }
    EXPECT_TRUE(congruent_mod(nested_sum(w, 6, F), F.rational(exact), 6));
}

TEST(OddHarmonic, Examples) {
    const Qp F(7, 8);
    EXPECT_TRUE(Same(odd_harmonic(1, 1, F), F.one()));
    EXPECT_TRUE(Same(odd_harmonic(2, 2, F), F.rational(10, 9)));
    EXPECT_THROW(odd_harmonic(0, 2, F), BadParameter);
}

TEST(OddHarmonic, EvenOddSplit) {
    // O_k = H_{2k} - H_k/2
    const Qp F(31, 6);
    for (u64 k = 1; k <= 15; ++k) {
        const PAdic lhs = odd_harmonic(1, k, F);
        const PAdic rhs = mhs(MhsSignature{1}, 2 * k, F) - mhs(MhsSignature{1}, k, F) * F.rational(1, 2);
        EXPECT_TRUE(congruent_mod(lhs, rhs, 5)) << k;
        EXPECT_TRUE(congruent_mod(lhs, F.rational(oracle::odd_harmonic_exact(1, k)), 5)) << k;
    }
}
