#pragma once

#include "supercong/padic.hpp"

namespace supercong {

/// n! = p^valuation * unit.
struct ValUnit {
    int valuation = 0;
    PAdic unit;

    PAdic value() const { return unit.shifted(valuation); }
};

/// n! with the p-power extracted. Requires n < p^2.
ValUnit factorial(u64 n, const Qp& field);

/// binom(2k, k) for k <= p-1.
PAdic central_binom(u64 k, const Qp& field);

/// sum_{k=lo}^{hi} binom(2k,k)^2 / (k base^k) for 1 <= lo, hi <= p-1, by the
/// ratio binom(2k,k)/binom(2k-2,k-1) = 2(2k-1)/k. p must not divide base.
PAdic central_square_sum(u64 lo, u64 hi, u64 base, const Qp& field);

/// a(a-1)...(a-k+1)/k! for k < p.
PAdic binom_padic(const PAdic& a, u64 k, const Qp& field);

/// S_n(a) = sum_{k=1}^{n} binom(a,k) binom(-1-a,k) / k for n <= p-1,
/// by one pass updating the product of the two binomials.
PAdic s_sum(const PAdic& a, u64 n, const Qp& field);

/// a = p*t + residue with residue in {0..p-1}.
struct ReducedPoint {
    u64 residue;
    PAdic t;
};

/// Throws BadParameter when p divides the denominator of a.
ReducedPoint reduce_point(const Rational& a, const Qp& field);

/// binom(pt+k-1, m) * binom(-pt-k-1, m) with m = p-1, or m = (p-1)/2 when half.
PAdic lemma23_lhs(const PAdic& t, u64 k, bool half, const Qp& field);

}  // namespace supercong
