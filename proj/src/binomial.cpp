#include "supercong/binomial.hpp"

namespace supercong {

ValUnit factorial(u64 n, const Qp& field) {
    const u64 p = field.prime();
    if (n >= p * p) throw BadParameter("factorial: n must be below p^2");
    PAdic product = field.one();
    for (u64 i = 2; i <= n; ++i) product *= field.integer(static_cast<long long>(i));
    const int v = product.valuation();
    return ValUnit{v, product.shifted(-v)};
}

PAdic central_binom(u64 k, const Qp& field) {
    if (k >= field.prime()) throw BadParameter("central_binom: k must be <= p-1");
    const PAdic top = factorial(2 * k, field).value();
    const PAdic bottom = factorial(k, field).value();
    return top / (bottom * bottom);
}

PAdic central_square_sum(u64 lo, u64 hi, u64 base, const Qp& field) {
    if (lo < 1 || hi >= field.prime()) throw BadParameter("central_square_sum: need 1 <= lo and hi <= p-1");
    if (base % field.prime() == 0) throw BadParameter("central_square_sum: p divides base");
    const PAdic inv_base = field.integer(static_cast<long long>(base)).inverse();
    PAdic c = field.one();       // binom(2k,k)
    PAdic scale = field.one();   // base^-k
    PAdic total = field.zero();
    for (u64 k = 1; k <= hi; ++k) {
        const PAdic inv_k = field.reciprocal(k);
        c *= field.integer(static_cast<long long>(2 * (2 * k - 1))) * inv_k;
        scale *= inv_base;
        if (k >= lo) total += c * c * scale * inv_k;
    }
    return total;
}

PAdic binom_padic(const PAdic& a, u64 k, const Qp& field) {
    if (k >= field.prime()) throw BadParameter("binom_padic: k must be below p");
    PAdic product = field.one();
    for (u64 j = 0; j < k; ++j) {
        product *= a - field.integer(static_cast<long long>(j));
        if (product.is_exact_zero()) return product;
    }
    return product / factorial(k, field).value();
}

PAdic s_sum(const PAdic& a, u64 n, const Qp& field) {
    if (n >= field.prime()) throw BadParameter("s_sum: n must be <= p-1");
    const PAdic minus_a = -a;
    PAdic product = field.one();  // binom(a,k) * binom(-1-a,k)
    PAdic total = field.zero();
    for (u64 k = 1; k <= n; ++k) {
        const PAdic kk = field.integer(static_cast<long long>(k));
        // binom(a,k)/binom(a,k-1) = (a-k+1)/k; binom(-1-a,k)/binom(-1-a,k-1) = (-a-k)/k
        const PAdic inv_k = kk.inverse();
        product *= (a - field.integer(static_cast<long long>(k - 1))) * (minus_a - kk);
        if (product.is_exact_zero()) break;
        product *= inv_k * inv_k;
        total += product * inv_k;
    }
    return total;
}

ReducedPoint reduce_point(const Rational& a, const Qp& field) {
    const BigInt p(static_cast<unsigned long>(field.prime()));
    if (mpz_divisible_p(a.get_den_mpz_t(), p.get_mpz_t()))
        throw BadParameter("reduce_point: p divides the denominator of " + to_string(a));
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), a.get_den_mpz_t(), p.get_mpz_t());
    BigInt r = a.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    const Rational t = (a - Rational(r)) / Rational(p);
    return ReducedPoint{r.get_ui(), field.rational(t)};
}

PAdic lemma23_lhs(const PAdic& t, u64 k, bool half, const Qp& field) {
    const u64 p = field.prime();
    const u64 m = half ? (p - 1) / 2 : p - 1;
    if (k < 1 || k > m) throw BadParameter("lemma23_lhs: k out of range");
    const PAdic pt = t.shifted(1);
    const PAdic top = pt + field.integer(static_cast<long long>(k - 1));
    const PAdic bottom = -pt - field.integer(static_cast<long long>(k + 1));
    return binom_padic(top, m, field) * binom_padic(bottom, m, field);
}

}  // namespace supercong
