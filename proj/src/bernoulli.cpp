#include "supercong/bernoulli.hpp"

#include <vector>

#include "supercong/harmonic.hpp"

namespace supercong {

namespace {

void check_p_integral(u64 n, u64 p) {
    if (n > 0 && n % (p - 1) == 0)
        throw BadParameter("B_" + std::to_string(n) + " is not p-integral for p=" + std::to_string(p));
}

// Smallest L with p^L >= n + 1.
int log_ceil(u64 n_plus_1, u64 p) {
    int l = 0;
    BigInt pw = 1;
    while (pw < n_plus_1) {
        pw *= static_cast<unsigned long>(p);
        ++l;
    }
    return l;
}

}  // namespace

PAdic bernoulli(u64 n, const Qp& field) {
    const u64 p = field.prime();
    check_p_integral(n, p);
    if (n == 0) return field.one();
    if (n == 1) return field.rational(-1, 2);
    if (n % 2 == 1) return field.zero();

    const int buffer = field.digits() + log_ceil(n + 1, p) + 1;
    const Qp wide(field.context(), buffer);
    const ResidueRing ring(field.context(), buffer);

    // diff[j] holds the k-th forward difference of j -> j^n at j.
    std::vector<ResidueRing::Element> diff;
    diff.reserve(n + 1);
    for (u64 j = 0; j <= n; ++j) diff.push_back(ring.pow(ring.from_integer(static_cast<long long>(j)), n));

    PAdic total = wide.zero();
    for (u64 k = 0; k <= n; ++k) {
        // sum_j (-1)^j binom(k,j) j^n = (-1)^k (Delta^k f)(0)
        PAdic inner = ring.to_padic(diff[0]);
        if (k & 1) inner = -inner;
        total += inner * wide.reciprocal(k + 1);
        for (u64 j = 0; j + k < n; ++j) diff[j] = ring.sub(diff[j + 1], diff[j]);
    }
    return total.with_absolute_precision(buffer - 1);
}

PAdic bernoulli_power_sum(u64 n, const PrimeContext& ctx) {
    const u64 p = ctx.prime();
    const Qp field(ctx, 2);
    check_p_integral(n, p);
    if (n == 0) return field.one();
    if (n == 1) return field.rational(-1, 2);
    if (n % 2 == 1) return field.zero();
    if (n == 2) return field.rational(1, 6);
    // sum_{k<p} k^n = p B_n + binom(n,2)/3 p^3 B_{n-2} + O(p^4) needs B_{n-2} p-integral
    if ((n - 2) % (p - 1) == 0) throw BadParameter("power-sum route needs (p-1) not dividing n-2");
    const ResidueRing ring(ctx, 3);
    ResidueRing::Element sum = ring.from_integer(0);
    for (u64 k = 1; k < p; ++k) sum = ring.add(sum, ring.pow(ring.from_integer(static_cast<long long>(k)), n));
    const BigInt s = ring.to_big(sum);
    const BigInt pp(static_cast<unsigned long>(p));
    return PAdic::from_residue(BigInt(s / pp), ctx, 2);
}

const PAdic& BernoulliTable::get(u64 n) {
    auto it = values_.find(n);
    if (it != values_.end()) return it->second;
    return values_.emplace(n, bernoulli(n, field_)).first->second;
}

PAdic bernoulli_poly(u64 n, const Rational& x, const Qp& field) {
    const PAdic xp = field.rational(x);
    PAdic total = field.zero();
    BigInt binom = 1;  // binom(n, k)
    for (u64 k = 0; k <= n; ++k) {
        if (k > 0) {
            binom *= static_cast<unsigned long>(n - k + 1);
            binom /= static_cast<unsigned long>(k);
        }
        const PAdic bk = bernoulli(k, field);
        if (bk.is_exact_zero()) continue;
        total += field.integer(binom) * bk * xp.pow(n - k);
    }
    return total;
}

PAdic fermat_quotient(u64 a, const Qp& field) {
    const u64 p = field.prime();
    if (a % p == 0) throw BadParameter("fermat_quotient: p divides a");
    const int k = field.digits() + 1;
    const ResidueRing ring(field.context(), k);
    const auto power = ring.pow(ring.from_integer(static_cast<long long>(a)), p - 1);
    const auto numerator = ring.sub(power, ring.from_integer(1));
    return ring.to_padic(numerator).shifted(-1);
}

namespace {

void require_x_prime(u64 p) {
    if (p <= 5) throw BadParameter("X is defined for p > 5");
}

PAdic x_from_bernoulli(const PAdic& b1, const PAdic& b2, const Qp& field) {
    const long long p = static_cast<long long>(field.prime());
    const PAdic x = b1 / field.integer(p - 3) - b2 / field.integer(4 * p - 8);
    return x.with_absolute_precision(field.digits());
}

}  // namespace

PAdic x_constant(const Qp& field, XMethod method) {
    const u64 p = field.prime();
    require_x_prime(p);
    if (method == XMethod::harmonic) {
        const PAdic h2 = mhs(MhsSignature{2}, p - 1, field);
        const PAdic x = h2 / field.integer(-4).shifted(1);
        return x.with_absolute_precision(2);
    }
    return x_from_bernoulli(bernoulli(p - 3, field), bernoulli(2 * p - 4, field), field);
}

PAdic x_constant(BernoulliTable& table) {
    const u64 p = table.field().prime();
    require_x_prime(p);
    return x_from_bernoulli(table.get(p - 3), table.get(2 * p - 4), table.field());
}

}  // namespace supercong
