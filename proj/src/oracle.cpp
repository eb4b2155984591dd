#include "supercong/oracle.hpp"

#include <cstdlib>

namespace supercong::oracle {

namespace {

constexpr u64 kMaxBruteForce = 200;

Rational q(long num, long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

Rational power(const Rational& x, u64 e) {
    Rational r = 1;
    for (u64 i = 0; i < e; ++i) r *= x;
    return r;
}

void require_small(u64 n) {
    if (n > kMaxBruteForce) throw BadParameter("exact enumeration is limited to n <= 200");
}

// term[i][k] = sign(a_i)^k / k^|a_i| for k = 1..n (index 0 unused).
std::vector<std::vector<Rational>> term_table(const MhsSignature& sig, u64 n) {
    std::vector<std::vector<Rational>> table;
    for (int a : sig.exponents()) {
        std::vector<Rational> row(n + 1);
        for (u64 k = 1; k <= n; ++k) {
            Rational t = power(q(1, static_cast<long>(k)), static_cast<u64>(std::abs(a)));
            if (a < 0 && (k & 1)) t = -t;
            row[k] = t;
        }
        table.push_back(std::move(row));
    }
    return table;
}

// acc += sum over k_0 < ... < k_level < upper of prod * prod_i term[i][k_i]
void enumerate(const std::vector<std::vector<Rational>>& term, int level, u64 upper,
               const Rational& prod, Rational& acc) {
    if (level < 0) {
        acc += prod;
        return;
    }
    for (u64 k = static_cast<u64>(level) + 1; k < upper; ++k)
        enumerate(term, level - 1, k, prod * term[level][k], acc);
}

IdentityReport report(std::string id, u64 n, Rational lhs, Rational rhs) {
    IdentityReport r;
    r.id = std::move(id);
    r.n = n;
    r.equal = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

// O^{(r)}_k for k = 0..n
std::vector<Rational> odd_prefixes(int r, u64 n) {
    std::vector<Rational> out(n + 1);
    out[0] = 0;
    for (u64 k = 1; k <= n; ++k)
        out[k] = out[k - 1] + power(q(1, static_cast<long>(2 * k - 1)), static_cast<u64>(r));
    return out;
}

// out[n] = sum_{k=1}^{n} binom(n,k) (-4)^k / (k^2 binom(2k,k)) * w[k] for n = 1..n_max
std::vector<Rational> binomial_transform(const std::vector<Rational>& w, u64 n_max) {
    std::vector<Rational> c(n_max + 1);
    BigInt central = 1;
    BigInt four_pow = 1;
    for (u64 k = 1; k <= n_max; ++k) {
        central = central * static_cast<unsigned long>(2 * (2 * k - 1)) / static_cast<unsigned long>(k);
        four_pow *= 4;
        const BigInt kk(static_cast<unsigned long>(k));
        Rational ck = make_rational(four_pow, kk * kk * central);
        if (k & 1) ck = -ck;
        c[k] = ck * w[k];
    }
    std::vector<Rational> out(n_max + 1);
    for (u64 n = 1; n <= n_max; ++n) {
        BigInt binom = 1;
        Rational total = 0;
        for (u64 k = 1; k <= n; ++k) {
            binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
            total += Rational(binom) * c[k];
        }
        out[n] = total;
    }
    return out;
}

// -2 sum_{k=1}^{n} w[k]/k for n = 0..n_max
std::vector<Rational> minus_two_harmonic_weighted(const std::vector<Rational>& w, u64 n_max) {
    std::vector<Rational> out(n_max + 1);
    Rational total = 0;
    out[0] = 0;
    for (u64 k = 1; k <= n_max; ++k) {
        total += w[k] / Rational(static_cast<unsigned long>(k));
        out[k] = -2 * total;
    }
    return out;
}

// S_n(a) for n = 0..n_max
std::vector<Rational> s_prefixes(const Rational& a, u64 n_max) {
    std::vector<Rational> out(n_max + 1);
    Rational product = 1;  // binom(a,k) binom(-1-a,k)
    Rational total = 0;
    out[0] = 0;
    for (u64 k = 1; k <= n_max; ++k) {
        const Rational kk(static_cast<unsigned long>(k));
        product *= (a - (kk - 1)) * (-a - kk) / (kk * kk);
        total += product / kk;
        out[k] = total;
    }
    return out;
}

// (2/a) binom(a-1,n) binom(-a-1,n) - 2/a for n = 0..n_max
std::vector<Rational> telescope_rhs(const Rational& a, u64 n_max) {
    std::vector<Rational> out(n_max + 1);
    Rational product = 1;
    const Rational two_over_a = 2 / a;
    out[0] = 0;
    for (u64 n = 1; n <= n_max; ++n) {
        const Rational nn(static_cast<unsigned long>(n));
        product *= (a - nn) * (-a - nn) / (nn * nn);
        out[n] = two_over_a * product - two_over_a;
    }
    return out;
}

std::vector<Rational> sigma_lhs(SigmaIdentity which, u64 n_max) {
    std::vector<Rational> w(n_max + 1, Rational(1));
    if (which == SigmaIdentity::weighted) w = odd_prefixes(1, n_max);
    return binomial_transform(w, n_max);
}

std::vector<Rational> sigma_rhs(SigmaIdentity which, u64 n_max) {
    return minus_two_harmonic_weighted(odd_prefixes(which == SigmaIdentity::weighted ? 2 : 1, n_max), n_max);
}

std::string telescope_id(const Rational& a) { return name(StructuralIdentity::telescope) + "[a=" + to_string(a) + "]"; }

}  // namespace

Rational mhs_exact(const MhsSignature& sig, u64 n) {
    require_small(n);
    const auto term = term_table(sig, n);
    Rational acc = 0;
    enumerate(term, sig.depth() - 1, n + 1, Rational(1), acc);
    return acc;
}

std::vector<Rational> mhs_exact_prefixes(const MhsSignature& sig, u64 n) {
    require_small(n);
    const auto term = term_table(sig, n);
    const int m = sig.depth();
    std::vector<Rational> out(n + 1);
    Rational acc = 0;
    out[0] = 0;
    for (u64 top = 1; top <= n; ++top) {
        if (top >= static_cast<u64>(m)) enumerate(term, m - 2, top, term[m - 1][top], acc);
        out[top] = acc;
    }
    return out;
}

Rational binomial(const Rational& a, u64 k) {
    Rational r = 1;
    for (u64 j = 0; j < k; ++j) r *= (a - Rational(static_cast<unsigned long>(j))) / Rational(static_cast<unsigned long>(j + 1));
    return r;
}

Rational s_sum_exact(const Rational& a, u64 n) {
    Rational total = 0;
    for (u64 k = 1; k <= n; ++k)
        total += binomial(a, k) * binomial(-1 - a, k) / Rational(static_cast<unsigned long>(k));
    return total;
}

std::vector<Rational> bernoulli_table(u64 nmax) {
    std::vector<Rational> b(nmax + 1);
    b[0] = 1;
    for (u64 n = 1; n <= nmax; ++n) {
        Rational total = 0;
        BigInt binom = 1;  // binom(n+1, k)
        for (u64 k = 0; k < n; ++k) {
            if (k > 0) binom = binom * static_cast<unsigned long>(n + 2 - k) / static_cast<unsigned long>(k);
            total += Rational(binom) * b[k];
        }
        b[n] = -total / Rational(static_cast<unsigned long>(n + 1));
    }
    return b;
}

Rational odd_harmonic_exact(int r, u64 k) { return odd_prefixes(r, k)[k]; }

std::string IdentityReport::detail() const {
    if (equal) return id + " n=" + std::to_string(n) + ": equal";
    return id + " n=" + std::to_string(n) + ": lhs - rhs = " + to_string(Rational(lhs - rhs));
}

std::string name(SigmaIdentity which) {
    return which == SigmaIdentity::weighted ? "sigma-weighted" : "sigma-plain";
}

std::string name(StructuralIdentity which) {
    switch (which) {
        case StructuralIdentity::shuffle11: return "shuffle11";
        case StructuralIdentity::shuffle22: return "shuffle22";
        case StructuralIdentity::telescope: return "telescope";
    }
    return "?";
}

IdentityReport sigma_identity(SigmaIdentity which, u64 n) {
    if (n < 1) throw BadParameter("sigma identity needs n >= 1");
    require_small(n);
    return report(name(which), n, sigma_lhs(which, n)[n], sigma_rhs(which, n)[n]);
}

IdentityReport structural_identity(StructuralIdentity which, u64 n, const Rational& a) {
    require_small(n);
    switch (which) {
        case StructuralIdentity::shuffle11: {
            const Rational h = mhs_exact({1}, n);
            return report(name(which), n, h * h, 2 * mhs_exact({1, 1}, n) + mhs_exact({2}, n));
        }
        case StructuralIdentity::shuffle22: {
            const Rational h2 = mhs_exact({2}, n);
            return report(name(which), n, 2 * mhs_exact({2, 2}, n), h2 * h2 - mhs_exact({4}, n));
        }
        case StructuralIdentity::telescope: {
            if (a == 0) throw BadParameter("telescope needs a != 0");
            const Rational lhs = s_sum_exact(a, n) - s_sum_exact(a - 1, n);
            const Rational rhs = -2 / a + 2 / a * binomial(a - 1, n) * binomial(-a - 1, n);
            return report(telescope_id(a), n, lhs, rhs);
        }
    }
    throw BadParameter("unknown identity");
}

std::vector<IdentityReport> identity_table(u64 n_max, const std::vector<Rational>& points) {
    require_small(n_max);
    std::vector<IdentityReport> out;
    for (auto which : {SigmaIdentity::plain, SigmaIdentity::weighted}) {
        const auto lhs = sigma_lhs(which, n_max);
        const auto rhs = sigma_rhs(which, n_max);
        for (u64 n = 1; n <= n_max; ++n) out.push_back(report(name(which), n, lhs[n], rhs[n]));
    }

    const auto h1 = mhs_exact_prefixes({1}, n_max);
    const auto h2 = mhs_exact_prefixes({2}, n_max);
    const auto h4 = mhs_exact_prefixes({4}, n_max);
    const auto h11 = mhs_exact_prefixes({1, 1}, n_max);
    const auto h22 = mhs_exact_prefixes({2, 2}, n_max);
    for (u64 n = 1; n <= n_max; ++n)
        out.push_back(report(name(StructuralIdentity::shuffle11), n, h1[n] * h1[n], 2 * h11[n] + h2[n]));
    for (u64 n = 1; n <= n_max; ++n)
        out.push_back(report(name(StructuralIdentity::shuffle22), n, 2 * h22[n], h2[n] * h2[n] - h4[n]));

    for (const auto& a : points) {
        if (a == 0) throw BadParameter("telescope needs a != 0");
        const auto s_a = s_prefixes(a, n_max);
        const auto s_prev = s_prefixes(a - 1, n_max);
        const auto rhs = telescope_rhs(a, n_max);
        for (u64 n = 1; n <= n_max; ++n)
            out.push_back(report(telescope_id(a), n, s_a[n] - s_prev[n], rhs[n]));
    }
    return out;
}

}  // namespace supercong::oracle
