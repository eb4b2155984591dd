#include <string>

#include "supercong/binomial.hpp"
#include "supercong/checks.hpp"

namespace supercong {

namespace {

using Comparisons = std::vector<Comparison>;

std::vector<CheckParam> single(const CheckOptions&) { return {CheckParam{}}; }

std::vector<CheckParam> a_samples(const CheckOptions& o) {
    std::vector<CheckParam> out;
    for (const auto& a : o.a_samples) {
        CheckParam c;
        c.label = "a=" + to_string(a);
        c.a = a;
        out.push_back(c);
    }
    return out;
}

std::vector<CheckParam> labelled_forms(std::initializer_list<const char*> labels) {
    std::vector<CheckParam> out;
    int form = 0;
    for (const char* l : labels) {
        CheckParam c;
        c.label = l;
        c.form = form++;
        out.push_back(c);
    }
    return out;
}

// (a, b) with a, b >= 1, a + b odd and a + b <= 5.
std::vector<std::pair<int, int>> odd_weight_pairs() {
    std::vector<std::pair<int, int>> out;
    for (int w = 3; w <= 5; w += 2)
        for (int a = 1; a < w; ++a) out.emplace_back(a, w - a);
    return out;
}

std::vector<CheckParam> pair_params(const CheckOptions&) {
    std::vector<CheckParam> out;
    for (auto [a, b] : odd_weight_pairs()) {
        CheckParam c;
        c.label = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
        c.i = a;
        c.j = b;
        out.push_back(c);
    }
    return out;
}

Comparisons one(PAdic lhs, PAdic rhs, int e, std::string label = {}) {
    Comparisons out;
    out.push_back(Comparison{std::move(label), std::move(lhs), std::move(rhs), e});
    return out;
}

void require(bool ok, const std::string& why) {
    if (!ok) throw NotApplicable(why);
}

BigInt binomial_int(int n, int k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

PAdic two_pow(PrimeEnv& env, long long e) { return env.integer(2).pow(static_cast<u64>(e)); }

// Weighted sums over k <= n; memoized per (name, n).
const PAdic& weighted(PrimeEnv& env, const std::string& name, const WeightSpec& spec, u64 n) {
    return env.memo(name + ";" + std::to_string(n), [&] { return nested_sum(spec, n, env.field()); });
}

WeightSpec over_k(int outer, std::vector<WeightFactor> factors) {
    WeightSpec s;
    s.outer_exponent = outer;
    s.factors = std::move(factors);
    return s;
}

// sum O_k / k^2
const PAdic& odd_over_k2(PrimeEnv& env, u64 n) {
    return weighted(env, "O/k^2", over_k(2, {{PrefixKind::odd(1), 1}}), n);
}
// sum O_k / k^3
const PAdic& odd_over_k3(PrimeEnv& env, u64 n) {
    return weighted(env, "O/k^3", over_k(3, {{PrefixKind::odd(1), 1}}), n);
}
// sum O_k^2 / k^2
const PAdic& odd_sq_over_k2(PrimeEnv& env, u64 n) {
    return weighted(env, "O^2/k^2", over_k(2, {{PrefixKind::odd(1), 2}}), n);
}
// sum O^{(2)}_k / k^2
const PAdic& odd2_over_k2(PrimeEnv& env, u64 n) {
    return weighted(env, "O2/k^2", over_k(2, {{PrefixKind::odd(2), 1}}), n);
}
// sum O^{(2)}_k / k
const PAdic& odd2_over_k(PrimeEnv& env, u64 n) {
    return weighted(env, "O2/k", over_k(1, {{PrefixKind::odd(2), 1}}), n);
}
// sum H_k / k^3
const PAdic& hk_over_k3(PrimeEnv& env, u64 n) {
    return weighted(env, "H/k^3", over_k(3, {{PrefixKind::harmonic(1), 1}}), n);
}
// sum H_{2k} / k^2
const PAdic& h2k_over_k2(PrimeEnv& env, u64 n) {
    return weighted(env, "H2k/k^2", over_k(2, {{PrefixKind::h2k(), 1}}), n);
}
// sum 2^k / k^3
const PAdic& two_k_over_k3(PrimeEnv& env) {
    WeightSpec s = over_k(3, {});
    s.geometric = 2;
    return weighted(env, "2^k/k^3", s, env.p() - 1);
}

const PAdic& central_sum(PrimeEnv& env, u64 lo, u64 hi) {
    return env.memo("C16;" + std::to_string(lo) + ".." + std::to_string(hi),
                    [&] { return central_square_sum(lo, hi, 16, env.field()); });
}

const PAdic& h1_full(PrimeEnv& env) { return env.mhs({1}, env.p() - 1); }
const PAdic& h1_half(PrimeEnv& env) { return env.mhs({1}, env.half()); }
const PAdic& h1m3(PrimeEnv& env) { return env.mhs({1, -3}, env.p() - 1); }
const PAdic& b_p3(PrimeEnv& env) { return env.bernoulli(env.p() - 3); }

// ---- known results -------------------------------------------------------

std::vector<CheckParam> known_i_params(const CheckOptions&) {
    std::vector<CheckParam> out;
    for (int a = 1; a <= 6; ++a)
        for (int r = 1; a * r <= 6; ++r) {
            CheckParam c;
            c.label = "a=" + std::to_string(a) + ",r=" + std::to_string(r);
            c.i = a;
            c.j = r;
            out.push_back(c);
        }
    return out;
}

Comparisons known_i(PrimeEnv& env, const CheckParam& c) {
    const int a = c.i, r = c.j, ar = a * r;
    const u64 p = env.p();
    require(p > static_cast<u64>(ar + 2), "needs p > ar+2");
    const PAdic lhs = env.mhs(MhsSignature(std::vector<int>(r, a)), p - 1);
    const int sign = (r % 2 == 0) ? 1 : -1;
    if (ar % 2 == 1) {
        const PAdic coeff = env.rational(sign * a * (ar + 1), 2 * (ar + 2));
        return one(lhs, coeff * env.bernoulli(p - ar - 2).shifted(2), 3);
    }
    const PAdic coeff = env.rational(-sign * a, ar + 1);
    return one(lhs, coeff * env.bernoulli(p - ar - 1).shifted(1), 2);
}

std::vector<CheckParam> known_ii_params(const CheckOptions&) {
    std::vector<CheckParam> out;
    for (int a = 1; a <= 6; ++a) {
        CheckParam c;
        c.label = "a=" + std::to_string(a);
        c.i = a;
        out.push_back(c);
    }
    return out;
}

Comparisons known_ii(PrimeEnv& env, const CheckParam& c) {
    const int a = c.i;
    const u64 p = env.p();
    require(p > static_cast<u64>(a + 2), "needs p > a+2");
    const PAdic lhs = env.mhs({a}, env.half());
    if (a == 1) return one(lhs, env.integer(-2) * env.q2(), 1);
    if (a % 2 == 1) return one(lhs, -env.rational((1LL << a) - 2, a) * env.bernoulli(p - a), 1);
    const PAdic coeff = env.rational(a * ((1LL << (a + 1)) - 1), 2 * (a + 1));
    return one(lhs, coeff * env.bernoulli(p - a - 1).shifted(1), 2);
}

Comparisons known_iii(PrimeEnv& env, const CheckParam& c) {
    const int a = c.i, b = c.j;
    const u64 p = env.p();
    require(p > static_cast<u64>(a + b + 1), "needs p > a+b+1");
    const PAdic lhs = env.mhs({a, b}, p - 1);
    PAdic coeff = env.field().integer(binomial_int(a + b, a)) / env.integer(a + b);
    if (b % 2 == 1) coeff = -coeff;
    return one(lhs, coeff * env.bernoulli(p - a - b), 1);
}

Comparisons known_iv(PrimeEnv& env, const CheckParam& c) {
    const int a = c.i, b = c.j;
    const u64 p = env.p();
    require(p > static_cast<u64>(a + b), "needs p > a+b");
    const PAdic lhs = env.mhs({a, b}, env.half());
    BigInt inner = binomial_int(a + b, a);
    if (b % 2 == 1) inner = -inner;
    inner += (BigInt(1) << (a + b)) - 2;
    const PAdic rhs = env.bernoulli(p - a - b) * env.field().integer(inner) / env.integer(2 * (a + b));
    return one(lhs, rhs, 1);
}

std::vector<CheckParam> known_v_params(const CheckOptions&) {
    std::vector<CheckParam> out;
    for (int a = 2; a <= 5; ++a) {
        CheckParam c;
        c.label = "a=" + std::to_string(a);
        c.i = a;
        out.push_back(c);
    }
    return out;
}

Comparisons known_v(PrimeEnv& env, const CheckParam& c) {
    const int a = c.i;
    const long long p = static_cast<long long>(env.p());
    require(p >= a + 2, "needs p >= a+2");
    const PAdic lhs = env.mhs({-a}, env.p() - 1);
    if (a % 2 == 1) {
        const PAdic coeff = env.integer(-2) * (env.integer(1) - two_pow(env, p - a)) / env.integer(a);
        return one(lhs, coeff * env.bernoulli(env.p() - a), 1);
    }
    const PAdic coeff = env.integer(a) * (env.integer(1) - two_pow(env, p - 1 - a)) / env.integer(a + 1);
    return one(lhs, coeff * env.bernoulli(env.p() - 1 - a).shifted(1), 2);
}

std::vector<CheckParam> known_vi_params(const CheckOptions&) {
    std::vector<CheckParam> out;
    for (auto [a, b] : odd_weight_pairs())
        for (int form = 0; form < 2; ++form) {
            CheckParam c;
            const std::string sa = std::to_string(a), sb = std::to_string(b);
            c.label = form == 0 ? "H(-" + sa + "," + sb + ")" : "H(" + sa + ",-" + sb + ")";
            c.i = a;
            c.j = b;
            c.form = form;
            out.push_back(c);
        }
    return out;
}

Comparisons known_vi(PrimeEnv& env, const CheckParam& c) {
    const int a = c.i, b = c.j;
    const long long p = static_cast<long long>(env.p());
    require(p >= a + b + 2, "needs p >= a+b+2");
    const MhsSignature sig = c.form == 0 ? MhsSignature{-a, b} : MhsSignature{a, -b};
    const PAdic lhs = env.mhs(sig, env.p() - 1);
    const PAdic coeff = (env.integer(1) - two_pow(env, p - a - b)) / env.integer(a + b);
    return one(lhs, coeff * env.bernoulli(env.p() - a - b), 1);
}

Comparisons known_vii_zero(PrimeEnv& env, const CheckParam& c) {
    static const MhsSignature sigs[] = {{-4}, {2, 2}, {1, 3}};
    return one(env.mhs(sigs[c.form], env.p() - 1), env.field().zero(), 1);
}

Comparisons known_vii_2m1(PrimeEnv& env, const CheckParam&) {
    const PAdic lhs = env.mhs({2, -1}, env.p() - 1);
    const PAdic rhs = env.rational(-3, 2) * env.x() -
                      (env.rational(7, 6) * env.q2() * b_p3(env)).shifted(1) + h1m3(env).shifted(1);
    return one(lhs, rhs, 2);
}

Comparisons known_vii_cluster(PrimeEnv& env, const CheckParam& c) {
    const u64 n = env.p() - 1;
    PAdic lhs = env.field().zero();
    switch (c.form) {
        case 0: lhs = env.rational(-1, 2) * env.mhs({1, 2}, n); break;
        case 1: lhs = env.rational(1, 2) * env.mhs({2, 1}, n); break;
        case 2: lhs = env.mhs({-3}, n); break;
        default: lhs = env.integer(-2) * env.mhs({1, -2}, n); break;
    }
    return one(lhs, env.integer(3) * env.x(), 2);
}

Comparisons known_viii_a(PrimeEnv& env, const CheckParam& c) {
    // X from Bernoulli numbers here: the harmonic route would make this circular.
    const PAdic rhs = (env.integer(-4) * env.x_bernoulli()).shifted(1);
    PAdic lhs = env.field().zero();
    switch (c.form) {
        case 0: lhs = (env.integer(-2) * h1_full(env)).shifted(-1); break;
        case 1: lhs = env.mhs({2}, env.p() - 1); break;
        default:
            // 2/7 is not a unit at p=7; compare H(2;(p-1)/2) with -14pX there instead.
            if (env.p() == 7)
                return one(env.mhs({2}, env.half()), (env.integer(-14) * env.x_bernoulli()).shifted(1), 3,
                           "p=7: H(2;h) vs -14pX");
            lhs = env.rational(2, 7) * env.mhs({2}, env.half());
            break;
    }
    return one(lhs, rhs, 3);
}

Comparisons known_viii_b(PrimeEnv& env, const CheckParam&) {
    return one(env.mhs({3}, env.half()), env.integer(12) * env.x(), 2);
}

// ---- S_n(a) results ---------------------------------------------------------

struct Point {
    u64 r;
    PAdic t;
};

Point point(PrimeEnv& env, const Rational& a) {
    auto rp = reduce_point(a, env.field());
    return {rp.residue, rp.t};
}

const PAdic& s_full(PrimeEnv& env, const CheckParam& c) {
    return env.memo("S_{p-1}(" + to_string(c.a) + ")",
                    [&] { return s_sum(env.field().rational(c.a), env.p() - 1, env.field()); });
}

const PAdic& s_half(PrimeEnv& env, const CheckParam& c) {
    return env.memo("S_h(" + to_string(c.a) + ")",
                    [&] { return s_sum(env.field().rational(c.a), env.half(), env.field()); });
}

Comparisons tauraso_6k(PrimeEnv& env, const CheckParam&) {
    return one(central_sum(env, 1, env.p() - 1), env.integer(-2) * h1_half(env), 3);
}

Comparisons sun_6k_tail(PrimeEnv& env, const CheckParam&) {
    return one(central_sum(env, env.half() + 1, env.p() - 1), (env.rational(7, 2) * b_p3(env)).shifted(2), 3);
}

Comparisons tauraso_param(PrimeEnv& env, const CheckParam& c) {
    const auto [r, t] = point(env, c.a);
    const PAdic rhs = env.integer(-2) * env.mhs({1}, r) + (env.integer(2) * t * env.mhs({2}, r)).shifted(1);
    return one(s_full(env, c), rhs, 2);
}

Comparisons sun_param(PrimeEnv& env, const CheckParam& c) {
    const auto [r, t] = point(env, c.a);
    const PAdic rhs = (env.rational(-2, 3) * t * b_p3(env)).shifted(2) - env.integer(2) * env.mhs({1}, r) +
                      (env.integer(2) * t * env.mhs({2}, r)).shifted(1) +
                      (env.integer(2) * t * env.mhs({3}, r)).shifted(2);
    return one(s_full(env, c), rhs, 3);
}

PAdic thm11_full_rhs(PrimeEnv& env, u64 r, const PAdic& t) {
    const PAdic two = env.integer(2);
    const PAdic quad = two * t * t + env.integer(4) * t + env.integer(1);  // 2t^2+4t+1
    return (env.integer(4) * t * env.x()).shifted(2) - two * env.mhs({1}, r) +
           (two * t * env.mhs({2}, r)).shifted(1) + (two * t * env.mhs({3}, r)).shifted(2) -
           (two * t * quad * env.mhs({4}, r)).shifted(3) +
           (env.integer(4) * t * (t + env.integer(1)) * hk_over_k3(env, r)).shifted(3);
}

PAdic thm11_half_rhs(PrimeEnv& env, u64 r, const PAdic& t) {
    const PAdic t2 = t * t;
    const PAdic x = env.x();
    auto n = [&](long long k) { return env.integer(k); };
    return (n(-12) * t2 * x + n(14) * t * x).shifted(2) - n(2) * env.mhs({1}, r) +
           (n(4) * t * env.mhs({2}, r)).shifted(1) - (n(6) * t2 * env.mhs({3}, r)).shifted(2) +
           (n(8) * t2 * t * env.mhs({4}, r)).shifted(3) + (n(4) * t * odd_over_k2(env, r)).shifted(2) -
           (n(8) * t2 * odd_over_k3(env, r)).shifted(3) + (n(4) * t * odd_sq_over_k2(env, r)).shifted(3) -
           (n(8) * t2 * odd2_over_k2(env, r)).shifted(3);
}

Comparisons thm11_full(PrimeEnv& env, const CheckParam& c) {
    const auto [r, t] = point(env, c.a);
    return one(s_full(env, c), thm11_full_rhs(env, r, t), 4);
}

Comparisons thm11_half(PrimeEnv& env, const CheckParam& c) {
    const auto [r, t] = point(env, c.a);
    require(r <= env.half(), "needs <a>_p <= (p-1)/2");
    return one(s_half(env, c), thm11_half_rhs(env, r, t), 4);
}

// t = (a + <a>_p)/p, the sign examined by the diagnostic checks.
std::pair<u64, PAdic> t_plus(PrimeEnv& env, const CheckParam& c, std::string& note) {
    const u64 r = point(env, c.a).r;
    const Rational tp = (c.a + Rational(static_cast<unsigned long>(r))) / Rational(static_cast<unsigned long>(env.p()));
    const PAdic t = env.field().rational(tp);
    note = t.valuation() < 0 ? "t=(a+<a>)/p not p-integral (v=" + std::to_string(t.valuation()) + ")"
                             : "t=(a+<a>)/p p-integral";
    return {r, t};
}

Comparisons thm11_full_tplus(PrimeEnv& env, const CheckParam& c) {
    std::string note;
    const auto [r, t] = t_plus(env, c, note);
    return one(s_full(env, c), thm11_full_rhs(env, r, t), 4, note);
}

Comparisons thm11_half_tplus(PrimeEnv& env, const CheckParam& c) {
    std::string note;
    const auto [r, t] = t_plus(env, c, note);
    require(r <= env.half(), "needs <a>_p <= (p-1)/2");
    return one(s_half(env, c), thm11_half_rhs(env, r, t), 4, note);
}

Comparisons eq_1_0(PrimeEnv& env, const CheckParam&) {
    const PAdic rhs = env.integer(-2) * h1_half(env) - hk_over_k3(env, env.half()).shifted(3);
    return one(central_sum(env, 1, env.p() - 1), rhs, 4);
}

Comparisons eq_1_1(PrimeEnv& env, const CheckParam&) {
    return one(central_sum(env, env.half() + 1, env.p() - 1), env.rational(-21, 2) * h1_full(env), 4);
}

// ---- binomial products, tails, second-order sums ----------------------------

Comparisons lem23_full(PrimeEnv& env, const CheckParam& c) {
    const PAdic t = point(env, c.a).t;
    const u64 p = env.p();
    const auto h = mhs_prefixes({1}, p - 1, env.field());
    const PAdic front = t * (t + env.integer(1));
    Comparisons out;
    for (u64 k = 1; k < p; ++k) {
        const PAdic inv_k = env.field().reciprocal(k);
        const PAdic inner = env.integer(1) + (env.integer(2) * h[k] - inv_k - env.integer(2) * t * inv_k).shifted(1);
        const PAdic rhs = (front * inv_k * inv_k * inner).shifted(2);
        out.push_back({"k=" + std::to_string(k), lemma23_lhs(t, k, false, env.field()), rhs, 4});
        if (!congruent_mod(out.back().lhs, out.back().rhs, 4)) break;
    }
    return out;
}

Comparisons lem23_half(PrimeEnv& env, const CheckParam& c) {
    const PAdic t = point(env, c.a).t;
    const u64 m = env.half();
    const PAdic pt = t.shifted(1);
    PAdic o1 = env.field().zero();
    PAdic o2 = env.field().zero();
    Comparisons out;
    for (u64 k = 1; k <= m; ++k) {
        const PAdic odd = env.field().reciprocal(2 * k - 1);
        o1 += odd;
        o2 += odd * odd;
        const PAdic ptk = pt * env.field().reciprocal(k);  // pt/k
        const PAdic inner = env.integer(1) - ptk + (env.integer(2) * o1).shifted(1) + ptk * ptk +
                            (env.integer(2) * o1 * o1).shifted(2) - (env.integer(2) * ptk * o1).shifted(1) -
                            (env.integer(4) * t * o2).shifted(2);
        out.push_back({"k=" + std::to_string(k), lemma23_lhs(t, k, true, env.field()), ptk * inner, 4});
        if (!congruent_mod(out.back().lhs, out.back().rhs, 4)) break;
    }
    return out;
}

Comparisons lem24_full(PrimeEnv& env, const CheckParam& c) {
    const PAdic t = point(env, c.a).t;
    const PAdic lhs = s_sum(t.shifted(1), env.p() - 1, env.field());
    return one(lhs, (env.integer(4) * t * env.x()).shifted(2), 4);
}

Comparisons lem24_half(PrimeEnv& env, const CheckParam& c) {
    const PAdic t = point(env, c.a).t;
    const PAdic lhs = s_sum(t.shifted(1), env.half(), env.field());
    const PAdic rhs = ((env.integer(-12) * t * t + env.integer(14) * t) * env.x()).shifted(2);
    return one(lhs, rhs, 4);
}

PAdic pq_b(PrimeEnv& env) { return (env.q2() * b_p3(env)).shifted(1); }  // p q_p(2) B_{p-3}

Comparisons lem25_ds1(PrimeEnv& env, const CheckParam&) {
    const PAdic rhs = env.rational(-21, 2) * env.x() + env.integer(2) * pq_b(env) -
                      (env.rational(1, 2) * env.h31()).shifted(1);
    return one(odd_over_k2(env, env.half()), rhs, 2);
}

Comparisons lem25_ds2(PrimeEnv& env, const CheckParam&) {
    const PAdic rhs = env.integer(4) * env.q2() * b_p3(env) - env.h31();
    return one(hk_over_k3(env, env.half()), rhs, 1);
}

Comparisons lem25_ds3(PrimeEnv& env, const CheckParam&) {
    const PAdic rhs = env.rational(21, 4) * env.x() - pq_b(env) + h1m3(env).shifted(1) +
                      (env.rational(1, 4) * env.h31()).shifted(1);
    return one(odd2_over_k(env, env.half()), rhs, 2);
}

Comparisons lem_bridge(PrimeEnv& env, const CheckParam&) {
    return one(env.mhs({1, 3}, env.half()), env.integer(4) * h1m3(env), 1);
}

Comparisons lem26(PrimeEnv& env, const CheckParam&) {
    const u64 h = env.half();
    const PAdic lhs = odd_sq_over_k2(env, h) + odd_over_k3(env, h) + odd2_over_k2(env, h);
    return one(lhs, env.field().zero(), 1);
}

Comparisons lem31(PrimeEnv& env, const CheckParam&) {
    const PAdic& q = env.q2();
    const PAdic q2 = q * q;
    const PAdic rhs = env.integer(-2) * q + q2.shifted(1) - (env.rational(2, 3) * q2 * q).shifted(2) +
                      (env.rational(1, 2) * q2 * q2).shifted(3) + (env.rational(7, 2) * env.x()).shifted(2);
    return one(h1_half(env), rhs, 4);
}

Comparisons thm12(PrimeEnv& env, const CheckParam&) {
    const PAdic& q = env.q2();
    const PAdic q3 = q * q * q;
    const PAdic rhs = env.rational(-1, 3) * q3 + env.rational(7, 4) * env.x() +
                      (env.rational(5, 12) * q3 * q).shifted(1) + (env.rational(7, 6) * q * b_p3(env)).shifted(1) -
                      (env.rational(3, 8) * hk_over_k3(env, env.half())).shifted(1);
    return one(two_k_over_k3(env), rhs, 2);
}

Comparisons sun_2k_mod_p(PrimeEnv& env, const CheckParam&) {
    const PAdic& q = env.q2();
    const PAdic rhs = env.rational(-1, 3) * q * q * q - env.rational(7, 24) * b_p3(env);
    return one(two_k_over_k3(env), rhs, 1);
}

// ---- steps inside the proofs ----------------------------------------------

Comparisons proofstep_u1(PrimeEnv& env, const CheckParam&) {
    return one(odd_sq_over_k2(env, env.half()), env.integer(2) * h1m3(env), 1);
}

Comparisons proofstep_u2(PrimeEnv& env, const CheckParam&) {
    return one(odd2_over_k2(env, env.half()), env.integer(-2) * env.mhs({-2, 2}, env.p() - 1), 1);
}

Comparisons proofstep_u3(PrimeEnv& env, const CheckParam&) {
    const PAdic rhs = env.integer(4) * h1m3(env) - env.rational(1, 2) * env.mhs({1, 3}, env.half());
    return one(odd_over_k3(env, env.half()), rhs, 1);
}

Comparisons proofstep_h2k(PrimeEnv& env, const CheckParam&) {
    return one(h2k_over_k2(env, env.half()), env.integer(-9) * env.x(), 2);
}

Comparisons proofstep_1221(PrimeEnv& env, const CheckParam&) {
    const PAdic rhs = env.integer(-3) * env.x() - env.rational(2, 3) * pq_b(env) - env.h31().shifted(1);
    return one(env.mhs({2, 1}, env.half()), rhs, 2);
}

Comparisons x_cross(PrimeEnv& env, const CheckParam&) { return one(env.x_bernoulli(), env.x_harmonic(), 2); }

// ---- catalog ----------------------------------------------------------------

CheckDefinition def(std::string id, std::string description, int modulus,
                    std::function<Comparisons(PrimeEnv&, const CheckParam&)> eval,
                    std::function<std::vector<CheckParam>(const CheckOptions&)> params = single) {
    CheckDefinition d;
    d.id = std::move(id);
    d.description = std::move(description);
    d.modulus = modulus;
    d.params = std::move(params);
    d.evaluate = std::move(eval);
    return d;
}

std::vector<CheckDefinition> build() {
    auto forms = [](std::initializer_list<const char*> l) {
        auto v = labelled_forms(l);
        return [v](const CheckOptions&) { return v; };
    };
    std::vector<CheckDefinition> r;
    r.push_back(def("known-i", "H({a}^r;p-1) via B_{p-ar-2} (ar odd, mod p^3) or B_{p-ar-1} (ar even, mod p^2)", 3,
                    known_i, known_i_params));
    r.push_back(def("known-ii", "H(a;(p-1)/2) via q_p(2) or Bernoulli numbers", 2, known_ii, known_ii_params));
    r.push_back(def("known-iii", "H(a,b;p-1) == (-1)^b/(a+b) binom(a+b,a) B_{p-a-b} mod p", 1, known_iii, pair_params));
    r.push_back(def("known-iv", "H(a,b;(p-1)/2) mod p", 1, known_iv, pair_params));
    r.push_back(def("known-v", "H(-a;p-1) via B_{p-a} or B_{p-1-a}", 2, known_v, known_v_params));
    r.push_back(def("known-vi", "H(-a,b;p-1) == H(a,-b;p-1) == (1-2^{p-a-b})/(a+b) B_{p-a-b} mod p", 1, known_vi,
                    known_vi_params));
    r.push_back(def("known-vii-zero", "H(-4;p-1) == H(2,2;p-1) == H(1,3;p-1) == 0 mod p", 1, known_vii_zero,
                    forms({"H(-4)", "H(2,2)", "H(1,3)"})));
    r.push_back(def("known-vii-2m1", "H(2,-1;p-1) == -3X/2 - 7p q B_{p-3}/6 + p H(1,-3;p-1) mod p^2", 2,
                    known_vii_2m1));
    r.push_back(def("known-vii-cluster", "-H(1,2)/2 == H(2,1)/2 == H(-3) == -2H(1,-2) == 3X mod p^2", 2,
                    known_vii_cluster, forms({"-1/2*H(1,2)", "1/2*H(2,1)", "H(-3)", "-2*H(1,-2)"})));
    r.push_back(def("known-viii-a", "-2H_{p-1}/p == H(2;p-1) == 2H(2;(p-1)/2)/7 == -4pX mod p^3", 3, known_viii_a,
                    forms({"-2/p*H(1)", "H(2)", "2/7*H(2;h)"})));
    r.push_back(def("known-viii-b", "H(3;(p-1)/2) == 12X mod p^2", 2, known_viii_b));
    r.push_back(def("tauraso-6k", "sum_{k<p} binom(2k,k)^2/(k 16^k) == -2H_{(p-1)/2} mod p^3", 3, tauraso_6k));
    r.push_back(def("sun-6k-tail", "sum_{(p+1)/2<=k<p} binom(2k,k)^2/(k 16^k) == 7p^2 B_{p-3}/2 mod p^3", 3,
                    sun_6k_tail));
    r.push_back(def("tauraso-param", "S_{p-1}(a) == -2H_r + 2ptH(2;r) mod p^2", 2, tauraso_param, a_samples));
    r.push_back(def("sun-param", "S_{p-1}(a) mod p^3 with the -2p^2tB_{p-3}/3 and 2p^2tH(3;r) terms", 3, sun_param,
                    a_samples));
    r.push_back(def("thm11-full", "S_{p-1}(a) mod p^4, t=(a-<a>)/p", 4, thm11_full, a_samples));
    r.push_back(def("thm11-half", "S_{(p-1)/2}(a) mod p^4 for <a> <= (p-1)/2, t=(a-<a>)/p", 4, thm11_half,
                    a_samples));
    r.push_back(def("eq-1-0", "sum_{k<p} binom(2k,k)^2/(k 16^k) == -2H_{(p-1)/2} - p^3 sum H_k/k^3 mod p^4", 4,
                    eq_1_0));
    r.push_back(def("eq-1-1", "sum_{(p+1)/2<=k<p} binom(2k,k)^2/(k 16^k) == -21H_{p-1}/2 mod p^4", 4, eq_1_1));
    r.push_back(def("lem23-full", "binom(pt+k-1,p-1) binom(-pt-k-1,p-1) mod p^4 for all k", 4, lem23_full,
                    a_samples));
    r.push_back(def("lem23-half", "binom(pt+k-1,(p-1)/2) binom(-pt-k-1,(p-1)/2) mod p^4 for all k", 4, lem23_half,
                    a_samples));
    r.push_back(def("lem24-full", "S_{p-1}(pt) == 4p^2tX mod p^4", 4, lem24_full, a_samples));
    r.push_back(def("lem24-half", "S_{(p-1)/2}(pt) == -12p^2t^2X + 14p^2tX mod p^4", 4, lem24_half, a_samples));
    r.push_back(def("lem25-ds1", "sum O_k/k^2 == -21X/2 + 2pqB_{p-3} - p h31/2 mod p^2", 2, lem25_ds1));
    r.push_back(def("lem25-ds2", "sum H_k/k^3 == 4qB_{p-3} - h31 mod p", 1, lem25_ds2));
    r.push_back(def("lem25-ds3", "sum O^(2)_k/k == 21X/4 - pqB_{p-3} + pH(1,-3;p-1) + p h31/4 mod p^2", 2,
                    lem25_ds3));
    r.push_back(def("lem-bridge", "H(1,3;(p-1)/2) == 4H(1,-3;p-1) mod p", 1, lem_bridge));
    r.push_back(def("lem26", "sum O_k^2/k^2 + sum O_k/k^3 + sum O^(2)_k/k^2 == 0 mod p", 1, lem26));
    r.push_back(def("lem31", "H_{(p-1)/2} == -2q + pq^2 - 2p^2q^3/3 + p^3q^4/2 + 7p^2X/2 mod p^4", 4, lem31));
    r.push_back(def("thm12", "sum_{k<p} 2^k/k^3 mod p^2", 2, thm12));
    r.push_back(def("sun-2k-mod-p", "sum_{k<p} 2^k/k^3 == -q^3/3 - 7B_{p-3}/24 mod p", 1, sun_2k_mod_p));
    r.push_back(def("proofstep-u1", "sum O_k^2/k^2 == 2H(1,-3;p-1) mod p", 1, proofstep_u1));
    r.push_back(def("proofstep-u2", "sum O^(2)_k/k^2 == -2H(-2,2;p-1) mod p", 1, proofstep_u2));
    r.push_back(def("proofstep-u3", "sum O_k/k^3 == 4H(1,-3;p-1) - H(1,3;(p-1)/2)/2 mod p", 1, proofstep_u3));
    r.push_back(def("proofstep-h2k", "sum H_{2k}/k^2 == -9X mod p^2", 2, proofstep_h2k));
    r.push_back(def("proofstep-1221", "H(2,1;(p-1)/2) == -3X - 2pqB_{p-3}/3 - p h31 mod p^2", 2, proofstep_1221));
    r.push_back(def("x-cross", "X from Bernoulli numbers == -H(2;p-1)/(4p) mod p^2", 2, x_cross));

    auto diag = [](CheckDefinition d) {
        d.diagnostic = true;
        return d;
    };
    r.push_back(diag(def("thm11-full-tplus", "thm11-full with the printed t=(a+<a>)/p", 4, thm11_full_tplus,
                         a_samples)));
    r.push_back(diag(def("thm11-half-tplus", "thm11-half with the printed t=(a+<a>)/p", 4, thm11_half_tplus,
                         a_samples)));
    return r;
}

}  // namespace

const std::vector<CheckDefinition>& registry() {
    static const std::vector<CheckDefinition> catalog = build();
    return catalog;
}

}  // namespace supercong
