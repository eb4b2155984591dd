#include "supercong/padic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace supercong {

using detail::Digits;
using detail::Montgomery;

// ---------------------------------------------------------------------------
// Rational helpers

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw BadParameter("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s, 10));
        BigInt num(s.substr(0, slash), 10);
        BigInt den(s.substr(slash + 1), 10);
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw BadParameter("not a rational number: '" + text + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Word arithmetic

namespace {

inline void mul_full(u128 a, u128 b, u128& hi, u128& lo) {
    const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
    const u128 p00 = static_cast<u128>(a0) * b0;
    const u128 p01 = static_cast<u128>(a0) * b1;
    const u128 p10 = static_cast<u128>(a1) * b0;
    const u128 p11 = static_cast<u128>(a1) * b1;
    const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
    lo = (mid << 64) | static_cast<u64>(p00);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
}

// Montgomery reduction of hi*2^128 + lo < m * 2^128; m < 2^127.
inline u128 redc(const Montgomery& m, u128 hi, u128 lo) {
    const u128 u = lo * m.neg_inv;
    u128 h2, l2;
    mul_full(u, m.modulus, h2, l2);
    u128 t = hi + h2 + (lo != 0 ? 1 : 0);
    if (t >= m.modulus) t -= m.modulus;
    return t;
}

inline u128 mulmod(const Montgomery& m, u128 a, u128 b) {
    u128 hi, lo;
    mul_full(a, b, hi, lo);
    const u128 t = redc(m, hi, lo);
    mul_full(t, m.r2, hi, lo);
    return redc(m, hi, lo);
}

u64 inv_mod_u64(u64 a, u64 m) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
    while (new_r != 0) {
        const long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw DivisionByZero("residue not invertible");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<u64>(t);
}

BigInt word_to_big(u128 w) {
    BigInt r(static_cast<unsigned long>(static_cast<u64>(w >> 64)));
    r <<= 64;
    r += static_cast<unsigned long>(static_cast<u64>(w));
    return r;
}

u128 big_to_word(const BigInt& b) {
    // b is non-negative and below 2^128.
    const mpz_srcptr z = b.get_mpz_t();
    const size_t n = mpz_size(z);
    u128 w = 0;
    if (n > 0) w = mpz_getlimbn(z, 0);
    if (n > 1) w |= static_cast<u128>(mpz_getlimbn(z, 1)) << 64;
    return w;
}

BigInt to_big(const Digits& d) {
    if (const u128* w = std::get_if<u128>(&d)) return word_to_big(*w);
    return std::get<BigInt>(d);
}

bool digits_zero(const Digits& d) {
    if (const u128* w = std::get_if<u128>(&d)) return *w == 0;
    return std::get<BigInt>(d) == 0;
}

// Reduce a residue to modulus p^k, choosing storage by k.
Digits reduce(const PrimeContext& c, const Digits& d, int k) {
    if (c.fits_word(k)) {
        const u128 m = c.word_power(k);
        if (const u128* w = std::get_if<u128>(&d)) return *w < m ? *w : *w % m;
        BigInt r;
        mpz_mod(r.get_mpz_t(), std::get<BigInt>(d).get_mpz_t(), c.big_power(k).get_mpz_t());
        return big_to_word(r);
    }
    BigInt r;
    mpz_mod(r.get_mpz_t(), to_big(d).get_mpz_t(), c.big_power(k).get_mpz_t());
    return r;
}

Digits add_mod(const PrimeContext& c, const Digits& a, const Digits& b, int k) {
    if (c.fits_word(k)) {
        const u128 m = c.word_power(k);
        u128 s = std::get<u128>(a) + std::get<u128>(b);
        if (s >= m) s -= m;
        return s;
    }
    BigInt s = std::get<BigInt>(a) + std::get<BigInt>(b);
    if (s >= c.big_power(k)) s -= c.big_power(k);
    return s;
}

Digits neg_mod(const PrimeContext& c, const Digits& a, int k) {
    if (c.fits_word(k)) {
        const u128 w = std::get<u128>(a);
        return w == 0 ? w : c.word_power(k) - w;
    }
    const BigInt& b = std::get<BigInt>(a);
    if (b == 0) return b;
    return BigInt(c.big_power(k) - b);
}

Digits sub_mod(const PrimeContext& c, const Digits& a, const Digits& b, int k) {
    return add_mod(c, a, neg_mod(c, b, k), k);
}

Digits mul_mod(const PrimeContext& c, const Digits& a, const Digits& b, int k) {
    if (c.fits_word(k)) return mulmod(c.montgomery(k), std::get<u128>(a), std::get<u128>(b));
    BigInt r = std::get<BigInt>(a) * std::get<BigInt>(b);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), c.big_power(k).get_mpz_t());
    return r;
}

// a * p^d where a < p^(k-d): exact, no reduction needed.
Digits times_p_power(const PrimeContext& c, const Digits& a, int d, int k) {
    if (d == 0) return a;
    if (c.fits_word(k)) return std::get<u128>(a) * c.word_power(d);
    return BigInt(to_big(a) * c.big_power(d));
}

// Inverse of a unit modulo p^k.
Digits inv_mod(const PrimeContext& c, const Digits& a, int k) {
    const u64 p = c.prime();
    if (c.fits_word(k)) {
        const u128 w = std::get<u128>(a);
        const Montgomery& m = c.montgomery(k);
        u128 x = inv_mod_u64(static_cast<u64>(w % p), p);
        for (int prec = 1; prec < k; prec *= 2) {
            const u128 ax = mulmod(m, w, x);
            const u128 two_minus = ax <= 2 ? 2 - ax : m.modulus - (ax - 2);
            x = mulmod(m, x, two_minus % m.modulus);
        }
        return x;
    }
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), std::get<BigInt>(a).get_mpz_t(), c.big_power(k).get_mpz_t()) == 0)
        throw DivisionByZero("residue not invertible");
    return r;
}

// Divide out every factor of p from a nonzero residue mod p^k. Returns the
// count; the quotient is left reduced mod p^(k - count).
int strip_p(const PrimeContext& c, Digits& a, int k) {
    int count = 0;
    if (u128* w = std::get_if<u128>(&a)) {
        const u128 inv = c.inv_p_word(), limit = c.div_limit_word();
        for (;;) {
            const u128 q = *w * inv;
            if (q > limit) break;
            *w = q;
            ++count;
        }
    } else {
        BigInt& b = std::get<BigInt>(a);
        const BigInt pp(static_cast<unsigned long>(c.prime()));
        count = static_cast<int>(mpz_remove(b.get_mpz_t(), b.get_mpz_t(), pp.get_mpz_t()));
    }
    if (count > 0) a = reduce(c, a, k - count);
    return count;
}

Digits digits_from_big(const PrimeContext& c, const BigInt& b, int k) {
    return reduce(c, Digits(b), k);
}

void check_digits(int digits) {
    if (digits < 1 || digits > PrimeContext::kMaxDigits)
        throw BadParameter("digit count must lie in [1, " +
                           std::to_string(PrimeContext::kMaxDigits) + "]");
}

bool is_odd_prime(u64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (u64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimeContext

PrimeContext::PrimeContext(u64 p, Backend backend) : p_(p), backend_(backend) {
    const BigInt pp(static_cast<unsigned long>(p));
    big_pow_[0] = 1;
    for (int k = 1; k <= kMaxDigits; ++k) big_pow_[k] = big_pow_[k - 1] * pp;

    const BigInt word_bound = BigInt(1) << 126;
    word_limit_ = 0;
    if (backend == Backend::automatic) {
        while (word_limit_ < kMaxDigits && big_pow_[word_limit_ + 1] < word_bound) ++word_limit_;
    }
    word_pow_[0] = 1;
    for (int k = 1; k <= word_limit_; ++k) {
        word_pow_[k] = word_pow_[k - 1] * p;
        Montgomery& m = mont_[k];
        m.modulus = word_pow_[k];
        u128 inv = m.modulus;
        for (int i = 0; i < 7; ++i) inv *= 2 - m.modulus * inv;
        m.neg_inv = 0 - inv;
        u128 r = (0 - m.modulus) % m.modulus;  // 2^128 mod m
        for (int i = 0; i < 128; ++i) {
            r <<= 1;
            if (r >= m.modulus) r -= m.modulus;
        }
        m.r2 = r;
    }
    u128 inv = p;
    for (int i = 0; i < 7; ++i) inv *= 2 - static_cast<u128>(p) * inv;
    inv_p_ = inv;
    div_limit_ = (~static_cast<u128>(0)) / p;
}

const PrimeContext& PrimeContext::get(u64 p, Backend backend) {
    static std::mutex mutex;
    static std::map<std::pair<u64, Backend>, std::unique_ptr<PrimeContext>> interned;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = interned.find({p, backend});
    if (it != interned.end()) return *it->second;
    if (p >= (u64{1} << 31) || !is_odd_prime(p))
        throw BadParameter("not an odd prime below 2^31: " + std::to_string(p));
    auto ctx = std::unique_ptr<PrimeContext>(new PrimeContext(p, backend));
    const PrimeContext& ref = *ctx;
    interned.emplace(std::make_pair(p, backend), std::move(ctx));
    return ref;
}

// ---------------------------------------------------------------------------
// PAdic construction

PAdic PAdic::exact_zero(const PrimeContext& ctx) { return PAdic(&ctx, 0, 0, u128{0}, true); }

PAdic PAdic::approximate_zero(const PrimeContext& ctx, int absolute_precision) {
    return PAdic(&ctx, absolute_precision, 0, u128{0}, false);
}

PAdic PAdic::from_integer(long long n, const PrimeContext& ctx, int digits) {
    check_digits(digits);
    if (n == 0) return exact_zero(ctx);
    const bool negative = n < 0;
    u64 m = negative ? 0 - static_cast<u64>(n) : static_cast<u64>(n);
    int v = 0;
    while (m % ctx.prime() == 0) {
        m /= ctx.prime();
        ++v;
    }
    Digits u;
    if (ctx.fits_word(digits)) {
        const u128 mod = ctx.word_power(digits);
        u128 w = m < mod ? u128{m} : u128{m} % mod;
        if (negative) w = mod - w;
        u = w;
    } else {
        BigInt b(static_cast<unsigned long>(m));
        if (negative) b = -b;
        u = digits_from_big(ctx, b, digits);
    }
    return PAdic(&ctx, v, digits, std::move(u), false);
}

PAdic PAdic::from_integer(const BigInt& n, const PrimeContext& ctx, int digits) {
    return from_rational(n, BigInt(1), ctx, digits);
}

PAdic PAdic::from_rational(const BigInt& num, const BigInt& den, const PrimeContext& ctx,
                           int digits) {
    check_digits(digits);
    if (den == 0) throw DivisionByZero("from_rational: zero denominator");
    if (num == 0) return exact_zero(ctx);
    const BigInt pp(static_cast<unsigned long>(ctx.prime()));
    BigInt a = num, b = den;
    if (b < 0) {
        a = -a;
        b = -b;
    }
    const long va = static_cast<long>(mpz_remove(a.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t()));
    const long vb = static_cast<long>(mpz_remove(b.get_mpz_t(), b.get_mpz_t(), pp.get_mpz_t()));
    const BigInt& mod = ctx.big_power(digits);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), mod.get_mpz_t());
    BigInt u = a * inv;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    return PAdic(&ctx, static_cast<int>(va - vb), digits, digits_from_big(ctx, u, digits), false);
}

PAdic PAdic::from_rational(const Rational& q, const PrimeContext& ctx, int digits) {
    return from_rational(q.get_num(), q.get_den(), ctx, digits);
}

PAdic PAdic::from_residue(const BigInt& r, const PrimeContext& ctx, int absolute_precision) {
    check_digits(absolute_precision);
    BigInt m;
    mpz_mod(m.get_mpz_t(), r.get_mpz_t(), ctx.big_power(absolute_precision).get_mpz_t());
    if (m == 0) return approximate_zero(ctx, absolute_precision);
    const BigInt pp(static_cast<unsigned long>(ctx.prime()));
    const int v = static_cast<int>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
    const int n = absolute_precision - v;
    return PAdic(&ctx, v, n, digits_from_big(ctx, m, n), false);
}

PAdic from_rational(long long num, long long den, u64 p, int digits) {
    return PAdic::from_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)),
                                PrimeContext::get(p), digits);
}

// ---------------------------------------------------------------------------
// PAdic queries

int PAdic::absolute_precision() const noexcept {
    return exact_zero_ ? kInfinity : valuation_ + digits_;
}

BigInt PAdic::unit() const {
    if (is_zero()) return 0;
    return to_big(unit_);
}

BigInt PAdic::residue(int e) const {
    if (exact_zero_) return 0;
    if (absolute_precision() < e)
        throw InsufficientPrecision("residue mod p^" + std::to_string(e) + " of " + str());
    if (digits_ == 0 || valuation_ >= e) return 0;
    if (valuation_ < 0) throw BadParameter("residue of a non-integral value " + str());
    BigInt r = to_big(reduce(*ctx_, unit_, e - valuation_));
    return r * ctx_->big_power(valuation_);
}

bool operator==(const PAdic& x, const PAdic& y) {
    if (x.ctx_ != y.ctx_ || x.exact_zero_ != y.exact_zero_) return false;
    if (x.exact_zero_) return true;
    return x.valuation_ == y.valuation_ && x.digits_ == y.digits_ && x.unit() == y.unit();
}

std::string PAdic::render(int e) const {
    const std::string p = std::to_string(prime());
    const std::string modulus = " mod " + p + "^" + std::to_string(e);
    if (!exact_zero_ && absolute_precision() < e) {
        if (digits_ == 0) return "O(" + p + "^" + std::to_string(valuation_) + ")";
        const int k = digits_;
        return p + "^" + std::to_string(valuation_) + " * " + unit().get_str() + " mod " + p + "^" +
               std::to_string(valuation_ + k);
    }
    if (is_zero() || valuation_ >= e) return "0" + modulus;
    const int k = std::min(digits_, e - valuation_);
    return p + "^" + std::to_string(valuation_) + " * " + to_big(reduce(*ctx_, unit_, k)).get_str() +
           modulus;
}

std::string PAdic::str() const {
    const std::string p = std::to_string(prime());
    if (exact_zero_) return "0";
    if (digits_ == 0) return "O(" + p + "^" + std::to_string(valuation_) + ")";
    std::ostringstream os;
    os << p << "^" << valuation_ << " * " << unit().get_str() << " (" << digits_ << " digits)";
    return os.str();
}

// ---------------------------------------------------------------------------
// PAdic arithmetic

PAdic PAdic::operator-() const {
    if (is_zero()) return *this;
    return PAdic(ctx_, valuation_, digits_, neg_mod(*ctx_, unit_, digits_), false);
}

PAdic PAdic::inverse() const {
    if (exact_zero_) throw DivisionByZero("inverse of exact zero");
    if (digits_ == 0) throw PrecisionExhausted("inverse of " + str() + ": no known digits");
    return PAdic(ctx_, -valuation_, digits_, inv_mod(*ctx_, unit_, digits_), false);
}

PAdic PAdic::pow(u64 e) const {
    if (e == 0) return from_integer(1, *ctx_, digits_ > 0 ? digits_ : PrimeContext::kMaxDigits);
    PAdic base = *this;
    PAdic result = *this;
    --e;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

PAdic PAdic::shifted(int k) const {
    if (exact_zero_) return *this;
    PAdic r = *this;
    r.valuation_ += k;
    return r;
}

PAdic PAdic::with_absolute_precision(int absolute_precision) const {
    if (exact_zero_) return *this;
    if (digits_ == 0)
        return approximate_zero(*ctx_, std::min(valuation_, absolute_precision));
    if (valuation_ >= absolute_precision) return approximate_zero(*ctx_, absolute_precision);
    const int n = std::min(digits_, absolute_precision - valuation_);
    if (n == digits_) return *this;
    return PAdic(ctx_, valuation_, n, reduce(*ctx_, unit_, n), false);
}

PAdic& PAdic::operator+=(const PAdic& y) { return *this = add(*this, y); }
PAdic& PAdic::operator-=(const PAdic& y) { return *this = sub(*this, y); }
PAdic& PAdic::operator*=(const PAdic& y) { return *this = mul(*this, y); }
PAdic& PAdic::operator/=(const PAdic& y) { return *this = mul(*this, invert(y)); }

namespace {
void check_same_prime(const PAdic& x, const PAdic& y) {
    if (&x.context() != &y.context()) {
        if (x.prime() != y.prime())
            throw BadParameter("operands over different primes " + std::to_string(x.prime()) +
                               " and " + std::to_string(y.prime()));
        throw BadParameter("operands from different backends");
    }
}
}  // namespace

PAdic add(const PAdic& x, const PAdic& y) {
    check_same_prime(x, y);
    if (x.exact_zero_) return y;
    if (y.exact_zero_) return x;
    const int ax = x.absolute_precision(), ay = y.absolute_precision();
    const int a = std::min(ax, ay);
    if (x.digits_ == 0) return y.with_absolute_precision(a);
    if (y.digits_ == 0) return x.with_absolute_precision(a);

    const PAdic& lo = x.valuation_ <= y.valuation_ ? x : y;
    const PAdic& hi = x.valuation_ <= y.valuation_ ? y : x;
    const PrimeContext& c = *x.ctx_;
    const int k = a - lo.valuation_;
    const int d = hi.valuation_ - lo.valuation_;
    Digits s = reduce(c, lo.unit_, k);
    if (d < k) {
        const Digits t = times_p_power(c, reduce(c, hi.unit_, k - d), d, k);
        s = add_mod(c, s, t, k);
    }
    if (d > 0) return PAdic(x.ctx_, lo.valuation_, k, std::move(s), false);
    if (digits_zero(s)) {
        if (x.digits_ == y.digits_) return PAdic::exact_zero(c);
        throw PrecisionExhausted("cancellation left no known digits: " + x.str() + " + " + y.str());
    }
    const int strip = strip_p(c, s, k);
    return PAdic(x.ctx_, lo.valuation_ + strip, k - strip, std::move(s), false);
}

PAdic sub(const PAdic& x, const PAdic& y) { return add(x, -y); }

PAdic mul(const PAdic& x, const PAdic& y) {
    check_same_prime(x, y);
    if (x.exact_zero_ || y.exact_zero_) return PAdic::exact_zero(*x.ctx_);
    if (x.digits_ == 0 || y.digits_ == 0) {
        const int vx = x.valuation_, vy = y.valuation_;
        return PAdic::approximate_zero(*x.ctx_, vx + vy);
    }
    const PrimeContext& c = *x.ctx_;
    const int n = std::min(x.digits_, y.digits_);
    Digits u = mul_mod(c, reduce(c, x.unit_, n), reduce(c, y.unit_, n), n);
    return PAdic(x.ctx_, x.valuation_ + y.valuation_, n, std::move(u), false);
}

PAdic invert(const PAdic& x) { return x.inverse(); }

PAdic arith(ArithOp op, const PAdic& x, const PAdic& y) {
    switch (op) {
        case ArithOp::add: return add(x, y);
        case ArithOp::sub: return sub(x, y);
        case ArithOp::mul: return mul(x, y);
    }
    throw BadParameter("unknown arithmetic operation");
}

bool congruent_mod(const PAdic& x, const PAdic& y, int e) {
    check_same_prime(x, y);
    if (x.absolute_precision() < e || y.absolute_precision() < e)
        throw InsufficientPrecision("congruence mod p^" + std::to_string(e) + " needs both sides to p^" +
                                    std::to_string(e) + "; have " + x.str() + " and " + y.str());
    const int vx = x.is_zero() ? PAdic::kInfinity : x.valuation_;
    const int vy = y.is_zero() ? PAdic::kInfinity : y.valuation_;
    if (std::min(vx, vy) >= e) return true;
    if (vx != vy) return false;
    const PrimeContext& c = *x.ctx_;
    const int k = e - vx;
    const Digits ux = reduce(c, x.unit_, k);
    const Digits uy = reduce(c, y.unit_, k);
    return to_big(ux) == to_big(uy);
}

// ---------------------------------------------------------------------------
// Qp

Qp::Qp(u64 p, int digits, Backend backend) : Qp(PrimeContext::get(p, backend), digits) {}

Qp::Qp(const PrimeContext& ctx, int digits) : ctx_(&ctx), digits_(digits) { check_digits(digits); }

PAdic Qp::rational(long long num, long long den) const {
    if (den == 1) return integer(num);
    return PAdic::from_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)), *ctx_,
                                digits_);
}

PAdic Qp::reciprocal(u64 k) const {
    if (k == 0) throw DivisionByZero("reciprocal of 0");
    return integer(static_cast<long long>(k)).inverse();
}

// ---------------------------------------------------------------------------
// ResidueRing

ResidueRing::ResidueRing(const PrimeContext& ctx, int k) : ctx_(&ctx), k_(k) { check_digits(k); }

ResidueRing::Element ResidueRing::from_integer(long long n) const {
    if (ctx_->fits_word(k_) && n >= 0) {
        const u128 m = ctx_->word_power(k_);
        const u128 w = static_cast<u128>(static_cast<u64>(n));
        return w < m ? w : w % m;
    }
    return digits_from_big(*ctx_, BigInt(static_cast<long>(n)), k_);
}

ResidueRing::Element ResidueRing::from_big(const BigInt& n) const {
    return digits_from_big(*ctx_, n, k_);
}

ResidueRing::Element ResidueRing::add(const Element& a, const Element& b) const {
    return add_mod(*ctx_, a, b, k_);
}

ResidueRing::Element ResidueRing::sub(const Element& a, const Element& b) const {
    return sub_mod(*ctx_, a, b, k_);
}

ResidueRing::Element ResidueRing::mul(const Element& a, const Element& b) const {
    return mul_mod(*ctx_, a, b, k_);
}

ResidueRing::Element ResidueRing::pow(const Element& a, u64 e) const {
    Element result = from_integer(1);
    Element base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

bool ResidueRing::is_zero(const Element& a) const { return digits_zero(a); }

BigInt ResidueRing::to_big(const Element& a) const { return supercong::to_big(a); }

PAdic ResidueRing::to_padic(const Element& a) const {
    return PAdic::from_residue(to_big(a), *ctx_, k_);
}

}  // namespace supercong
