#pragma once

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace supercong {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

using BigInt = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Addition or subtraction cancelled every known digit of two values that
/// were not exact negatives of each other.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

/// A congruence was requested modulo a higher power of p than the operands
/// know. Always a precision-planning bug, never a mathematical verdict.
class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class BadParameter : public Error {
public:
    using Error::Error;
};

/// Canonical rational num/den (den != 0).
Rational make_rational(const BigInt& num, const BigInt& den);
/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

enum class Backend { automatic, bignum };

namespace detail {

struct Montgomery {
    u128 modulus = 0;
    u128 neg_inv = 0;  // -modulus^{-1} mod 2^128
    u128 r2 = 0;       // 2^256 mod modulus
};

// An integer residue modulo p^k, stored in a machine word when p^k < 2^126.
using Digits = std::variant<u128, BigInt>;

}  // namespace detail

/// Per-prime constants shared by every value over that prime: powers of p
/// and Montgomery parameters for the 128-bit path. Contexts are interned and
/// live for the whole program, so values hold a plain pointer to them.
class PrimeContext {
public:
    static constexpr int kMaxDigits = 64;

    /// Interned context for an odd prime p < 2^31. Throws BadParameter otherwise.
    static const PrimeContext& get(u64 p, Backend backend = Backend::automatic);

    PrimeContext(const PrimeContext&) = delete;
    PrimeContext& operator=(const PrimeContext&) = delete;

    u64 prime() const noexcept { return p_; }
    Backend backend() const noexcept { return backend_; }

    /// Largest k such that residues mod p^k use the 128-bit path.
    int word_limit() const noexcept { return word_limit_; }
    bool fits_word(int k) const noexcept { return k <= word_limit_; }

    u128 word_power(int k) const { return word_pow_[k]; }
    const detail::Montgomery& montgomery(int k) const { return mont_[k]; }
    const BigInt& big_power(int k) const { return big_pow_[k]; }

    u128 inv_p_word() const noexcept { return inv_p_; }
    u128 div_limit_word() const noexcept { return div_limit_; }

private:
    PrimeContext(u64 p, Backend backend);

    u64 p_;
    Backend backend_;
    int word_limit_ = 0;
    u128 word_pow_[kMaxDigits + 1] = {};
    detail::Montgomery mont_[kMaxDigits + 1] = {};
    BigInt big_pow_[kMaxDigits + 1];
    u128 inv_p_ = 0;      // p^{-1} mod 2^128
    u128 div_limit_ = 0;  // floor((2^128 - 1) / p)
};

/// An element of Q_p with capped relative precision: p^v * u with the unit u
/// known modulo p^N. Exact zero is a distinguished value; an "approximate
/// zero" O(p^e) (no known digits, absolute precision e) arises only from
/// explicit precision capping or from residues known to vanish mod p^e.
class PAdic {
public:
    static constexpr int kInfinity = INT_MAX;

    static PAdic exact_zero(const PrimeContext& ctx);
    static PAdic approximate_zero(const PrimeContext& ctx, int absolute_precision);
    static PAdic from_integer(long long n, const PrimeContext& ctx, int digits);
    static PAdic from_integer(const BigInt& n, const PrimeContext& ctx, int digits);
    static PAdic from_rational(const BigInt& num, const BigInt& den, const PrimeContext& ctx,
                               int digits);
    static PAdic from_rational(const Rational& q, const PrimeContext& ctx, int digits);
    /// The integer r read as a value known modulo p^absolute_precision.
    static PAdic from_residue(const BigInt& r, const PrimeContext& ctx, int absolute_precision);

    const PrimeContext& context() const noexcept { return *ctx_; }
    u64 prime() const noexcept { return ctx_->prime(); }

    bool is_exact_zero() const noexcept { return exact_zero_; }
    /// True for exact zero and for O(p^e).
    bool is_zero() const noexcept { return exact_zero_ || digits_ == 0; }

    /// kInfinity for exact zero; the absolute precision for O(p^e).
    int valuation() const noexcept { return exact_zero_ ? kInfinity : valuation_; }
    int digits() const noexcept { return digits_; }
    int absolute_precision() const noexcept;
    /// The unit as an integer in [1, p^N), or 0 for zeros.
    BigInt unit() const;

    /// Value modulo p^e as an integer in [0, p^e). Requires v >= 0 and
    /// absolute precision >= e.
    BigInt residue(int e) const;

    PAdic operator-() const;
    PAdic inverse() const;
    PAdic pow(u64 e) const;
    /// Exact multiplication by p^k (k may be negative).
    PAdic shifted(int k) const;
    /// Forget every digit at or beyond p^absolute_precision.
    PAdic with_absolute_precision(int absolute_precision) const;

    PAdic& operator+=(const PAdic& y);
    PAdic& operator-=(const PAdic& y);
    PAdic& operator*=(const PAdic& y);
    PAdic& operator/=(const PAdic& y);

    /// Representation equality: same prime, valuation, digits and unit.
    friend bool operator==(const PAdic& x, const PAdic& y);

    /// "p^v * u mod p^e", with u reduced to the digits that matter mod p^e.
    std::string render(int e) const;
    /// Debug form "p^v * u (N digits)".
    std::string str() const;

private:
    PAdic(const PrimeContext* ctx, int v, int n, detail::Digits u, bool exact_zero)
        : ctx_(ctx), valuation_(v), digits_(n), unit_(std::move(u)), exact_zero_(exact_zero) {}

    friend PAdic add(const PAdic& x, const PAdic& y);
    friend PAdic mul(const PAdic& x, const PAdic& y);
    friend bool congruent_mod(const PAdic& x, const PAdic& y, int e);

    const PrimeContext* ctx_;
    int valuation_;
    int digits_;
    detail::Digits unit_;
    bool exact_zero_;
};

PAdic add(const PAdic& x, const PAdic& y);
PAdic sub(const PAdic& x, const PAdic& y);
PAdic mul(const PAdic& x, const PAdic& y);
PAdic invert(const PAdic& x);

enum class ArithOp { add, sub, mul };
PAdic arith(ArithOp op, const PAdic& x, const PAdic& y);

inline PAdic operator+(const PAdic& x, const PAdic& y) { return add(x, y); }
inline PAdic operator-(const PAdic& x, const PAdic& y) { return sub(x, y); }
inline PAdic operator*(const PAdic& x, const PAdic& y) { return mul(x, y); }
inline PAdic operator/(const PAdic& x, const PAdic& y) { return mul(x, invert(y)); }

/// v_p(x - y) >= e. Throws InsufficientPrecision when either operand is
/// known to less than p^e.
bool congruent_mod(const PAdic& x, const PAdic& y, int e);

PAdic from_rational(long long num, long long den, u64 p, int digits);

/// A prime together with a working digit count: the handle every sum and
/// closed form is evaluated in.
class Qp {
public:
    Qp(u64 p, int digits, Backend backend = Backend::automatic);
    Qp(const PrimeContext& ctx, int digits);

    const PrimeContext& context() const noexcept { return *ctx_; }
    u64 prime() const noexcept { return ctx_->prime(); }
    int digits() const noexcept { return digits_; }

    PAdic zero() const { return PAdic::exact_zero(*ctx_); }
    PAdic one() const { return integer(1); }
    PAdic integer(long long n) const { return PAdic::from_integer(n, *ctx_, digits_); }
    PAdic integer(const BigInt& n) const { return PAdic::from_integer(n, *ctx_, digits_); }
    PAdic rational(long long num, long long den) const;
    PAdic rational(const Rational& q) const { return PAdic::from_rational(q, *ctx_, digits_); }
    /// 1/k for 1 <= k.
    PAdic reciprocal(u64 k) const;
    /// p^k with N digits.
    PAdic p_power(int k) const { return one().shifted(k); }

private:
    const PrimeContext* ctx_;
    int digits_;
};

/// Integers modulo p^k with a fixed modulus; used where a computation is
/// naturally over Z/p^k (difference tables, power sums) rather than Q_p.
class ResidueRing {
public:
    using Element = detail::Digits;

    ResidueRing(const PrimeContext& ctx, int k);

    int exponent() const noexcept { return k_; }
    const PrimeContext& context() const noexcept { return *ctx_; }

    Element from_integer(long long n) const;
    Element from_big(const BigInt& n) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(const Element& a, u64 e) const;
    bool is_zero(const Element& a) const;
    BigInt to_big(const Element& a) const;
    /// The residue as a p-adic value with absolute precision k.
    PAdic to_padic(const Element& a) const;

private:
    const PrimeContext* ctx_;
    int k_;
};

}  // namespace supercong
