#pragma once

#include <map>

#include "supercong/padic.hpp"

namespace supercong {

/// B_n as a p-adic value, known to at least the field's digit count.
/// Uses B_n = sum_{k=0}^{n} 1/(k+1) sum_{j=0}^{k} (-1)^j binom(k,j) j^n,
/// evaluated with a forward-difference table over Z/p^M for buffer digits M.
/// Throws BadParameter when n > 0 and (p-1) | n.
PAdic bernoulli(u64 n, const Qp& field);

/// B_n modulo p^2 from the power sum sum_{k=1}^{p-1} k^n == p B_n (mod p^3).
/// Valid for even n >= 4 with (p-1) dividing neither n nor n-2 (exact values
/// for n <= 2, and 0 for odd n > 1). O(p log n).
PAdic bernoulli_power_sum(u64 n, const PrimeContext& ctx);

/// Memoized B_n for one (prime, digits). Not thread-safe; build one per worker.
class BernoulliTable {
public:
    explicit BernoulliTable(Qp field) : field_(field) {}

    const Qp& field() const noexcept { return field_; }
    const PAdic& get(u64 n);

private:
    Qp field_;
    std::map<u64, PAdic> values_;
};

/// B_n(x) = sum_k binom(n,k) B_k x^{n-k}.
PAdic bernoulli_poly(u64 n, const Rational& x, const Qp& field);

/// q_p(a) = (a^{p-1} - 1)/p.
PAdic fermat_quotient(u64 a, const Qp& field);

enum class XMethod { bernoulli, harmonic };

/// X = B_{p-3}/(p-3) - B_{2p-4}/(4p-8).
///   bernoulli: from the Bernoulli numbers, capped at the field's digits.
///   harmonic:  -H(2;p-1)/(4p), known modulo p^2 only.
/// Requires p > 5.
PAdic x_constant(const Qp& field, XMethod method);
PAdic x_constant(BernoulliTable& table);

}  // namespace supercong
