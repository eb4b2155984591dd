#pragma once

#include <string>
#include <vector>

#include "supercong/harmonic.hpp"
#include "supercong/padic.hpp"

// Exact rational reference implementations. Deliberately naive: these are the
// independent side of every test that checks the p-adic code.
namespace supercong::oracle {

/// H(sig; n) by enumerating every index tuple.
Rational mhs_exact(const MhsSignature& sig, u64 n);

/// H(sig; k) for k = 0..n, enumerating tuples grouped by their largest index.
std::vector<Rational> mhs_exact_prefixes(const MhsSignature& sig, u64 n);

/// a(a-1)...(a-k+1)/k!
Rational binomial(const Rational& a, u64 k);

/// sum_{k=1}^{n} binom(a,k) binom(-1-a,k) / k
Rational s_sum_exact(const Rational& a, u64 n);

/// B_0..B_nmax from B_n = -1/(n+1) sum_{k<n} binom(n+1,k) B_k.
std::vector<Rational> bernoulli_table(u64 nmax);

/// sum_{j=1}^{k} 1/(2j-1)^r
Rational odd_harmonic_exact(int r, u64 k);

struct IdentityReport {
    std::string id;
    u64 n = 0;
    Rational lhs;
    Rational rhs;
    bool equal = false;
    /// lhs - rhs when they differ.
    std::string detail() const;
};

enum class SigmaIdentity { weighted, plain };
enum class StructuralIdentity { shuffle11, shuffle22, telescope };

std::string name(SigmaIdentity which);
std::string name(StructuralIdentity which);

/// weighted: sum_k binom(n,k) (-4)^k/(k^2 binom(2k,k)) O_k = -2 sum_k O^{(2)}_k / k
/// plain:    sum_k binom(n,k) (-4)^k/(k^2 binom(2k,k))     = -2 sum_k O_k / k
IdentityReport sigma_identity(SigmaIdentity which, u64 n);

/// shuffle11: H_n^2 = 2 H(1,1;n) + H(2;n)
/// shuffle22: 2 H(2,2;n) = H(2;n)^2 - H(4;n)
/// telescope: S_n(a) - S_n(a-1) = -2/a + (2/a) binom(a-1,n) binom(-a-1,n)
/// `a` is used by telescope only and must be nonzero.
IdentityReport structural_identity(StructuralIdentity which, u64 n, const Rational& a = 1);

/// Every identity for n = 1..n_max, telescope at each point in `points`.
/// Shares the expensive enumerations across n.
std::vector<IdentityReport> identity_table(u64 n_max, const std::vector<Rational>& points);

}  // namespace supercong::oracle
