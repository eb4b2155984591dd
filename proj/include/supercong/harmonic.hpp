#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "supercong/padic.hpp"

namespace supercong {

/// Exponents (a_1, ..., a_m) of an alternating multiple harmonic sum
///   H(a_1,...,a_m; n) = sum over 1 <= k_1 < ... < k_m <= n of
///                       prod_i sign(a_i)^{k_i} / k_i^{|a_i|}.
class MhsSignature {
public:
    MhsSignature(std::initializer_list<int> exponents);
    explicit MhsSignature(std::vector<int> exponents);

    const std::vector<int>& exponents() const noexcept { return exponents_; }
    int depth() const noexcept { return static_cast<int>(exponents_.size()); }
    int weight() const noexcept;
    /// "(1,-3)"
    std::string str() const;

    friend bool operator==(const MhsSignature&, const MhsSignature&) = default;

private:
    std::vector<int> exponents_;
};

/// H(sig; n) by a single pass over k, carrying the partial sums of every
/// suffix-truncated signature. O(n * depth).
PAdic mhs(const MhsSignature& sig, u64 n, const Qp& field);

/// H(sig; k) for every k = 0..n from the same single pass.
std::vector<PAdic> mhs_prefixes(const MhsSignature& sig, u64 n, const Qp& field);

enum class PrefixFamily {
    harmonic,         // sum_{j<=k} 1/j^r
    odd,              // sum_{j<=k} 1/(2j-1)^r
    signed_harmonic,  // sum_{j<=k} (-1)^j/j^r
    h2k,              // H_{2k}
};

struct PrefixKind {
    PrefixFamily family = PrefixFamily::harmonic;
    int order = 1;

    static PrefixKind harmonic(int r = 1) { return {PrefixFamily::harmonic, r}; }
    static PrefixKind odd(int r = 1) { return {PrefixFamily::odd, r}; }
    static PrefixKind signed_harmonic(int r = 1) { return {PrefixFamily::signed_harmonic, r}; }
    static PrefixKind h2k() { return {PrefixFamily::h2k, 1}; }

    friend bool operator==(const PrefixKind&, const PrefixKind&) = default;
};

struct WeightFactor {
    PrefixKind kind;
    int power = 1;
};

/// Summand sign^k * c^k * k^{-a} * prod (prefix_k)^power.
struct WeightSpec {
    int outer_exponent = 1;
    bool alternating = false;
    Rational geometric = 1;
    std::vector<WeightFactor> factors;
};

PAdic nested_sum(const WeightSpec& spec, u64 n, const Qp& field);

/// sum_{j=1}^{k} 1/(2j-1)^r
PAdic odd_harmonic(int r, u64 k, const Qp& field);

}  // namespace supercong
