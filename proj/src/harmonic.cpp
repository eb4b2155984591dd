#include "supercong/harmonic.hpp"

#include <algorithm>
#include <cstdlib>

namespace supercong {

MhsSignature::MhsSignature(std::initializer_list<int> exponents)
    : MhsSignature(std::vector<int>(exponents)) {}

MhsSignature::MhsSignature(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw BadParameter("harmonic signature must have depth >= 1");
    for (int a : exponents_)
        if (a == 0) throw BadParameter("harmonic signature exponents must be nonzero");
}

int MhsSignature::weight() const noexcept {
    int w = 0;
    for (int a : exponents_) w += std::abs(a);
    return w;
}

std::string MhsSignature::str() const {
    std::string s = "(";
    for (size_t i = 0; i < exponents_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents_[i]);
    }
    return s + ")";
}

namespace {

// Powers 1/k, 1/k^2, ..., 1/k^max of one index.
std::vector<PAdic> reciprocal_powers(u64 k, int max_power, const Qp& field) {
    std::vector<PAdic> powers;
    powers.reserve(max_power);
    powers.push_back(field.reciprocal(k));
    for (int e = 2; e <= max_power; ++e) powers.push_back(powers.back() * powers.front());
    return powers;
}

int max_abs_exponent(const MhsSignature& sig) {
    int m = 0;
    for (int a : sig.exponents()) m = std::max(m, std::abs(a));
    return m;
}

// partial[i] holds H(a_1..a_i; k) after step k; partial[0] = 1.
void mhs_step(const MhsSignature& sig, u64 k, int max_power, const Qp& field,
              std::vector<PAdic>& partial) {
    const auto inv = reciprocal_powers(k, max_power, field);
    const auto& a = sig.exponents();
    for (int i = sig.depth(); i >= 1; --i) {
        const PAdic& below = partial[i - 1];
        if (below.is_exact_zero()) continue;
        const int e = a[i - 1];
        PAdic term = inv[std::abs(e) - 1] * below;
        if (e < 0 && (k & 1)) term = -term;
        partial[i] += term;
    }
}

}  // namespace

PAdic mhs(const MhsSignature& sig, u64 n, const Qp& field) {
    std::vector<PAdic> partial(sig.depth() + 1, field.zero());
    partial[0] = field.one();
    const int max_power = max_abs_exponent(sig);
    for (u64 k = 1; k <= n; ++k) mhs_step(sig, k, max_power, field, partial);
    return partial.back();
}

std::vector<PAdic> mhs_prefixes(const MhsSignature& sig, u64 n, const Qp& field) {
    std::vector<PAdic> partial(sig.depth() + 1, field.zero());
    partial[0] = field.one();
    const int max_power = max_abs_exponent(sig);
    std::vector<PAdic> out;
    out.reserve(n + 1);
    out.push_back(partial.back());
    for (u64 k = 1; k <= n; ++k) {
        mhs_step(sig, k, max_power, field, partial);
        out.push_back(partial.back());
    }
    return out;
}

namespace {

class PrefixAccumulator {
public:
    PrefixAccumulator(PrefixKind kind, const Qp& field) : kind_(kind), value_(field.zero()) {
        if (kind.order < 1) throw BadParameter("prefix order must be >= 1");
    }

    const PrefixKind& kind() const { return kind_; }
    const PAdic& value() const { return value_; }

    // Extend the prefix from k-1 to k. inv_k holds 1/k^e for e = 1..
    void advance(u64 k, const std::vector<PAdic>& inv_k, const Qp& field) {
        switch (kind_.family) {
            case PrefixFamily::harmonic: value_ += inv_k[kind_.order - 1]; break;
            case PrefixFamily::signed_harmonic:
                if (k & 1)
                    value_ -= inv_k[kind_.order - 1];
                else
                    value_ += inv_k[kind_.order - 1];
                break;
            case PrefixFamily::odd: value_ += field.reciprocal(2 * k - 1).pow(kind_.order); break;
            case PrefixFamily::h2k:
                value_ += field.reciprocal(2 * k - 1);
                value_ += field.reciprocal(2 * k);
                break;
        }
    }

private:
    PrefixKind kind_;
    PAdic value_;
};

}  // namespace

PAdic nested_sum(const WeightSpec& spec, u64 n, const Qp& field) {
    if (spec.outer_exponent < 0) throw BadParameter("outer exponent must be >= 0");
    std::vector<PrefixAccumulator> prefixes;
    std::vector<std::pair<size_t, int>> uses;  // (accumulator index, power)
    int max_power = std::max(spec.outer_exponent, 1);
    for (const auto& f : spec.factors) {
        if (f.power < 1) throw BadParameter("prefix power must be >= 1");
        auto it = std::find_if(prefixes.begin(), prefixes.end(),
                               [&](const PrefixAccumulator& acc) { return acc.kind() == f.kind; });
        size_t idx = static_cast<size_t>(it - prefixes.begin());
        if (it == prefixes.end()) prefixes.emplace_back(f.kind, field);
        uses.emplace_back(idx, f.power);
        if (f.kind.family == PrefixFamily::harmonic || f.kind.family == PrefixFamily::signed_harmonic)
            max_power = std::max(max_power, f.kind.order);
    }

    const bool geometric = spec.geometric != 1;
    const PAdic c = field.rational(spec.geometric);
    PAdic c_power = field.one();
    PAdic total = field.zero();
    for (u64 k = 1; k <= n; ++k) {
        const auto inv = reciprocal_powers(k, max_power, field);
        for (auto& acc : prefixes) acc.advance(k, inv, field);
        PAdic term = spec.outer_exponent > 0 ? inv[spec.outer_exponent - 1] : field.one();
        if (geometric) {
            c_power *= c;
            term *= c_power;
        }
        for (const auto& [idx, power] : uses) {
            const PAdic& v = prefixes[idx].value();
            term *= power == 1 ? v : v.pow(power);
        }
        if (spec.alternating && (k & 1)) term = -term;
        total += term;
    }
    return total;
}

PAdic odd_harmonic(int r, u64 k, const Qp& field) {
    if (r < 1) throw BadParameter("odd_harmonic order must be >= 1");
    PAdic total = field.zero();
    for (u64 j = 1; j <= k; ++j) total += field.reciprocal(2 * j - 1).pow(r);
    return total;
}

}  // namespace supercong
