#include "supercong/checks.hpp"

#include <algorithm>
#include <unordered_set>

namespace supercong {

std::vector<Rational> default_a_samples() {
    return {Rational(-1, 2), Rational(1, 3), Rational(-1, 3), Rational(2, 5),
            Rational(-2, 3), Rational(5),    Rational(1, 4)};
}

PrimeEnv::PrimeEnv(u64 p, const CheckOptions& options)
    : options_(options), field_(p, options.digits) {}

const PAdic& PrimeEnv::memo(const std::string& key, const std::function<PAdic()>& compute) {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    PAdic value = compute();
    return memo_.emplace(key, std::move(value)).first->second;
}

const PAdic& PrimeEnv::bernoulli(u64 n) {
    if (small()) {
        if (!table_) table_ = std::make_unique<BernoulliTable>(field_);
        return table_->get(n);
    }
    return memo("B" + std::to_string(n), [&] { return bernoulli_power_sum(n, field_.context()); });
}

const PAdic& PrimeEnv::x_bernoulli() {
    return memo("X.bernoulli", [&] {
        const long long pp = static_cast<long long>(p());
        const PAdic x = bernoulli(p() - 3) / integer(pp - 3) - bernoulli(2 * p() - 4) / integer(4 * pp - 8);
        return x.with_absolute_precision(field_.digits());
    });
}

const PAdic& PrimeEnv::x_harmonic() {
    return memo("X.harmonic", [&] {
        const PAdic x = mhs(MhsSignature{2}, p() - 1) / integer(-4).shifted(1);
        return x.with_absolute_precision(2);
    });
}

const PAdic& PrimeEnv::x() { return small() ? x_bernoulli() : x_harmonic(); }

const PAdic& PrimeEnv::q2() {
    return memo("q2", [&] { return fermat_quotient(2, field_); });
}

const PAdic& PrimeEnv::h31() { return mhs(MhsSignature{3, 1}, half()); }

const PAdic& PrimeEnv::mhs(const MhsSignature& sig, u64 n) {
    return memo("H" + sig.str() + ";" + std::to_string(n), [&] { return supercong::mhs(sig, n, field_); });
}

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
        case Status::precision_error: return "precision_error";
    }
    return "?";
}

std::optional<Status> parse_status(const std::string& s) {
    for (Status st : {Status::pass, Status::fail, Status::skipped, Status::precision_error})
        if (to_string(st) == s) return st;
    return std::nullopt;
}

const CheckDefinition& find_check(const std::string& id) {
    for (const auto& def : registry())
        if (def.id == id) return def;
    throw UnknownCheck("unknown check: " + id);
}

std::vector<std::string> resolve_ids(const std::vector<std::string>& ids, bool with_diagnostics) {
    std::unordered_set<std::string> wanted;
    bool all = false;
    for (const auto& id : ids) {
        if (id == "all") {
            all = true;
            continue;
        }
        find_check(id);
        wanted.insert(id);
    }
    std::vector<std::string> out;
    for (const auto& def : registry()) {
        const bool by_all = all && (!def.diagnostic || with_diagnostics);
        if (by_all || wanted.count(def.id)) out.push_back(def.id);
    }
    return out;
}

namespace {

CheckResult base_row(const CheckDefinition& def, u64 p, const CheckParam& param, size_t order) {
    CheckResult r;
    r.check = def.id;
    r.p = p;
    r.params = param.label;
    r.modulus = def.modulus;
    r.order = order;
    return r;
}

}  // namespace

CheckResult skipped_row(const CheckDefinition& def, u64 p, const CheckParam& param, size_t order,
                        const std::string& note) {
    CheckResult r = base_row(def, p, param, order);
    r.status = Status::skipped;
    r.note = note;
    return r;
}

CheckResult evaluate(const CheckDefinition& def, PrimeEnv& env, const CheckParam& param, size_t order) {
    CheckResult r = base_row(def, env.p(), param, order);
    try {
        auto comparisons = def.evaluate(env, param);
        if (comparisons.empty()) throw Error(def.id + ": evaluator produced no comparison");
        if (def.id == env.options().corrupt_rhs)
            for (auto& c : comparisons) c.rhs = c.rhs + env.p_power(c.modulus - 1);

        // Report the first failing comparison, or the last one when all hold.
        const Comparison* shown = &comparisons.back();
        bool ok = true;
        for (const auto& c : comparisons) {
            if (!congruent_mod(c.lhs, c.rhs, c.modulus)) {
                shown = &c;
                ok = false;
                break;
            }
        }
        r.status = ok ? Status::pass : Status::fail;
        r.lhs = shown->lhs.render(shown->modulus);
        r.rhs = shown->rhs.render(shown->modulus);
        r.modulus = shown->modulus;
        r.note = shown->label;
    } catch (const NotApplicable& e) {
        r.status = Status::skipped;
        r.note = e.what();
    } catch (const InsufficientPrecision& e) {
        r.status = Status::precision_error;
        r.note = e.what();
    } catch (const PrecisionExhausted& e) {
        r.status = Status::precision_error;
        r.note = e.what();
    }
    return r;
}

namespace {

const CheckDefinition& checked(const std::string& id, u64 p) {
    const auto& def = find_check(id);
    if (p < def.min_prime)
        throw PrimeTooSmall(id + " needs p >= " + std::to_string(def.min_prime) + ", got " + std::to_string(p));
    return def;
}

}  // namespace

std::vector<CheckResult> run_check(const std::string& id, u64 p, const CheckOptions& options) {
    const auto& def = checked(id, p);
    PrimeEnv env(p, options);
    std::vector<CheckResult> out;
    const auto params = def.params(options);
    for (size_t i = 0; i < params.size(); ++i) out.push_back(evaluate(def, env, params[i], i));
    return out;
}

CheckResult run_check(const std::string& id, u64 p, const CheckParam& param, const CheckOptions& options) {
    const auto& def = checked(id, p);
    PrimeEnv env(p, options);
    return evaluate(def, env, param, 0);
}

}  // namespace supercong
