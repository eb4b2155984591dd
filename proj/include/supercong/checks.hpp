#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supercong/bernoulli.hpp"
#include "supercong/harmonic.hpp"
#include "supercong/padic.hpp"

namespace supercong {

class UnknownCheck : public Error {
    using Error::Error;
};
class PrimeTooSmall : public Error {
    using Error::Error;
};
/// Thrown by an evaluator when a parameter's precondition fails at this prime.
class NotApplicable : public Error {
    using Error::Error;
};

std::vector<Rational> default_a_samples();

struct CheckOptions {
    int digits = 6;
    std::vector<Rational> a_samples = default_a_samples();
    /// Largest prime for which Bernoulli numbers come from the O(n^2) table
    /// and X from Bernoulli numbers. Above it B_n is known mod p^2 (power sums)
    /// and X comes from -H(2;p-1)/(4p).
    u64 bernoulli_limit = 1000;
    /// Test fixture: add p^(e-1) to the RHS of this check id.
    std::string corrupt_rhs;
};

/// Per-prime tables shared by every check evaluated at that prime.
/// Lazily filled; one instance per worker, never shared across threads.
class PrimeEnv {
public:
    PrimeEnv(u64 p, const CheckOptions& options);

    u64 p() const noexcept { return field_.prime(); }
    u64 half() const noexcept { return (p() - 1) / 2; }
    const Qp& field() const noexcept { return field_; }
    const CheckOptions& options() const noexcept { return options_; }
    bool small() const noexcept { return p() <= options_.bernoulli_limit; }

    PAdic integer(long long n) const { return field_.integer(n); }
    PAdic rational(long long num, long long den) const { return field_.rational(num, den); }
    /// p^k
    PAdic p_power(int k) const { return field_.p_power(k); }

    /// B_n to the field's digits below the limit, mod p^2 above it.
    const PAdic& bernoulli(u64 n);
    /// X by the prime's policy (see CheckOptions::bernoulli_limit).
    const PAdic& x();
    /// X from Bernoulli numbers at every prime.
    const PAdic& x_bernoulli();
    const PAdic& x_harmonic();
    /// q_p(2)
    const PAdic& q2();
    /// H(3,1;(p-1)/2)
    const PAdic& h31();

    const PAdic& mhs(const MhsSignature& sig, u64 n);
    /// Memoized value under an arbitrary key.
    const PAdic& memo(const std::string& key, const std::function<PAdic()>& compute);

private:
    CheckOptions options_;
    Qp field_;
    std::unique_ptr<BernoulliTable> table_;
    std::map<std::string, PAdic> memo_;
};

struct CheckParam {
    std::string label;
    Rational a = 0;
    int i = 0;
    int j = 0;
    int form = 0;
};

/// One congruence lhs == rhs (mod p^modulus).
struct Comparison {
    std::string label;
    PAdic lhs;
    PAdic rhs;
    int modulus;
};

struct CheckDefinition {
    std::string id;
    std::string description;
    u64 min_prime = 7;
    /// Largest modulus exponent used by the check.
    int modulus = 1;
    /// Diagnostic checks document a discrepancy; they are excluded from "all"
    /// and do not affect the exit status.
    bool diagnostic = false;
    std::function<std::vector<CheckParam>(const CheckOptions&)> params;
    std::function<std::vector<Comparison>(PrimeEnv&, const CheckParam&)> evaluate;
};

enum class Status { pass, fail, skipped, precision_error };
std::string to_string(Status s);
std::optional<Status> parse_status(const std::string& s);

struct CheckResult {
    std::string check;
    u64 p = 0;
    std::string params;
    Status status = Status::skipped;
    std::string lhs;
    std::string rhs;
    int modulus = 0;
    std::string note;
    /// Position of params within the check's parameter list; ordering only.
    size_t order = 0;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

const std::vector<CheckDefinition>& registry();
/// Throws UnknownCheck.
const CheckDefinition& find_check(const std::string& id);
/// Expands "all" (non-diagnostic checks, plus diagnostics when asked) and
/// validates the rest. Keeps registry order, drops duplicates.
std::vector<std::string> resolve_ids(const std::vector<std::string>& ids, bool with_diagnostics);

/// Evaluates one parameter at one prime. Precision failures become
/// status=precision_error and NotApplicable becomes status=skipped.
CheckResult evaluate(const CheckDefinition& def, PrimeEnv& env, const CheckParam& param, size_t order);
/// Result row for a prime below the check's min_prime.
CheckResult skipped_row(const CheckDefinition& def, u64 p, const CheckParam& param, size_t order,
                        const std::string& note);

/// Throws UnknownCheck, PrimeTooSmall.
std::vector<CheckResult> run_check(const std::string& id, u64 p, const CheckOptions& options = {});
CheckResult run_check(const std::string& id, u64 p, const CheckParam& param,
                      const CheckOptions& options = {});

}  // namespace supercong
