#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "supercong/checks.hpp"
#include "supercong/oracle.hpp"
#include "supercong/report.hpp"
#include "supercong/sweep.hpp"

namespace supercong::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<std::string> checks{"all"};
    std::string primes = "7..500";
    u64 lo = 7, hi = 500;
    int digits = 6;
    std::string a_samples;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "table";
    std::string cache;
    bool fail_fast = false;
    bool t_sign_diagnostic = false;
    bool stats = false;
    std::string corrupt_rhs;
    u64 bernoulli_limit = 1000;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

u64 parse_u64(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw UsageError("not a number: '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw UsageError("number out of range: '" + s + "'");
    }
}

// "lo..hi" or a single prime.
void parse_range(RunConfig& c) {
    const auto dots = c.primes.find("..");
    if (dots == std::string::npos) {
        c.lo = c.hi = parse_u64(c.primes);
    } else {
        c.lo = parse_u64(c.primes.substr(0, dots));
        c.hi = parse_u64(c.primes.substr(dots + 2));
    }
    if (c.lo > c.hi) throw UsageError("--primes: lo must not exceed hi");
    if (c.hi >= (1ULL << 31)) throw UsageError("--primes: primes must be below 2^31");
}

CheckOptions options_from(const RunConfig& c) {
    CheckOptions o;
    o.digits = c.digits;
    o.bernoulli_limit = c.bernoulli_limit;
    o.corrupt_rhs = c.corrupt_rhs;
    if (!c.a_samples.empty()) {
        o.a_samples.clear();
        for (const auto& s : split(c.a_samples, ',')) {
            try {
                o.a_samples.push_back(parse_rational(s));
            } catch (const Error& e) {
                throw UsageError(std::string("--a-samples: ") + e.what());
            }
        }
    }
    return o;
}

int verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<std::string> ids;
    try {
        ids = resolve_ids(c.checks, c.t_sign_diagnostic);
    } catch (const UnknownCheck& e) {
        throw UsageError(e.what());
    }
    for (const auto& id : ids)
        if (find_check(id).modulus > c.digits)
            throw UsageError(id + " needs --digits >= " + std::to_string(find_check(id).modulus));

    SweepConfig sc;
    sc.ids = ids;
    sc.primes = primes_in_range(c.lo, c.hi);
    sc.jobs = c.jobs;
    sc.options = options_from(c);
    sc.fail_fast = c.fail_fast;

    std::optional<ResultCache> cache;
    if (!c.cache.empty()) {
        cache.emplace(c.cache, c.digits);
        try {
            cache->load();
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kIo;
        }
        // A corrupted run must not poison or read the cache.
        if (c.corrupt_rhs.empty())
            sc.cache = [&](const std::string& id, u64 p, const std::string& params) { return cache->find(id, p, params); };
    }

    SweepStats stats;
    const auto rows = sweep(sc, &stats);

    if (cache && c.corrupt_rhs.empty()) {
        try {
            cache->append(rows);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kIo;
        }
    }

    out << (c.format == "jsonl" ? format_jsonl(rows) : format_table(rows));
    out.flush();
    if (!out) {
        err << "error: cannot write report\n";
        return kIo;
    }

    bool ok = true;
    for (const auto& r : rows) {
        if (find_check(r.check).diagnostic) continue;
        if (r.status == Status::fail || r.status == Status::precision_error) ok = false;
    }
    if (c.stats) {
        err << "primes=" << sc.primes.size() << " rows=" << rows.size() << " evaluations=" << stats.evaluations
            << " cache_hits=" << stats.cache_hits << '\n';
        err << format_summary(rows);
    }
    return ok ? kOk : kFailed;
}

int identities(u64 n_max, const std::string& format, std::ostream& out) {
    const auto reports = oracle::identity_table(n_max, default_a_samples());
    // One line per identity family: how many n agree, and the first mismatch.
    struct Family {
        std::string id;
        size_t equal = 0;
        size_t total = 0;
        std::string first_mismatch;
    };
    std::vector<Family> families;
    for (const auto& r : reports) {
        if (families.empty() || families.back().id != r.id) families.push_back(Family{r.id, 0, 0, {}});
        auto& f = families.back();
        ++f.total;
        if (r.equal)
            ++f.equal;
        else if (f.first_mismatch.empty())
            f.first_mismatch = r.detail();
    }
    bool ok = true;
    for (const auto& f : families) {
        ok = ok && f.equal == f.total;
        if (format == "jsonl") {
            nlohmann::ordered_json j;
            j["identity"] = f.id;
            j["n_max"] = n_max;
            j["equal"] = f.equal;
            j["total"] = f.total;
            if (!f.first_mismatch.empty()) j["mismatch"] = f.first_mismatch;
            out << j.dump() << '\n';
        } else {
            out << f.id << "  n=1.." << n_max << "  equal " << f.equal << "/" << f.total;
            if (!f.first_mismatch.empty()) out << "  " << f.first_mismatch;
            out << '\n';
        }
    }
    return ok ? kOk : kFailed;
}

int list_checks(std::ostream& out) {
    for (const auto& d : registry()) {
        out << d.id << "  p^" << d.modulus << "  p>=" << d.min_prime << "  params=" << d.params(CheckOptions{}).size();
        if (d.diagnostic) out << "  [diagnostic]";
        out << "  " << d.description << '\n';
    }
    return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    if (args.empty() || (!args.front().empty() && args.front()[0] == '-' && args.front() != "-h" &&
                         args.front() != "--help"))
        args.insert(args.begin(), "verify");

    CLI::App app{"Numerical verification of p-adic supercongruences"};
    app.require_subcommand(1);

    RunConfig config;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep checks over a prime range");
    verify_cmd->add_option("--checks", config.checks, "Check ids, comma separated, or 'all'")->delimiter(',');
    verify_cmd->add_option("--primes", config.primes, "Prime range lo..hi");
    verify_cmd->add_option("--digits", config.digits, "p-adic digits N")->check(CLI::Range(1, 64));
    verify_cmd->add_option("--a-samples", config.a_samples, "Rational samples a, comma separated");
    verify_cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", config.format, "table or jsonl")->check(CLI::IsMember({"table", "jsonl"}));
    verify_cmd->add_option("--cache", config.cache, "JSONL result cache for resumable sweeps");
    verify_cmd->add_flag("--fail-fast", config.fail_fast, "Stop at the first failure");
    verify_cmd->add_flag("--t-sign-diagnostic", config.t_sign_diagnostic,
                         "Also run the diagnostic checks using t=(a+<a>)/p");
    verify_cmd->add_flag("--stats", config.stats, "Print evaluation counts to stderr");
    verify_cmd->add_option("--bernoulli-limit", config.bernoulli_limit,
                           "Largest p using the Bernoulli table and Bernoulli-based X");
    verify_cmd->add_option("--corrupt-rhs", config.corrupt_rhs)->group("");

    u64 n_max = 200;
    std::string id_format = "table";
    auto* ident_cmd = app.add_subcommand("identities", "Check the exact rational identities");
    ident_cmd->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(1, 200));
    ident_cmd->add_option("--format", id_format, "table or jsonl")->check(CLI::IsMember({"table", "jsonl"}));

    auto* list_cmd = app.add_subcommand("list-checks", "List the check catalog");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            parse_range(config);
            return verify(config, out, err);
        }
        if (ident_cmd->parsed()) return identities(n_max, id_format, out);
        if (list_cmd->parsed()) return list_checks(out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}

}  // namespace supercong::cli
