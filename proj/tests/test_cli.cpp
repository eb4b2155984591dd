#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using namespace supercong;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

std::filesystem::path temp_file(const std::string& name) {
    auto path = std::filesystem::temp_directory_path() / ("supercong_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove(path);
    return path;
}

}  // namespace

TEST(Cli, VerifyJsonl) {
    const auto r = run({"verify", "--checks", "eq-1-1", "--primes", "7..50", "--digits", "6", "--format", "jsonl"});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 12u);
    for (const auto& line : rows) {
        const auto j = nlohmann::json::parse(line);
        for (const char* field : {"check", "p", "params", "status", "lhs", "rhs", "modulus"})
            EXPECT_TRUE(j.contains(field)) << field;
        EXPECT_EQ(j["check"], "eq-1-1");
        EXPECT_EQ(j["status"], "pass");
        EXPECT_EQ(j["modulus"], "p^4");
    }
}

TEST(Cli, VerifyIsDefaultSubcommand) {
    const auto a = run({"--checks", "thm12", "--primes", "7..30", "--format", "jsonl"});
    const auto b = run({"verify", "--checks", "thm12", "--primes", "7..30", "--format", "jsonl"});
    EXPECT_EQ(a.code, cli::kOk);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TableOutput) {
    const auto r = run({"verify", "--checks", "lem26", "--primes", "7..13"});
    EXPECT_EQ(r.code, cli::kOk);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].rfind("p ", 0), 0u);
    EXPECT_NE(rows[1].find("lem26"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"verify", "--primes", "500..7"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--primes", "a..b"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--checks", "no-such-check", "--primes", "7..7"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--checks", "eq-1-1", "--primes", "7..7", "--digits", "3"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--format", "xml"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--jobs", "0"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--bogus"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--a-samples", "1/0", "--primes", "7..7"}).code, cli::kUsage);
    EXPECT_EQ(run({"identities", "--n-max", "201"}).code, cli::kUsage);
}

TEST(Cli, CorruptedRhsExitsOne) {
    const auto r =
        run({"verify", "--checks", "eq-1-1", "--primes", "7..20", "--format", "jsonl", "--corrupt-rhs", "eq-1-1"});
    EXPECT_EQ(r.code, cli::kFailed);
    EXPECT_NE(r.out.find("\"status\":\"fail\""), std::string::npos);
}

TEST(Cli, DiagnosticRowsDoNotFailTheRun) {
    const auto r = run({"verify", "--checks", "thm11-full", "--primes", "7..20", "--t-sign-diagnostic", "--format",
                        "jsonl"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out.find("tplus"), std::string::npos);
    const auto all = run({"verify", "--checks", "all", "--primes", "7..7", "--t-sign-diagnostic", "--format", "jsonl"});
    EXPECT_EQ(all.code, cli::kOk) << all.err;
    EXPECT_NE(all.out.find("thm11-full-tplus"), std::string::npos);
    EXPECT_NE(all.out.find("not p-integral"), std::string::npos);
}

TEST(Cli, ASamplesOverride) {
    const auto r = run({"verify", "--checks", "thm11-full", "--primes", "11..11", "--a-samples", "3/7,-5/2",
                        "--format", "jsonl"});
    EXPECT_EQ(r.code, cli::kOk);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_NE(rows[0].find("a=3/7"), std::string::npos);
}

TEST(Cli, CacheRoundTripSkipsEvaluation) {
    const auto path = temp_file("cache");
    const std::vector<std::string> args = {"verify", "--checks", "eq-1-1,thm12", "--primes", "7..60", "--format",
                                           "jsonl", "--cache", path.string(), "--stats"};
    const auto first = run(args);
    EXPECT_EQ(first.code, cli::kOk);
    EXPECT_NE(first.err.find("evaluations=28 cache_hits=0"), std::string::npos) << first.err;
    const auto second = run(args);
    EXPECT_EQ(second.code, cli::kOk);
    EXPECT_NE(second.err.find("evaluations=0 cache_hits=28"), std::string::npos) << second.err;
    EXPECT_EQ(first.out, second.out);

    // A different digit count is a different cache key.
    auto other = args;
    other.insert(other.end(), {"--digits", "7"});
    const auto third = run(other);
    EXPECT_NE(third.err.find("evaluations=28"), std::string::npos) << third.err;
    std::filesystem::remove(path);
}

TEST(Cli, CorruptedRunLeavesCacheAlone) {
    const auto path = temp_file("corrupt");
    run({"verify", "--checks", "eq-1-1", "--primes", "7..20", "--cache", path.string(), "--corrupt-rhs", "eq-1-1"});
    EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(Cli, IoErrorsExitThree) {
    const auto missing_dir = temp_file("nodir") / "cache.jsonl";
    const auto r = run({"verify", "--checks", "eq-1-1", "--primes", "7..7", "--cache", missing_dir.string()});
    EXPECT_EQ(r.code, cli::kIo);
    EXPECT_NE(r.err.find("cannot write cache"), std::string::npos);

    const auto garbage = temp_file("garbage");
    {
        std::ofstream(garbage) << "not json\n";
    }
    EXPECT_EQ(run({"verify", "--checks", "eq-1-1", "--primes", "7..7", "--cache", garbage.string()}).code, cli::kIo);
    std::filesystem::remove(garbage);
}

TEST(Cli, Identities) {
    const auto r = run({"identities", "--n-max", "40"});
    EXPECT_EQ(r.code, cli::kOk);
    const auto rows = lines(r.out);
    EXPECT_GE(rows.size(), 5u);
    for (const auto& line : rows) EXPECT_NE(line.find("equal 40/40"), std::string::npos) << line;
    const auto j = run({"identities", "--n-max", "10", "--format", "jsonl"});
    for (const auto& line : lines(j.out)) EXPECT_EQ(nlohmann::json::parse(line)["equal"], 10);
}

TEST(Cli, ListChecks) {
    const auto r = run({"list-checks"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("eq-1-1"), std::string::npos);
    EXPECT_NE(r.out.find("[diagnostic]"), std::string::npos);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}
