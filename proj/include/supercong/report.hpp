#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "supercong/checks.hpp"

namespace supercong {

/// {"check","p","params","status","lhs","rhs","modulus"} plus "note" when set.
std::string to_json_line(const CheckResult& r);
/// Inverse of to_json_line; extra fields are ignored. Throws Error on malformed input.
CheckResult from_json_line(const std::string& line);

std::string format_jsonl(const std::vector<CheckResult>& rows);
std::string format_table(const std::vector<CheckResult>& rows);

/// Appends "check pass fail skipped precision_error" counts per check.
std::string format_summary(const std::vector<CheckResult>& rows);

/// Results recorded by earlier runs, keyed on (id, p, params, digits).
/// The file is JSONL with an extra "digits" field per row.
class ResultCache {
public:
    ResultCache(std::string path, int digits);

    /// Reads the file if it exists. Throws Error when it cannot be read or parsed.
    void load();
    std::optional<CheckResult> find(const std::string& id, u64 p, const std::string& params) const;
    /// Appends rows not already present. Throws Error on I/O failure.
    void append(const std::vector<CheckResult>& rows);

    size_t size() const noexcept { return rows_.size(); }

private:
    using Key = std::tuple<std::string, u64, std::string>;
    std::string path_;
    int digits_;
    std::map<Key, CheckResult> rows_;
};

}  // namespace supercong
