#include "supercong/report.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace supercong {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const CheckResult& r) {
    Json j;
    j["check"] = r.check;
    j["p"] = r.p;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["modulus"] = "p^" + std::to_string(r.modulus);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

CheckResult from_json(const Json& j) {
    CheckResult r;
    r.check = j.at("check").get<std::string>();
    r.p = j.at("p").get<u64>();
    r.params = j.at("params").get<std::string>();
    auto status = parse_status(j.at("status").get<std::string>());
    if (!status) throw Error("bad status in result row");
    r.status = *status;
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    const auto modulus = j.at("modulus").get<std::string>();
    if (modulus.rfind("p^", 0) != 0) throw Error("bad modulus in result row");
    r.modulus = std::stoi(modulus.substr(2));
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

}  // namespace

std::string to_json_line(const CheckResult& r) { return to_json(r).dump(); }

CheckResult from_json_line(const std::string& line) {
    try {
        return from_json(Json::parse(line));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed result row: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw Error("malformed result row: " + line);
    }
}

std::string format_jsonl(const std::vector<CheckResult>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += to_json_line(r);
        out += '\n';
    }
    return out;
}

std::string format_table(const std::vector<CheckResult>& rows) {
    const std::vector<std::string> head = {"p", "check", "params", "status", "mod", "lhs", "rhs", "note"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({std::to_string(r.p), r.check, r.params.empty() ? "-" : r.params, to_string(r.status),
                         "p^" + std::to_string(r.modulus), r.lhs, r.rhs, r.note});
    std::vector<size_t> width(head.size());
    for (size_t c = 0; c < head.size(); ++c) {
        width[c] = head[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (size_t c = 0; c < row.size(); ++c) {
            s += row[c];
            if (c + 1 < row.size()) s += std::string(width[c] - row[c].size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + '\n';
    };
    std::string out = line(head);
    for (const auto& row : cells) out += line(row);
    return out;
}

std::string format_summary(const std::vector<CheckResult>& rows) {
    std::map<std::string, std::array<size_t, 4>> counts;
    for (const auto& r : rows) ++counts[r.check][static_cast<size_t>(r.status)];
    std::ostringstream out;
    out << "check pass fail skipped precision_error\n";
    for (const auto& [id, c] : counts) out << id << ' ' << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << '\n';
    return out.str();
}

ResultCache::ResultCache(std::string path, int digits) : path_(std::move(path)), digits_(digits) {}

void ResultCache::load() {
    if (!std::filesystem::exists(path_)) return;
    std::ifstream in(path_);
    if (!in) throw Error("cannot read cache " + path_);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const nlohmann::json::exception&) {
            throw Error(path_ + ":" + std::to_string(lineno) + ": malformed cache row");
        }
        if (!j.contains("digits") || j.at("digits").get<int>() != digits_) continue;
        CheckResult r = from_json(j);
        rows_.emplace(Key{r.check, r.p, r.params}, std::move(r));
    }
}

std::optional<CheckResult> ResultCache::find(const std::string& id, u64 p, const std::string& params) const {
    auto it = rows_.find(Key{id, p, params});
    if (it == rows_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::append(const std::vector<CheckResult>& rows) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot write cache " + path_);
    for (const auto& r : rows) {
        Key key{r.check, r.p, r.params};
        if (rows_.count(key)) continue;
        Json j = to_json(r);
        j["digits"] = digits_;
        out << j.dump() << '\n';
        rows_.emplace(std::move(key), r);
    }
    if (!out) throw Error("cannot write cache " + path_);
}

}  // namespace supercong
