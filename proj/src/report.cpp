#include "cmlax/report.hpp"

#include <algorithm>
#include <set>

namespace cmlax {

CheckResult run_check(const std::string& suite, const std::string& check_id,
                      const std::function<std::string()>& body) {
    CheckResult r;
    r.suite = suite;
    r.check_id = check_id;
    auto start = std::chrono::steady_clock::now();
    try {
        std::string witness = body();
        r.status = witness.empty() ? "pass" : "fail";
        r.residual_witness = std::move(witness);
    } catch (const std::exception& e) {
        r.status = "fail";
        r.residual_witness = std::string("exception: ") + e.what();
    }
    auto end = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return r;
}

CheckResult skipped_check(const std::string& suite, const std::string& check_id,
                          const std::string& reason) {
    CheckResult r;
    r.suite = suite;
    r.check_id = check_id;
    r.status = "skipped";
    r.residual_witness = reason;
    return r;
}

ReportSummary report_merge(const std::vector<CheckResult>& results) {
    ReportSummary s;
    std::set<std::string> seen;
    std::vector<std::pair<std::int64_t, std::string>> timing;
    for (const auto& r : results) {
        std::string key = r.suite + "/" + r.check_id;
        if (!seen.insert(key).second)
            throw InvalidArgument("report_merge: duplicate check id " + key);
        ++s.total;
        if (r.status == "pass") ++s.passed;
        else if (r.status == "fail") ++s.failed;
        else ++s.skipped;
        timing.emplace_back(r.elapsed_ms, key);
    }
    std::stable_sort(timing.begin(), timing.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t j = 0; j < timing.size() && j < 5; ++j) s.slowest.push_back(timing[j].second);
    s.overall = s.failed == 0 ? "pass" : "fail";
    return s;
}

nlohmann::json to_json(const CheckResult& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["check_id"] = r.check_id;
    j["status"] = r.status;
    if (!r.residual_witness.empty()) j["residual_witness"] = r.residual_witness;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
    ReportSummary s = report_merge(results);
    nlohmann::json j;
    j["schema_version"] = 1;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : results) j["checks"].push_back(to_json(r));
    j["summary"] = {
        {"total", s.total},       {"passed", s.passed},   {"failed", s.failed},
        {"skipped", s.skipped},   {"overall", s.overall}, {"slowest", s.slowest},
    };
    return j;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == "fail") return false;
    return true;
}

} // namespace cmlax
