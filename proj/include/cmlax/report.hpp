#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmlax/errors.hpp"

namespace cmlax {

/// One verification check. A fail always carries a residual witness.
struct CheckResult {
    std::string suite;
    std::string check_id;
    std::string status;  // pass | fail | skipped
    std::string residual_witness;
    std::int64_t elapsed_ms = 0;
};

/// Runs `body`, which returns an empty string on success and a canonical
/// residual witness on failure. Exceptions become failures with the message
/// as witness.
CheckResult run_check(const std::string& suite, const std::string& check_id,
                      const std::function<std::string()>& body);

CheckResult skipped_check(const std::string& suite, const std::string& check_id,
                          const std::string& reason);

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::string overall;  // pass | fail
    /// check ids of the slowest checks, slowest first (up to 5)
    std::vector<std::string> slowest;
};

/// Aggregates results; throws InvalidArgument on duplicate check ids.
ReportSummary report_merge(const std::vector<CheckResult>& results);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json report_json(const std::vector<CheckResult>& results);

/// True when every executed check passed.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace cmlax
