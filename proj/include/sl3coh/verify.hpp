#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl3coh/root_system.hpp"

namespace sl3coh {

using TraceFn = std::function<Int(Int, Int, Int, int)>;

struct VerifyOptions {
    Int max = 60;
    Int trace_max = 30;  // GT brute force bound
    std::optional<std::uint64_t> seed;
    int random_samples = 200;
    TraceFn closed_trace;  // empty: library closed_trace
};

struct VerifyFailure {
    std::string check;
    Int m1 = 0;
    Int m2 = 0;
    std::optional<Int> m3;
    std::optional<int> k;
    std::string detail;
};

struct VerifyResult {
    std::map<std::string, Int> checks_run;
    std::vector<VerifyFailure> failures;

    bool ok() const { return failures.empty(); }
};

VerifyResult run_verification(const VerifyOptions& opts);

nlohmann::json to_json(const VerifyFailure& f);

}  // namespace sl3coh
