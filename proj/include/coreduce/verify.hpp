#pragma once

#include "coreduce/classify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace coreduce {

struct CheckResult {
    std::string name;
    bool passed = false;
    nlohmann::json detail;  // the recomputed quantities the check compared
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct VerifyOptions {
    ClassifyOptions classify{};
    std::size_t state_limit = 50'000'000;
    int jobs = 1;  // suites run concurrently up to this many at a time
};

// torus, sl2, exceptional, classical, semisimple, sl3, appendixA, appendixB.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name. LimitExceeded propagates.
SuiteResult run_suite(const std::string& name, const VerifyOptions& o = {});
// Results follow the order of `names`, whatever the completion order.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& o = {});

nlohmann::json to_json(const SuiteResult& r);
std::string to_text(const SuiteResult& r);

inline constexpr const char* kVerifySchema = "coreduce.verify/1";

}  // namespace coreduce
