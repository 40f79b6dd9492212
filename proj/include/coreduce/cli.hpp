#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace coreduce::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "coreduce.cli/1";

enum Exit : int { ok = 0, answer_no = 1, usage = 2, resource_limit = 3 };

enum class Output { json, text };

struct Config {
    std::string cache_dir;                     // empty: no cache
    std::optional<std::size_t> dp_state_limit; // unset: library defaults
    int parallelism = 1;
    Output output = Output::json;
};

// Runs one subcommand. args excludes the program name. Flags override the
// COREDUCE_OUTPUT, COREDUCE_CACHE_DIR, COREDUCE_LIMIT_STATES and COREDUCE_JOBS
// environment variables.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coreduce::cli
