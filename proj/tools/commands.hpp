#pragma once

// Subcommand dispatch for the analyzer binary. Kept apart from main() so
// tests can drive commands against in-memory streams.

#include <iosfwd>
#include <string>

#include <zqdyn/ring.hpp>

namespace zqdyn::cli {

struct CommandOptions {
    std::string format = "text";  // "text" or "json"
    u64 max_period = u64(1) << 20;
    u64 oracle_cap = 1'000'000;
    bool early_exit = false;
    std::string output_path;  // phase-graph target; empty writes to `out`
};

// Exit codes: 0 analysis ran (the verdict never changes it), 2 parse or
// validation failure, 3 period cap or state-space cap exceeded.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCapExceeded = 3;

int run_command(const std::string& subcommand, const std::string& input_path,
                const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace zqdyn::cli
