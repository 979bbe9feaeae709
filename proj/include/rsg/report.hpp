#pragma once

#include "rsg/game_file.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace rsg {

// Parsed command-line request, independent of the CLI front end so the
// dispatch logic is testable in-process.
struct RunOptions {
    std::string command;
    std::string game_path;
    std::optional<std::uint64_t> initial; // joint profile index
    std::string order = "roundrobin";     // or "random:<seed>"
    std::uint64_t max_steps = 1000;
    std::uint64_t budget = 100000;
    bool want_dot = false;
};

struct RunResult {
    nlohmann::json report;
    std::string dot; // non-empty only when requested and applicable
    int exit_code = 0;
};

// Executes one analysis command against a loaded game and assembles the
// machine-readable report.  Throws ParseError / BudgetExceeded /
// AnalysisError; the caller maps those to exit codes.
RunResult run_command(const RunOptions &options, const LoadedGame &game);

// Convenience wrapper that also loads the game file.
RunResult run_command(const RunOptions &options);

// Players listed in the order they take turns: "roundrobin" is 1..N,
// "random:<seed>" a seeded shuffle.
std::vector<int> parse_order(const std::string &order, int players);

} // namespace rsg
