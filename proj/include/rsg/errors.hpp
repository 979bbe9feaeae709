#pragma once

#include <stdexcept>
#include <string>

namespace rsg {

// Exhaustive operation would exceed the configured profile/step budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string &what) : std::runtime_error(what) {}
};

// The requested analysis has no answer for this game (e.g. PoA without
// any pure equilibrium).
struct AnalysisError : std::runtime_error {
    explicit AnalysisError(const std::string &what) : std::runtime_error(what) {}
};

// Game file syntax/schema/invariant failure.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace rsg
