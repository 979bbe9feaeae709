#pragma once

#include "rsg/errors.hpp"
#include "rsg/finite_game.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rsg {

constexpr std::uint64_t kDefaultProfileBudget = 100000;

// Strict-improvement graph over the joint strategy space: an edge a -> b
// whenever exactly one player deviates and strictly lowers their own cost.
struct ImprovementEdge {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    int player = -1;
    Rational delta; // c_i(after) - c_i(before), always negative
};

struct ImprovementGraph {
    std::vector<int> radices;
    std::vector<std::vector<ImprovementEdge>> out; // indexed by source profile

    std::uint64_t node_count() const { return out.size(); }
    std::uint64_t edge_count() const;
};

enum class DynamicsStatus { PneReached, CycleDetected, StepLimit };

struct DynamicsStep {
    StrategyProfile before;
    int player = -1;
    int old_choice = -1;
    int new_choice = -1;
    Rational cost_before;
    Rational cost_after;
    Rational potential_after; // min player cost at the resulting profile
};

struct DynamicsTrace {
    StrategyProfile initial;
    std::vector<DynamicsStep> steps;
    DynamicsStatus status = DynamicsStatus::StepLimit;
    StrategyProfile final_profile;
};

// Cheapest reply of player i against profile.choice[-i]; ties go to the
// smallest action index (lexicographically smallest path when the set is
// in enumeration order). Returns the current choice when already optimal.
int best_response(const FiniteGame &game, const StrategyProfile &profile, int i);

// Round-robin better/best-response play. `order` must be a permutation of
// the players; a full silent rotation ends the run as PneReached, a
// repeated (profile, turn) state as CycleDetected.
DynamicsTrace run_dynamics(const FiniteGame &game, const StrategyProfile &initial,
                           const std::vector<int> &order, std::uint64_t max_steps);

bool is_pne(const FiniteGame &game, const StrategyProfile &profile);

std::vector<StrategyProfile> enumerate_pne(const FiniteGame &game,
                                           std::uint64_t budget = kDefaultProfileBudget);

ImprovementGraph build_improvement_graph(const FiniteGame &game,
                                         std::uint64_t budget = kDefaultProfileBudget);

// Some directed cycle of profile indices, if one exists.
std::optional<std::vector<std::uint64_t>> find_cycle(const ImprovementGraph &graph);

// FIP <=> the strict-improvement graph is acyclic.
bool has_fip(const FiniteGame &game, std::uint64_t budget = kDefaultProfileBudget);

// Profiles with no outgoing improvement edge; must coincide with
// enumerate_pne.
std::vector<std::uint64_t> graph_sinks(const ImprovementGraph &graph);

// Minimum player cost at the profile; the candidate ordinal potential.
Rational potential_value(const FiniteGame &game, const StrategyProfile &profile);

struct PotentialViolation {
    StrategyProfile from;
    StrategyProfile to;
    int player = -1;
    Rational cost_delta;
    Rational phi_delta;
    bool strict_violation = false; // sign mismatch per the ordinal definition
    bool weak_violation = false;   // phi increased on an improving move
};

struct PotentialReport {
    std::uint64_t deviations_checked = 0;
    std::vector<PotentialViolation> violations;
    bool strict_ok() const;
    bool weak_ok() const;
};

// Verifies sgn(dPhi) = sgn(dc_i) over every unilateral deviation; also
// records the weaker "Phi never increases on improving moves" verdict.
PotentialReport
check_ordinal_potential(const FiniteGame &game,
                        const std::function<Rational(const StrategyProfile &)> &phi,
                        std::uint64_t budget = kDefaultProfileBudget);

std::pair<StrategyProfile, Rational> social_optimum(const FiniteGame &game,
                                                    std::uint64_t budget = kDefaultProfileBudget);

struct PoaResult {
    Rational worst; // max over pNE of C(a*) / C(a_opt)
    Rational best;  // min over pNE
};

// Throws AnalysisError when no pure equilibrium exists.
PoaResult price_of_anarchy(const FiniteGame &game, std::uint64_t budget = kDefaultProfileBudget);

} // namespace rsg
