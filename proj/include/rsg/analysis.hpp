#pragma once

#include "rsg/dynamics.hpp"
#include "rsg/finite_game.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rsg {

enum class PlayerRole { Driver, Passenger, Pedestrian };

// Maximal contiguous stretches of player i's trip on which a vehicle is
// assigned to them.
std::vector<PathSegment> riding_segments(const RideShareGame &game, const StrategyProfile &profile,
                                         const FlowState &flow, int player);

// Every timed edge of the segment carries at least one moving vehicle.
bool is_allocated_path(const FlowState &flow, const PathSegment &segment);

// Maximal stretches a vehicle drives without parking, as segments over its
// visited nodes.
std::vector<PathSegment> vehicle_corridors(const RideShareGame &game, const FlowState &flow,
                                           int vehicle);

// All distinct timed sub-segments (1..max_edges edges) of all strategies.
std::vector<PathSegment> candidate_segments(const RideShareGame &game, int max_edges);

// Weak dominance of including r, quantified over every player and every
// opponent profile, restricted to profiles where r is actually served by
// vehicles.  False when r never arises as an allocated, contained path.
bool is_necessary_path(const RideShareGameView &view, const PathSegment &segment,
                       std::uint64_t budget = kDefaultProfileBudget);

// Whenever some strategy makes r exactly the player's ridden edge set,
// doing so is weakly cheaper than riding anything else.
bool is_sufficient_path(const RideShareGameView &view, const PathSegment &segment,
                        std::uint64_t budget = kDefaultProfileBudget);

struct PathClassification {
    std::vector<PathSegment> necessary;
    std::vector<PathSegment> sufficient;
    std::vector<PathSegment> both; // R_ns
    bool both_disjoint = false;    // pairwise empty timed-edge intersection
};

PathClassification classify_paths(const RideShareGameView &view,
                                  const std::vector<PathSegment> &candidates,
                                  std::uint64_t budget = kDefaultProfileBudget);

struct HypothesisReport {
    bool common_strategy_set = false;   // H1
    bool single_vehicle = false;        // H2: M = 1
    bool fleet_covers_players = false;  // H3: N <= w
    bool first_fit_linear = false;      // H4
    std::optional<bool> disjoint_ns_set; // H5; empty when not evaluated
    std::vector<PathSegment> ns_candidates_checked;
};

// Evaluates the FIP sufficient-condition hypotheses.  H5 is checked over
// the supplied candidates, or over vehicle corridors discovered at the
// game's pure equilibria when none are given; it is skipped (nullopt)
// when no candidate is available.
HypothesisReport check_theorem_hypotheses(const RideShareGameView &view,
                                          std::vector<PathSegment> candidates = {},
                                          std::uint64_t budget = kDefaultProfileBudget);

// Role of each player with respect to a known necessary path: riding a
// strict superset = driver, exactly it = passenger, otherwise pedestrian.
std::vector<PlayerRole> classify_roles(const RideShareGame &game, const StrategyProfile &profile,
                                       const PathSegment &necessary);

struct CopyLemmaReport {
    std::uint64_t sampled = 0;  // raw (profile, i, j) draws
    std::uint64_t checked = 0;  // draws surviving the no-vehicle-loss filter
    std::uint64_t violations = 0;
};

// Randomized check that copying player j is no worse than j's own cost on
// no-vehicle-loss updates.  The caller is responsible for only running it
// on games with a common strategy set, N <= w, and first-fit seating.
CopyLemmaReport check_copy_lemma(const RideShareGameView &view, std::uint64_t samples,
                                 std::uint64_t seed);

} // namespace rsg
