#pragma once

#include "rsg/allocation.hpp"
#include "rsg/cost_model.hpp"
#include "rsg/game.hpp"

#include <vector>

namespace rsg {

// Sum over the timed edges of player i's trip of the occupancy-dependent
// edge cost; riding nothing on an edge is occupancy 0.
Rational player_cost(const RideShareGame &game, const StrategyProfile &profile,
                     const FlowState &flow, int player);

std::vector<Rational> player_costs(const RideShareGame &game, const StrategyProfile &profile,
                                   const FlowState &flow);

// Utilitarian sum of all player costs.
Rational social_cost(const RideShareGame &game, const StrategyProfile &profile);

} // namespace rsg
