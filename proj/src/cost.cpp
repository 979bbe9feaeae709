#include "rsg/cost.hpp"

namespace rsg {

Rational player_cost(const RideShareGame &game, const StrategyProfile &profile,
                     const FlowState &flow, int player) {
    const TripPath &trip = game.path(player, profile);
    Rational total(0);
    for (const TimedEdge &te : trip.timed_edges()) {
        int m = flow.assignment(player, te.t);
        int s = (m == kNoVehicle) ? 0 : flow.occupancy[te.t - 1][m];
        total += edge_cost(game.cost_model(), game.graph(), te.edge_id, game.capacity(), s);
    }
    return total;
}

std::vector<Rational> player_costs(const RideShareGame &game, const StrategyProfile &profile,
                                   const FlowState &flow) {
    std::vector<Rational> out;
    out.reserve(game.players());
    for (int i = 0; i < game.players(); ++i)
        out.push_back(player_cost(game, profile, flow, i));
    return out;
}

Rational social_cost(const RideShareGame &game, const StrategyProfile &profile) {
    FlowState flow = compute_flows(game, profile);
    Rational total(0);
    for (int i = 0; i < game.players(); ++i)
        total += player_cost(game, profile, flow, i);
    return total;
}

} // namespace rsg
