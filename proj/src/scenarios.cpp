#include "rsg/scenarios.hpp"

namespace rsg {

RideShareGame build_section4_base(int fleet_size, int capacity) {
    RoadGraph graph = RoadGraph::complete_with_loops(4, Rational(1));
    std::vector<TripPath> common =
        enumerate_strategies(graph, 1, {3, 4}, 5, /*return_to_start=*/true);
    std::vector<std::vector<TripPath>> sets(3, common);
    std::vector<int> player_starts(3, 1);
    std::vector<int> vehicle_starts(fleet_size, 2);
    return RideShareGame(std::move(graph), 5, std::move(sets), std::move(player_starts),
                         std::move(vehicle_starts), capacity, FormulaCostModel{});
}

RideShareGame build_nonfip_game() { return build_section4_base(2, 1); }
RideShareGame build_fip_game() { return build_section4_base(1, 4); }
RideShareGame build_two_vehicle_game() { return build_section4_base(2, 4); }

BayesianGame build_signaling_game() {
    // Joint index = a1 * 2 + a2 with action 0 = C, 1 = D.
    std::vector<std::vector<std::vector<Rational>>> costs = {
        // x = 0: no vehicle exists.
        {{Rational(20), Rational(20), Rational(16), Rational(16)},
         {Rational(20), Rational(16), Rational(20), Rational(16)}},
        // x = 1: one vehicle.
        {{Rational(10), Rational(15), Rational(9), Rational(16)},
         {Rational(10), Rational(9), Rational(15), Rational(16)}},
    };
    return BayesianGame::with_common_prior(
        {2, 2}, std::move(costs), {Rational(1, 2), Rational(1, 2)},
        {{"C=(1,2,3,1)", "D=(1,1,3,1)"}, {"C=(1,2,3,1)", "D=(1,1,3,1)"}}, {"M=0", "M=1"});
}

const std::vector<ScenarioInfo> &scenario_registry() {
    static const std::vector<ScenarioInfo> registry = {
        {"nonfip", "3 players, 2 vehicles of capacity 1; improvement dynamics can cycle", false},
        {"fip", "3 players, 1 vehicle of capacity 4; converges to a pure equilibrium", false},
        {"two_vehicle", "3 players, 2 vehicles of capacity 4; converges despite the larger fleet",
         false},
        {"signaling", "2 players, uncertain vehicle supply, mediator recommendation game", true},
    };
    return registry;
}

} // namespace rsg
