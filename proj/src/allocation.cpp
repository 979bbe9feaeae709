#include "rsg/allocation.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsg {

FlowState compute_flows(const RideShareGame &game, const StrategyProfile &profile) {
    if (!validate_profile(game, profile))
        throw std::invalid_argument("invalid strategy profile");

    const RoadGraph &graph = game.graph();
    const int T = game.horizon();
    const int N = game.players();
    const int M = game.vehicles();
    const int E = graph.edge_count();

    FlowState flow;
    flow.horizon = T;
    flow.players = N;
    flow.vehicles = M;
    flow.players_on_edge.assign(T - 1, std::vector<int>(E, 0));
    flow.vehicles_on_edge.assign(T - 1, std::vector<int>(E, 0));
    flow.assigned_vehicle.assign(T - 1, std::vector<int>(N, kNoVehicle));
    flow.occupancy.assign(T - 1, std::vector<int>(M, 0));
    flow.vehicle_node.assign(T, std::vector<int>(M, 0));

    for (int m = 0; m < M; ++m)
        flow.vehicle_node[0][m] = game.vehicle_start(m);

    for (int t = 1; t <= T - 1; ++t) {
        auto &n_et = flow.players_on_edge[t - 1];
        for (int i = 0; i < N; ++i)
            ++n_et[game.path(i, profile).edge_at(t)];

        // Default: everyone stays put until moved below.
        for (int m = 0; m < M; ++m)
            flow.vehicle_node[t][m] = flow.vehicle_node[t - 1][m];

        for (int v = 1; v <= graph.node_count(); ++v) {
            std::vector<int> fleet; // resident vehicles, ascending id
            for (int m = 0; m < M; ++m)
                if (flow.vehicle_node[t - 1][m] == v)
                    fleet.push_back(m);
            if (fleet.empty())
                continue;

            // Demanded non-loop outgoing edges, ascending edge id.
            std::vector<int> demanded;
            long long total_demand = 0;
            for (int e : graph.out_edges(v)) {
                if (graph.edge(e).loop)
                    continue;
                if (n_et[e] > 0) {
                    demanded.push_back(e);
                    total_demand += n_et[e];
                }
            }
            if (total_demand == 0)
                continue; // all vehicles wait via the loop

            // M_et = floor(k * N_et) with k = |fleet| / total_demand,
            // remainder by largest residual, ties by ascending edge id.
            const long long mv = static_cast<long long>(fleet.size());
            std::vector<long long> alloc(demanded.size());
            std::vector<long long> residual(demanded.size());
            long long assigned = 0;
            for (std::size_t k = 0; k < demanded.size(); ++k) {
                long long num = mv * n_et[demanded[k]];
                alloc[k] = num / total_demand;
                residual[k] = num % total_demand;
                assigned += alloc[k];
            }
            long long remaining = mv - assigned;
            std::vector<std::size_t> order(demanded.size());
            for (std::size_t k = 0; k < order.size(); ++k)
                order[k] = k;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return residual[a] > residual[b];
            });
            for (long long r = 0; r < remaining; ++r)
                ++alloc[order[static_cast<std::size_t>(r)]];

            // Hand out vehicle ids edge by edge, then seat players
            // first-fit into the lowest-index vehicle on their edge.
            std::size_t next_vehicle = 0;
            for (std::size_t k = 0; k < demanded.size(); ++k) {
                const int e = demanded[k];
                std::vector<int> cars;
                for (long long c = 0; c < alloc[k] && next_vehicle < fleet.size(); ++c)
                    cars.push_back(fleet[next_vehicle++]);
                if (cars.empty())
                    continue;
                std::size_t car_idx = 0;
                int seated_in_car = 0;
                for (int i = 0; i < N; ++i) {
                    if (game.path(i, profile).edge_at(t) != e)
                        continue;
                    if (car_idx >= cars.size())
                        break; // remaining players walk
                    flow.assigned_vehicle[t - 1][i] = cars[car_idx];
                    ++flow.occupancy[t - 1][cars[car_idx]];
                    if (++seated_in_car == game.capacity()) {
                        ++car_idx;
                        seated_in_car = 0;
                    }
                }
                // Only vehicles that picked somebody up move.
                for (int m : cars) {
                    if (flow.occupancy[t - 1][m] > 0) {
                        flow.vehicle_node[t][m] = graph.edge(e).to;
                        ++flow.vehicles_on_edge[t - 1][e];
                    }
                }
            }
        }
    }
    return flow;
}

int delta_N(const RideShareGame &game, const StrategyProfile &profile, int player, int new_choice,
            int edge_id, int t) {
    if (new_choice < 0 || new_choice >= static_cast<int>(game.strategies(player).size()))
        throw std::invalid_argument("deviation outside the player's strategy set");
    const TripPath &before = game.path(player, profile);
    const TripPath &after = game.strategies(player)[new_choice];
    int d = 0;
    if (after.edge_at(t) == edge_id)
        ++d;
    if (before.edge_at(t) == edge_id)
        --d;
    return d;
}

bool is_no_vehicle_loss(const RideShareGame &game, const StrategyProfile &profile, int player,
                        int new_choice) {
    FlowState before = compute_flows(game, profile);
    StrategyProfile updated = profile;
    updated.choice[player] = new_choice;
    FlowState after = compute_flows(game, updated);
    const TripPath &b = game.strategies(player)[new_choice];
    for (const TimedEdge &te : b.timed_edges())
        if (before.vehicle_count(te.edge_id, te.t) > 0 &&
            after.vehicle_count(te.edge_id, te.t) == 0)
            return false;
    return true;
}

int occupancy_of(const FlowState &flow, int vehicle, int t) {
    if (vehicle < 0 || vehicle >= flow.vehicles || t < 1 || t > flow.horizon - 1)
        throw std::out_of_range("occupancy index out of range");
    return flow.occupancy[t - 1][vehicle];
}

} // namespace rsg
