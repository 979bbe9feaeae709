#pragma once

#include "rsg/game.hpp"

#include <vector>

namespace rsg {

constexpr int kNoVehicle = -1;

// Everything the per-period simulation produces: who rode what, where the
// fleet was, and the per-edge head counts the analysis layers consume.
struct FlowState {
    int horizon = 0;  // T; periods are 1..T-1
    int players = 0;
    int vehicles = 0;

    // [t-1][edge_id]: players traversing the edge during (t, t+1).
    std::vector<std::vector<int>> players_on_edge;
    // [t-1][edge_id]: vehicles actually moving on the edge (loop edges
    // stay 0; idle vehicles are tracked as node residents instead).
    std::vector<std::vector<int>> vehicles_on_edge;
    // [t-1][player] -> vehicle id or kNoVehicle.
    std::vector<std::vector<int>> assigned_vehicle;
    // [t-1][vehicle] -> occupancy s_m during (t, t+1); 0 when parked.
    std::vector<std::vector<int>> occupancy;
    // [t-1][vehicle] -> node at time t (t = 1..T).  Size T.
    std::vector<std::vector<int>> vehicle_node;

    int player_count(int edge_id, int t) const { return players_on_edge.at(t - 1).at(edge_id); }
    int vehicle_count(int edge_id, int t) const { return vehicles_on_edge.at(t - 1).at(edge_id); }
    int assignment(int player, int t) const { return assigned_vehicle.at(t - 1).at(player); }
};

// Simulates first-fit linear allocation over t = 1..T-1.  At each node the
// resident vehicles are split across demanded non-loop outgoing edges
// proportionally (floored, largest remainder, ties by ascending edge id);
// on each edge players fill the lowest-index vehicle until full.  Vehicles
// that end up empty do not move.
FlowState compute_flows(const RideShareGame &game, const StrategyProfile &profile);

// N_et(b_i, a_-i) - N_et(a) for the update (a, b_i, i).
int delta_N(const RideShareGame &game, const StrategyProfile &profile, int player, int new_choice,
            int edge_id, int t);

// Update (a, b_i, i) keeps a vehicle on every timed edge of b_i that had
// one before.
bool is_no_vehicle_loss(const RideShareGame &game, const StrategyProfile &profile, int player,
                        int new_choice);

// s_m(t, a); 0 when parked.
int occupancy_of(const FlowState &flow, int vehicle, int t);

} // namespace rsg
