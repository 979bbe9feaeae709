#pragma once

#include "rsg/graph.hpp"
#include "rsg/rational.hpp"

#include <map>
#include <variant>
#include <vector>

namespace rsg {

// Occupancy-driven cost formula over edge distances: sharing helps up to
// capacity, overcrowding hurts beyond it. s = 0 means no vehicle (walking)
// and costs the full distance.
struct FormulaCostModel {};

// Explicit per-edge table from occupancy to cost, for games specified by
// their worked-out numbers rather than geometry.
struct TableCostModel {
    // tables[edge_id][s] -> cost; lookup outside the table throws.
    std::map<int, std::map<int, Rational>> tables;
};

using CostModel = std::variant<FormulaCostModel, TableCostModel>;

// Cost of one player traversing `edge_id` in a vehicle of occupancy s
// (s includes the player; s = 0 means on foot).
Rational edge_cost(const CostModel &model, const RoadGraph &graph, int edge_id, int capacity,
                   int occupancy);

// Checks non-negativity and the monotone contract (non-increasing below w,
// non-decreasing at and above w) over s = 0..max_occupancy.
void validate_cost_model(const CostModel &model, const RoadGraph &graph, int capacity,
                         int max_occupancy);

} // namespace rsg
