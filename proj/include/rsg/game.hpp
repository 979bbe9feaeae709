#pragma once

#include "rsg/cost_model.hpp"
#include "rsg/graph.hpp"
#include "rsg/path.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace rsg {

enum class AllocationPolicy { FirstFitLinear };

// Strategy choice per player, as indices into the per-player strategy sets.
struct StrategyProfile {
    std::vector<int> choice; // choice[i] indexes game.strategies(i)

    bool operator==(const StrategyProfile &) const = default;
    auto operator<=>(const StrategyProfile &) const = default;
};

// Immutable game definition: who plays, on what map, with which trips
// available, and how vehicles are allocated and priced.
class RideShareGame {
public:
    RideShareGame(RoadGraph graph, int horizon, std::vector<std::vector<TripPath>> strategy_sets,
                  std::vector<int> player_start_nodes, std::vector<int> vehicle_start_nodes,
                  int capacity, CostModel cost_model,
                  AllocationPolicy policy = AllocationPolicy::FirstFitLinear);

    int players() const { return static_cast<int>(strategy_sets_.size()); }
    int vehicles() const { return static_cast<int>(vehicle_start_nodes_.size()); }
    int capacity() const { return capacity_; }
    int horizon() const { return horizon_; }
    const RoadGraph &graph() const { return graph_; }
    const std::vector<TripPath> &strategies(int i) const { return strategy_sets_.at(i); }
    int player_start(int i) const { return player_start_nodes_.at(i); }
    int vehicle_start(int m) const { return vehicle_start_nodes_.at(m); }
    const CostModel &cost_model() const { return cost_model_; }
    AllocationPolicy policy() const { return policy_; }

    const TripPath &path(int i, const StrategyProfile &a) const {
        return strategy_sets_[i][a.choice[i]];
    }

    bool common_strategy_set() const;

private:
    RoadGraph graph_;
    int horizon_;
    std::vector<std::vector<TripPath>> strategy_sets_;
    std::vector<int> player_start_nodes_;
    std::vector<int> vehicle_start_nodes_;
    int capacity_;
    CostModel cost_model_;
    AllocationPolicy policy_;
};

// All trips of length T from `start` visiting every node in `required`,
// ending back at `start` when return_to_start is set. Lexicographic by
// node sequence; empty when infeasible.
std::vector<TripPath> enumerate_strategies(const RoadGraph &graph, int start,
                                           const std::set<int> &required, int horizon,
                                           bool return_to_start);

// True iff every entry indexes a member of the owner's strategy set.
bool validate_profile(const RideShareGame &game, const StrategyProfile &profile);

// Mixed-radix walk over the joint strategy space.
class ProfileSpace {
public:
    explicit ProfileSpace(std::vector<int> radices);

    std::uint64_t size() const { return size_; }
    StrategyProfile at(std::uint64_t index) const;
    std::uint64_t index_of(const StrategyProfile &p) const;
    int radix(int i) const { return radices_.at(i); }
    int players() const { return static_cast<int>(radices_.size()); }

    static ProfileSpace of(const RideShareGame &game);

private:
    std::vector<int> radices_;
    std::uint64_t size_;
};

} // namespace rsg
