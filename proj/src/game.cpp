#include "rsg/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsg {

RideShareGame::RideShareGame(RoadGraph graph, int horizon,
                             std::vector<std::vector<TripPath>> strategy_sets,
                             std::vector<int> player_start_nodes,
                             std::vector<int> vehicle_start_nodes, int capacity,
                             CostModel cost_model, AllocationPolicy policy)
    : graph_(std::move(graph)), horizon_(horizon), strategy_sets_(std::move(strategy_sets)),
      player_start_nodes_(std::move(player_start_nodes)),
      vehicle_start_nodes_(std::move(vehicle_start_nodes)), capacity_(capacity),
      cost_model_(std::move(cost_model)), policy_(policy) {
    if (capacity_ <= 0)
        throw std::invalid_argument("capacity must be positive (w > 0)");
    if (horizon_ < 2)
        throw std::invalid_argument("horizon must be at least 2");
    if (strategy_sets_.empty())
        throw std::invalid_argument("game needs at least one player");
    if (player_start_nodes_.size() != strategy_sets_.size())
        throw std::invalid_argument("one initial node per player required");
    for (int m = 0; m < vehicles(); ++m)
        if (vehicle_start(m) < 1 || vehicle_start(m) > graph_.node_count())
            throw std::invalid_argument("vehicle initial node out of range");
    for (int i = 0; i < players(); ++i) {
        const auto &set = strategy_sets_[i];
        if (set.empty())
            throw std::invalid_argument("empty strategy set for player " + std::to_string(i));
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (set[k].horizon() != horizon_)
                throw std::invalid_argument("strategy horizon mismatch for player " +
                                            std::to_string(i));
            if (set[k].node_at(1) != player_start_nodes_[i])
                throw std::invalid_argument("strategy does not start at player's initial node");
            for (std::size_t l = k + 1; l < set.size(); ++l)
                if (set[k] == set[l])
                    throw std::invalid_argument("duplicate strategy for player " +
                                                std::to_string(i));
        }
    }
}

bool RideShareGame::common_strategy_set() const {
    for (int i = 1; i < players(); ++i)
        if (strategy_sets_[i] != strategy_sets_[0])
            return false;
    return true;
}

std::vector<TripPath> enumerate_strategies(const RoadGraph &graph, int start,
                                           const std::set<int> &required, int horizon,
                                           bool return_to_start) {
    if (start < 1 || start > graph.node_count())
        throw std::invalid_argument("start node out of range");
    if (horizon < 2)
        throw std::invalid_argument("horizon must be at least 2");
    std::vector<TripPath> out;
    std::vector<int> nodes{start};
    // DFS in ascending successor order yields lexicographic output.
    auto recurse = [&](auto &&self, int current) -> void {
        if (static_cast<int>(nodes.size()) == horizon) {
            if (return_to_start && current != start)
                return;
            for (int need : required)
                if (std::find(nodes.begin(), nodes.end(), need) == nodes.end())
                    return;
            out.emplace_back(graph, nodes);
            return;
        }
        std::vector<int> next;
        for (int id : graph.out_edges(current))
            next.push_back(graph.edge(id).to);
        std::sort(next.begin(), next.end());
        for (int v : next) {
            nodes.push_back(v);
            self(self, v);
            nodes.pop_back();
        }
    };
    recurse(recurse, start);
    return out;
}

bool validate_profile(const RideShareGame &game, const StrategyProfile &profile) {
    if (static_cast<int>(profile.choice.size()) != game.players())
        return false;
    for (int i = 0; i < game.players(); ++i)
        if (profile.choice[i] < 0 ||
            profile.choice[i] >= static_cast<int>(game.strategies(i).size()))
            return false;
    return true;
}

ProfileSpace::ProfileSpace(std::vector<int> radices) : radices_(std::move(radices)), size_(1) {
    for (int r : radices_) {
        if (r <= 0)
            throw std::invalid_argument("profile space radix must be positive");
        size_ *= static_cast<std::uint64_t>(r);
    }
}

StrategyProfile ProfileSpace::at(std::uint64_t index) const {
    if (index >= size_)
        throw std::out_of_range("profile index out of range");
    StrategyProfile p;
    p.choice.resize(radices_.size());
    for (int i = static_cast<int>(radices_.size()) - 1; i >= 0; --i) {
        p.choice[i] = static_cast<int>(index % radices_[i]);
        index /= radices_[i];
    }
    return p;
}

std::uint64_t ProfileSpace::index_of(const StrategyProfile &p) const {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i)
        index = index * radices_[i] + static_cast<std::uint64_t>(p.choice[i]);
    return index;
}

ProfileSpace ProfileSpace::of(const RideShareGame &game) {
    std::vector<int> radices;
    for (int i = 0; i < game.players(); ++i)
        radices.push_back(static_cast<int>(game.strategies(i).size()));
    return ProfileSpace(std::move(radices));
}

} // namespace rsg
