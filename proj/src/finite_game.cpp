#include "rsg/finite_game.hpp"

#include <stdexcept>

namespace rsg {

MatrixGame::MatrixGame(std::vector<int> action_counts, std::vector<std::vector<Rational>> costs,
                       std::vector<std::vector<std::string>> labels)
    : action_counts_(std::move(action_counts)), costs_(std::move(costs)),
      labels_(std::move(labels)), space_(action_counts_) {
    if (costs_.size() != action_counts_.size())
        throw std::invalid_argument("one cost tensor per player required");
    for (const auto &tensor : costs_)
        if (tensor.size() != space_.size())
            throw std::invalid_argument("cost tensor size does not match joint action space");
}

Rational MatrixGame::cost(const StrategyProfile &profile, int i) const {
    return costs_.at(i).at(space_.index_of(profile));
}

std::string MatrixGame::action_label(int i, int a) const {
    if (i < static_cast<int>(labels_.size()) && a < static_cast<int>(labels_[i].size()))
        return labels_[i][a];
    return "a" + std::to_string(a);
}

RideShareGameView::RideShareGameView(RideShareGame game)
    : game_(std::move(game)), space_(ProfileSpace::of(game_)), flows_(space_.size()),
      cache_(space_.size()), cached_(space_.size(), false) {}

void RideShareGameView::fill(std::uint64_t idx, const StrategyProfile &profile) const {
    if (cached_[idx])
        return;
    flows_[idx] = compute_flows(game_, profile);
    cache_[idx] = player_costs(game_, profile, flows_[idx]);
    cached_[idx] = true;
}

Rational RideShareGameView::cost(const StrategyProfile &profile, int i) const {
    std::uint64_t idx = space_.index_of(profile);
    fill(idx, profile);
    return cache_[idx][i];
}

const FlowState &RideShareGameView::flow(const StrategyProfile &profile) const {
    std::uint64_t idx = space_.index_of(profile);
    fill(idx, profile);
    return flows_[idx];
}

} // namespace rsg
