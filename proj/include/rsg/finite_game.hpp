#pragma once

#include "rsg/cost.hpp"
#include "rsg/game.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rsg {

// Finite normal-form view shared by the equilibrium machinery: either a
// simulated ride sharing game or an explicit cost matrix looks the same
// from here.
class FiniteGame {
public:
    virtual ~FiniteGame() = default;
    virtual int players() const = 0;
    virtual int action_count(int i) const = 0;
    virtual Rational cost(const StrategyProfile &profile, int i) const = 0;
    virtual std::string action_label(int i, int a) const = 0;

    Rational social_cost(const StrategyProfile &profile) const {
        Rational total(0);
        for (int i = 0; i < players(); ++i)
            total += cost(profile, i);
        return total;
    }
    ProfileSpace space() const {
        std::vector<int> radices;
        for (int i = 0; i < players(); ++i)
            radices.push_back(action_count(i));
        return ProfileSpace(std::move(radices));
    }
};

// Explicit cost tensors: costs[player][joint index] with joint indices in
// player-0-major mixed radix (ProfileSpace order).
class MatrixGame : public FiniteGame {
public:
    MatrixGame(std::vector<int> action_counts, std::vector<std::vector<Rational>> costs,
               std::vector<std::vector<std::string>> labels = {});

    int players() const override { return static_cast<int>(action_counts_.size()); }
    int action_count(int i) const override { return action_counts_.at(i); }
    Rational cost(const StrategyProfile &profile, int i) const override;
    std::string action_label(int i, int a) const override;

private:
    std::vector<int> action_counts_;
    std::vector<std::vector<Rational>> costs_;
    std::vector<std::vector<std::string>> labels_;
    ProfileSpace space_;
};

// Memoizing adapter from the simulated game; every profile's full cost
// vector is computed once.  Owns its copy of the game so views outlive
// whatever built them.
class RideShareGameView : public FiniteGame {
public:
    explicit RideShareGameView(RideShareGame game);

    int players() const override { return game_.players(); }
    int action_count(int i) const override {
        return static_cast<int>(game_.strategies(i).size());
    }
    Rational cost(const StrategyProfile &profile, int i) const override;
    std::string action_label(int i, int a) const override {
        return game_.strategies(i)[a].label();
    }
    const RideShareGame &game() const { return game_; }
    const FlowState &flow(const StrategyProfile &profile) const;

private:
    void fill(std::uint64_t idx, const StrategyProfile &profile) const;

    RideShareGame game_;
    ProfileSpace space_;
    mutable std::vector<FlowState> flows_;
    mutable std::vector<std::vector<Rational>> cache_;
    mutable std::vector<bool> cached_;
};

} // namespace rsg
