#pragma once

#include "rsg/dynamics.hpp"
#include "rsg/finite_game.hpp"
#include "rsg/lp.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rsg {

// Incomplete-information extension: an exogenous state x picks which
// deterministic game is played; players hold priors over x.
class BayesianGame {
public:
    // state_costs[x][player][joint index] in ProfileSpace order.
    BayesianGame(std::vector<int> action_counts,
                 std::vector<std::vector<std::vector<Rational>>> state_costs,
                 std::vector<std::vector<Rational>> player_priors,
                 std::vector<std::vector<std::string>> action_labels = {},
                 std::vector<std::string> state_labels = {});

    // Common-prior convenience constructor.
    static BayesianGame with_common_prior(std::vector<int> action_counts,
                                          std::vector<std::vector<std::vector<Rational>>> costs,
                                          std::vector<Rational> prior,
                                          std::vector<std::vector<std::string>> labels = {},
                                          std::vector<std::string> state_labels = {});

    // Builds the per-state cost tensors by simulating each state's game
    // over the (shared) strategy sets.
    static BayesianGame from_state_games(const std::vector<RideShareGame> &state_games,
                                         std::vector<Rational> common_prior,
                                         std::vector<std::string> state_labels = {});

    int players() const { return static_cast<int>(action_counts_.size()); }
    int states() const { return static_cast<int>(state_costs_.size()); }
    int action_count(int i) const { return action_counts_.at(i); }
    const std::vector<int> &action_counts() const { return action_counts_; }
    bool common_prior() const { return common_prior_; }
    const Rational &prior(int player, int x) const { return priors_.at(player).at(x); }
    std::string state_label(int x) const;
    std::string action_label(int i, int a) const;

    Rational state_cost(int x, const StrategyProfile &profile, int i) const;
    Rational state_social_cost(int x, const StrategyProfile &profile) const;

    // That state's deterministic game, as a matrix game.
    MatrixGame state_game(int x) const;
    // The expected-cost game each player actually best-responds in.
    MatrixGame expected_game() const;

    ProfileSpace joint_space() const { return ProfileSpace(action_counts_); }

private:
    std::vector<int> action_counts_;
    std::vector<std::vector<std::vector<Rational>>> state_costs_;
    std::vector<std::vector<Rational>> priors_;
    bool common_prior_ = false;
    std::vector<std::vector<std::string>> action_labels_;
    std::vector<std::string> state_labels_;
};

Rational expected_cost(const BayesianGame &bgame, const StrategyProfile &profile, int i);
Rational expected_social_cost(const BayesianGame &bgame, const StrategyProfile &profile);

std::vector<StrategyProfile> enumerate_pbne(const BayesianGame &bgame,
                                            std::uint64_t budget = kDefaultProfileBudget);

// State-measurable benchmark: sum over x of p(x) * min_a c_s(a|x).
Rational full_information_optimum(const BayesianGame &bgame);

// Conditional distribution over joint recommendations per state.
struct RecommendationPolicy {
    std::vector<std::vector<Rational>> mass; // [x][joint index]
    void validate(const BayesianGame &bgame) const;

    static RecommendationPolicy deterministic(const BayesianGame &bgame,
                                              const std::vector<StrategyProfile> &per_state);
};

struct IcRowInfo {
    int player = -1;
    int recommended = -1;
    int deviation = -1;
};

// The obedience LP: variables sigma(a|x) for all (x, joint a), one
// inequality per (player, recommended action, deviation) summed over
// states, one normalization equality per state.
struct IcProgram {
    LinearProgram<Rational> lp;
    std::vector<IcRowInfo> rows; // parallel to lp.ub_rows
    int variable_index(const BayesianGame &bgame, int x, std::uint64_t joint) const;
};

IcProgram build_ic_lp(const BayesianGame &bgame);

struct BceResult {
    RecommendationPolicy policy;
    Rational expected_system_cost;
    Rational max_ic_violation; // certificate; <= 0 when obedient
};

// Solves the obedience LP exactly and packages the optimal policy.
BceResult optimal_bce(const BayesianGame &bgame);

struct PolicyEvaluation {
    Rational expected_system_cost;
    std::vector<Rational> ic_slack; // rhs - lhs per obedience row
    std::vector<IcRowInfo> rows;
    std::vector<Rational> player_expected_costs;
    bool incentive_compatible(double tol = 1e-9) const;
};

PolicyEvaluation evaluate_policy(const BayesianGame &bgame, const RecommendationPolicy &policy);

struct BcePoa {
    Rational pbne_poa; // worst pBNE expected social cost / full-info optimum
    Rational bce_poa;  // optimal BCE cost / full-info optimum
};

BcePoa bce_poa(const BayesianGame &bgame, std::uint64_t budget = kDefaultProfileBudget);

// Optimum over symmetric policies (two players, two actions): per state
// the recommendation puts alpha on (0,0), beta on each mixed cell, and
// the rest on (1,1).
struct SymmetricBceResult {
    std::vector<Rational> alpha; // per state
    std::vector<Rational> beta;
    Rational expected_system_cost;
};

SymmetricBceResult optimal_symmetric_bce(const BayesianGame &bgame);

} // namespace rsg
