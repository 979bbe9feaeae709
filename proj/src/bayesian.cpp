#include "rsg/bayesian.hpp"

#include "rsg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsg {

BayesianGame::BayesianGame(std::vector<int> action_counts,
                           std::vector<std::vector<std::vector<Rational>>> state_costs,
                           std::vector<std::vector<Rational>> player_priors,
                           std::vector<std::vector<std::string>> action_labels,
                           std::vector<std::string> state_labels)
    : action_counts_(std::move(action_counts)), state_costs_(std::move(state_costs)),
      priors_(std::move(player_priors)), action_labels_(std::move(action_labels)),
      state_labels_(std::move(state_labels)) {
    if (state_costs_.empty())
        throw std::invalid_argument("at least one state required");
    ProfileSpace space(action_counts_);
    for (const auto &per_state : state_costs_) {
        if (per_state.size() != action_counts_.size())
            throw std::invalid_argument("one cost tensor per player per state required");
        for (const auto &tensor : per_state) {
            if (tensor.size() != space.size())
                throw std::invalid_argument("state cost tensor size mismatch");
            for (const Rational &c : tensor)
                if (c < Rational(0))
                    throw std::invalid_argument("negative cost entry");
        }
    }
    if (priors_.size() != action_counts_.size())
        throw std::invalid_argument("one prior per player required");
    for (const auto &prior : priors_) {
        if (prior.size() != state_costs_.size())
            throw std::invalid_argument("prior length must match state count");
        Rational sum(0);
        for (const Rational &p : prior) {
            if (p < Rational(0))
                throw std::invalid_argument("negative prior probability");
            sum += p;
        }
        if (sum != Rational(1))
            throw std::invalid_argument("prior must sum to 1");
    }
    common_prior_ = std::all_of(priors_.begin(), priors_.end(),
                                [&](const auto &p) { return p == priors_.front(); });
}

BayesianGame BayesianGame::with_common_prior(std::vector<int> action_counts,
                                             std::vector<std::vector<std::vector<Rational>>> costs,
                                             std::vector<Rational> prior,
                                             std::vector<std::vector<std::string>> labels,
                                             std::vector<std::string> state_labels) {
    std::vector<std::vector<Rational>> priors(action_counts.size(), prior);
    return BayesianGame(std::move(action_counts), std::move(costs), std::move(priors),
                        std::move(labels), std::move(state_labels));
}

BayesianGame BayesianGame::from_state_games(const std::vector<RideShareGame> &state_games,
                                            std::vector<Rational> common_prior,
                                            std::vector<std::string> state_labels) {
    if (state_games.empty())
        throw std::invalid_argument("at least one state game required");
    const RideShareGame &base = state_games.front();
    std::vector<int> counts;
    std::vector<std::vector<std::string>> labels;
    for (int i = 0; i < base.players(); ++i) {
        counts.push_back(static_cast<int>(base.strategies(i).size()));
        std::vector<std::string> per_player;
        for (const TripPath &p : base.strategies(i))
            per_player.push_back(p.label());
        labels.push_back(std::move(per_player));
    }
    ProfileSpace space = ProfileSpace::of(base);
    std::vector<std::vector<std::vector<Rational>>> costs;
    for (const RideShareGame &g : state_games) {
        if (g.players() != base.players())
            throw std::invalid_argument("states must share the player set");
        for (int i = 0; i < base.players(); ++i)
            if (g.strategies(i) != base.strategies(i))
                throw std::invalid_argument("states must share the strategy sets");
        std::vector<std::vector<Rational>> per_state(base.players(),
                                                     std::vector<Rational>(space.size()));
        for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
            StrategyProfile p = space.at(idx);
            FlowState flow = compute_flows(g, p);
            for (int i = 0; i < base.players(); ++i)
                per_state[i][idx] = player_cost(g, p, flow, i);
        }
        costs.push_back(std::move(per_state));
    }
    return with_common_prior(std::move(counts), std::move(costs), std::move(common_prior),
                             std::move(labels), std::move(state_labels));
}

std::string BayesianGame::state_label(int x) const {
    if (x < static_cast<int>(state_labels_.size()))
        return state_labels_[x];
    return "x=" + std::to_string(x);
}

std::string BayesianGame::action_label(int i, int a) const {
    if (i < static_cast<int>(action_labels_.size()) &&
        a < static_cast<int>(action_labels_[i].size()))
        return action_labels_[i][a];
    return "a" + std::to_string(a);
}

Rational BayesianGame::state_cost(int x, const StrategyProfile &profile, int i) const {
    return state_costs_.at(x).at(i).at(joint_space().index_of(profile));
}

Rational BayesianGame::state_social_cost(int x, const StrategyProfile &profile) const {
    Rational total(0);
    for (int i = 0; i < players(); ++i)
        total += state_cost(x, profile, i);
    return total;
}

MatrixGame BayesianGame::state_game(int x) const {
    return MatrixGame(action_counts_, state_costs_.at(x), action_labels_);
}

MatrixGame BayesianGame::expected_game() const {
    ProfileSpace space = joint_space();
    std::vector<std::vector<Rational>> costs(players(), std::vector<Rational>(space.size()));
    for (int i = 0; i < players(); ++i)
        for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
            Rational sum(0);
            for (int x = 0; x < states(); ++x)
                sum += priors_[i][x] * state_costs_[x][i][idx];
            costs[i][idx] = sum;
        }
    return MatrixGame(action_counts_, std::move(costs), action_labels_);
}

Rational expected_cost(const BayesianGame &bgame, const StrategyProfile &profile, int i) {
    Rational sum(0);
    for (int x = 0; x < bgame.states(); ++x)
        sum += bgame.prior(i, x) * bgame.state_cost(x, profile, i);
    return sum;
}

Rational expected_social_cost(const BayesianGame &bgame, const StrategyProfile &profile) {
    Rational sum(0);
    for (int i = 0; i < bgame.players(); ++i)
        sum += expected_cost(bgame, profile, i);
    return sum;
}

std::vector<StrategyProfile> enumerate_pbne(const BayesianGame &bgame, std::uint64_t budget) {
    MatrixGame expected = bgame.expected_game();
    return enumerate_pne(expected, budget);
}

Rational full_information_optimum(const BayesianGame &bgame) {
    if (!bgame.common_prior())
        throw AnalysisError("full_information_optimum requires a common prior");
    ProfileSpace space = bgame.joint_space();
    Rational total(0);
    for (int x = 0; x < bgame.states(); ++x) {
        Rational best = bgame.state_social_cost(x, space.at(0));
        for (std::uint64_t idx = 1; idx < space.size(); ++idx)
            best = std::min(best, bgame.state_social_cost(x, space.at(idx)));
        total += bgame.prior(0, x) * best;
    }
    return total;
}

void RecommendationPolicy::validate(const BayesianGame &bgame) const {
    if (static_cast<int>(mass.size()) != bgame.states())
        throw std::invalid_argument("policy must cover every state");
    std::uint64_t joints = bgame.joint_space().size();
    for (const auto &per_state : mass) {
        if (per_state.size() != joints)
            throw std::invalid_argument("policy row size mismatch");
        Rational sum(0);
        for (const Rational &p : per_state) {
            if (p < Rational(0))
                throw std::invalid_argument("negative recommendation probability");
            sum += p;
        }
        if (std::abs(to_double(sum) - 1.0) > 1e-9)
            throw std::invalid_argument("recommendation distribution must sum to 1");
    }
}

RecommendationPolicy
RecommendationPolicy::deterministic(const BayesianGame &bgame,
                                    const std::vector<StrategyProfile> &per_state) {
    if (static_cast<int>(per_state.size()) != bgame.states())
        throw std::invalid_argument("one profile per state required");
    ProfileSpace space = bgame.joint_space();
    RecommendationPolicy policy;
    policy.mass.assign(bgame.states(), std::vector<Rational>(space.size(), Rational(0)));
    for (int x = 0; x < bgame.states(); ++x)
        policy.mass[x][space.index_of(per_state[x])] = Rational(1);
    return policy;
}

int IcProgram::variable_index(const BayesianGame &bgame, int x, std::uint64_t joint) const {
    return static_cast<int>(x * bgame.joint_space().size() + joint);
}

IcProgram build_ic_lp(const BayesianGame &bgame) {
    ProfileSpace space = bgame.joint_space();
    const std::uint64_t joints = space.size();
    const int X = bgame.states();
    const std::size_t vars = static_cast<std::size_t>(X) * joints;

    IcProgram program;
    program.lp.objective.assign(vars, Rational(0));
    if (bgame.common_prior())
        for (int x = 0; x < X; ++x)
            for (std::uint64_t j = 0; j < joints; ++j)
                program.lp.objective[x * joints + j] =
                    bgame.prior(0, x) * bgame.state_social_cost(x, space.at(j));

    // Obedience: for every recommended action and every deviation (the
    // identity deviation yields an all-zero row and stays, matching the
    // universally quantified inequality).
    for (int i = 0; i < bgame.players(); ++i) {
        for (int rec = 0; rec < bgame.action_count(i); ++rec) {
            for (int dev = 0; dev < bgame.action_count(i); ++dev) {
                std::vector<Rational> row(vars, Rational(0));
                for (int x = 0; x < X; ++x) {
                    for (std::uint64_t j = 0; j < joints; ++j) {
                        StrategyProfile p = space.at(j);
                        if (p.choice[i] != rec)
                            continue;
                        StrategyProfile q = p;
                        q.choice[i] = dev;
                        row[x * joints + j] = bgame.prior(i, x) * (bgame.state_cost(x, p, i) -
                                                                   bgame.state_cost(x, q, i));
                    }
                }
                program.lp.ub_rows.push_back(std::move(row));
                program.lp.ub_rhs.push_back(Rational(0));
                program.rows.push_back({i, rec, dev});
            }
        }
    }

    for (int x = 0; x < X; ++x) {
        std::vector<Rational> row(vars, Rational(0));
        for (std::uint64_t j = 0; j < joints; ++j)
            row[x * joints + j] = Rational(1);
        program.lp.eq_rows.push_back(std::move(row));
        program.lp.eq_rhs.push_back(Rational(1));
    }
    return program;
}

BceResult optimal_bce(const BayesianGame &bgame) {
    if (!bgame.common_prior())
        throw AnalysisError("optimal_bce requires a common prior for its objective");
    IcProgram program = build_ic_lp(bgame);
    LpSolution<Rational> sol = solve_lp(program.lp);
    if (sol.status != LpStatus::Optimal)
        // Any deterministic pBNE policy satisfies every obedience row, so
        // the program is always feasible and bounded below by 0.
        throw std::logic_error("obedience LP unexpectedly " +
                               std::string(sol.status == LpStatus::Infeasible ? "infeasible"
                                                                              : "unbounded"));
    const std::uint64_t joints = bgame.joint_space().size();
    BceResult result;
    result.policy.mass.assign(bgame.states(), std::vector<Rational>(joints, Rational(0)));
    for (int x = 0; x < bgame.states(); ++x)
        for (std::uint64_t j = 0; j < joints; ++j)
            result.policy.mass[x][j] = sol.values[x * joints + j];
    result.expected_system_cost = sol.objective;
    result.max_ic_violation = Rational(0);
    PolicyEvaluation eval = evaluate_policy(bgame, result.policy);
    for (const Rational &slack : eval.ic_slack)
        result.max_ic_violation = std::max(result.max_ic_violation, -slack);
    return result;
}

PolicyEvaluation evaluate_policy(const BayesianGame &bgame, const RecommendationPolicy &policy) {
    policy.validate(bgame);
    IcProgram program = build_ic_lp(bgame);
    ProfileSpace space = bgame.joint_space();
    const std::uint64_t joints = space.size();

    PolicyEvaluation eval;
    eval.rows = program.rows;
    std::vector<Rational> y(static_cast<std::size_t>(bgame.states()) * joints);
    for (int x = 0; x < bgame.states(); ++x)
        for (std::uint64_t j = 0; j < joints; ++j)
            y[x * joints + j] = policy.mass[x][j];

    eval.expected_system_cost = Rational(0);
    if (bgame.common_prior())
        for (std::size_t k = 0; k < y.size(); ++k)
            eval.expected_system_cost += program.lp.objective[k] * y[k];

    for (std::size_t r = 0; r < program.lp.ub_rows.size(); ++r) {
        Rational lhs(0);
        for (std::size_t k = 0; k < y.size(); ++k)
            lhs += program.lp.ub_rows[r][k] * y[k];
        eval.ic_slack.push_back(program.lp.ub_rhs[r] - lhs);
    }

    for (int i = 0; i < bgame.players(); ++i) {
        Rational total(0);
        for (int x = 0; x < bgame.states(); ++x)
            for (std::uint64_t j = 0; j < joints; ++j)
                total += bgame.prior(i, x) * policy.mass[x][j] *
                         bgame.state_cost(x, space.at(j), i);
        eval.player_expected_costs.push_back(total);
    }
    return eval;
}

bool PolicyEvaluation::incentive_compatible(double tol) const {
    return std::all_of(ic_slack.begin(), ic_slack.end(),
                       [tol](const Rational &s) { return to_double(s) >= -tol; });
}

BcePoa bce_poa(const BayesianGame &bgame, std::uint64_t budget) {
    auto equilibria = enumerate_pbne(bgame, budget);
    if (equilibria.empty())
        throw AnalysisError("bce_poa: the game has no pure Bayesian Nash equilibrium");
    Rational opt = full_information_optimum(bgame);
    if (opt == Rational(0))
        throw AnalysisError("bce_poa: full-information optimum is zero");
    Rational worst = expected_social_cost(bgame, equilibria.front());
    for (const StrategyProfile &p : equilibria)
        worst = std::max(worst, expected_social_cost(bgame, p));
    BcePoa out;
    out.pbne_poa = worst / opt;
    out.bce_poa = optimal_bce(bgame).expected_system_cost / opt;
    return out;
}

SymmetricBceResult optimal_symmetric_bce(const BayesianGame &bgame) {
    if (bgame.players() != 2 || bgame.action_count(0) != 2 || bgame.action_count(1) != 2)
        throw AnalysisError("symmetric restriction supports two players with two actions");
    if (!bgame.common_prior())
        throw AnalysisError("optimal_symmetric_bce requires a common prior");

    // Variables per state: alpha on (0,0), beta on (0,1) and (1,0); the
    // induced mass 1 - alpha - 2 beta on (1,1) turns rows affine, so the
    // constant part moves to the rhs.
    const int X = bgame.states();
    ProfileSpace space = bgame.joint_space();
    auto joint = [&](int a0, int a1) { return space.index_of({{a0, a1}}); };

    IcProgram full = build_ic_lp(bgame);
    const std::uint64_t joints = space.size();
    auto reduce_row = [&](const std::vector<Rational> &row, std::vector<Rational> &out,
                          Rational &constant) {
        out.assign(2 * X, Rational(0));
        constant = Rational(0);
        for (int x = 0; x < X; ++x) {
            Rational c00 = row[x * joints + joint(0, 0)];
            Rational c01 = row[x * joints + joint(0, 1)];
            Rational c10 = row[x * joints + joint(1, 0)];
            Rational c11 = row[x * joints + joint(1, 1)];
            out[2 * x] = c00 - c11;          // alpha_x
            out[2 * x + 1] = c01 + c10 - Rational(2) * c11; // beta_x
            constant += c11;
        }
    };

    LinearProgram<Rational> lp;
    Rational objective_constant;
    reduce_row(full.lp.objective, lp.objective, objective_constant);
    for (std::size_t r = 0; r < full.lp.ub_rows.size(); ++r) {
        std::vector<Rational> row;
        Rational constant;
        reduce_row(full.lp.ub_rows[r], row, constant);
        lp.ub_rows.push_back(std::move(row));
        lp.ub_rhs.push_back(full.lp.ub_rhs[r] - constant);
    }
    for (int x = 0; x < X; ++x) { // alpha_x + 2 beta_x <= 1
        std::vector<Rational> row(2 * X, Rational(0));
        row[2 * x] = Rational(1);
        row[2 * x + 1] = Rational(2);
        lp.ub_rows.push_back(std::move(row));
        lp.ub_rhs.push_back(Rational(1));
    }

    LpSolution<Rational> sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("symmetric obedience LP unexpectedly not optimal");
    SymmetricBceResult result;
    for (int x = 0; x < X; ++x) {
        result.alpha.push_back(sol.values[2 * x]);
        result.beta.push_back(sol.values[2 * x + 1]);
    }
    result.expected_system_cost = sol.objective + objective_constant;
    return result;
}

} // namespace rsg
