#include "rsg/report.hpp"

#include "rsg/analysis.hpp"
#include "rsg/bayesian.hpp"
#include "rsg/dot.hpp"
#include "rsg/dynamics.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

namespace rsg {

namespace {

using nlohmann::json;

json number(const Rational &r) {
    return json{{"exact", rational_to_json(r)}, {"value", to_double(r)}};
}

json profile_json(const FiniteGame &game, const ProfileSpace &space,
                  const StrategyProfile &profile) {
    json actions = json::array();
    for (int i = 0; i < game.players(); ++i)
        actions.push_back(game.action_label(i, profile.choice[i]));
    return json{{"id", space.index_of(profile)}, {"choice", profile.choice},
                {"actions", actions}};
}

StrategyProfile resolve_initial(const FiniteGame &game, const ProfileSpace &space,
                                const std::optional<std::uint64_t> &initial) {
    std::uint64_t id = initial.value_or(0);
    if (id >= space.size())
        throw ParseError("initial profile id " + std::to_string(id) + " out of range (space has " +
                         std::to_string(space.size()) + " profiles)");
    return space.at(id);
}

json cmd_dynamics(const FiniteGame &game, const RunOptions &options, std::string *dot,
                  int *exit_code) {
    ProfileSpace space = game.space();
    StrategyProfile initial = resolve_initial(game, space, options.initial);
    std::vector<int> order = parse_order(options.order, game.players());
    DynamicsTrace trace = run_dynamics(game, initial, order, options.max_steps);

    json steps = json::array();
    for (const DynamicsStep &step : trace.steps) {
        steps.push_back({{"profile", space.index_of(step.before)},
                         {"player", step.player + 1},
                         {"from_action", game.action_label(step.player, step.old_choice)},
                         {"to_action", game.action_label(step.player, step.new_choice)},
                         {"cost_before", number(step.cost_before)},
                         {"cost_after", number(step.cost_after)},
                         {"potential_after", number(step.potential_after)}});
    }
    const char *status = trace.status == DynamicsStatus::PneReached    ? "pne_reached"
                         : trace.status == DynamicsStatus::CycleDetected ? "cycle_detected"
                                                                         : "step_limit";
    if (trace.status == DynamicsStatus::StepLimit)
        *exit_code = 2;

    json final_costs = json::array();
    for (int i = 0; i < game.players(); ++i)
        final_costs.push_back(number(game.cost(trace.final_profile, i)));

    if (options.want_dot)
        *dot = dynamics_trace_dot(game, trace);
    return json{{"status", status},
                {"initial", profile_json(game, space, trace.initial)},
                {"order", order},
                {"steps", steps},
                {"step_count", trace.steps.size()},
                {"final", profile_json(game, space, trace.final_profile)},
                {"final_costs", final_costs}};
}

json equilibrium_list(const FiniteGame &game, const ProfileSpace &space,
                      const std::vector<StrategyProfile> &profiles) {
    json out = json::array();
    for (const StrategyProfile &p : profiles) {
        json costs = json::array();
        for (int i = 0; i < game.players(); ++i)
            costs.push_back(number(game.cost(p, i)));
        json entry = profile_json(game, space, p);
        entry["costs"] = costs;
        entry["social_cost"] = number(game.social_cost(p));
        out.push_back(entry);
    }
    return out;
}

json cmd_pne(const FiniteGame &game, const RunOptions &options) {
    ProfileSpace space = game.space();
    auto pne = enumerate_pne(game, options.budget);
    return json{{"count", pne.size()}, {"equilibria", equilibrium_list(game, space, pne)}};
}

json cmd_fip(const FiniteGame &game, const RunOptions &options, std::string *dot) {
    ImprovementGraph graph = build_improvement_graph(game, options.budget);
    auto cycle = find_cycle(graph);
    auto sinks = graph_sinks(graph);
    if (options.want_dot)
        *dot = improvement_graph_dot(game, graph);
    json out{{"has_fip", !cycle.has_value()},
             {"profiles", graph.node_count()},
             {"improvement_edges", graph.edge_count()},
             {"sinks", sinks}};
    if (cycle)
        out["cycle"] = *cycle;
    return out;
}

json cmd_poa(const FiniteGame &game, const RunOptions &options) {
    ProfileSpace space = game.space();
    auto [opt_profile, opt_cost] = social_optimum(game, options.budget);
    PoaResult poa = price_of_anarchy(game, options.budget);
    json optimum = profile_json(game, space, opt_profile);
    optimum["social_cost"] = number(opt_cost);
    return json{{"optimum", optimum},
                {"worst_case", number(poa.worst)},
                {"best_case", number(poa.best)}};
}

json violation_json(const FiniteGame &game, const ProfileSpace &space,
                    const PotentialViolation &v) {
    return json{{"from", space.index_of(v.from)},
                {"to", space.index_of(v.to)},
                {"player", v.player + 1},
                {"cost_delta", number(v.cost_delta)},
                {"potential_delta", number(v.phi_delta)},
                {"strict", v.strict_violation},
                {"weak", v.weak_violation}};
}

json cmd_potential(const FiniteGame &game, const RunOptions &options) {
    ProfileSpace space = game.space();
    auto phi = [&](const StrategyProfile &p) { return potential_value(game, p); };
    PotentialReport report = check_ordinal_potential(game, phi, options.budget);
    json violations = json::array();
    std::size_t shown = 0;
    for (const PotentialViolation &v : report.violations) {
        if (shown++ >= 25)
            break; // keep reports bounded on badly behaved games
        violations.push_back(violation_json(game, space, v));
    }
    return json{{"potential", "min_player_cost"},
                {"deviations_checked", report.deviations_checked},
                {"ordinal_potential", report.strict_ok()},
                {"never_increases_on_improvement", report.weak_ok()},
                {"violation_count", report.violations.size()},
                {"violations", violations}};
}

json segment_json(const PathSegment &segment) {
    return json{{"start_time", segment.start_time()}, {"nodes", segment.nodes()},
                {"label", segment.label()}};
}

json cmd_hypotheses(const RideShareGameView &view, const RunOptions &options) {
    HypothesisReport report = check_theorem_hypotheses(view, {}, options.budget);
    json candidates = json::array();
    for (const PathSegment &seg : report.ns_candidates_checked)
        candidates.push_back(segment_json(seg));
    json h5;
    if (report.disjoint_ns_set)
        h5 = *report.disjoint_ns_set;
    bool all = report.common_strategy_set && report.single_vehicle &&
               report.fleet_covers_players && report.first_fit_linear &&
               report.disjoint_ns_set.value_or(false);
    return json{{"common_strategy_set", report.common_strategy_set},
                {"single_vehicle", report.single_vehicle},
                {"fleet_covers_players", report.fleet_covers_players},
                {"first_fit_linear", report.first_fit_linear},
                {"disjoint_necessary_sufficient_set", h5},
                {"candidates_checked", candidates},
                {"all_hold", all}};
}

json cmd_pbne(const BayesianGame &bgame, const RunOptions &options) {
    ProfileSpace space = bgame.joint_space();
    MatrixGame expected = bgame.expected_game();
    auto pbne = enumerate_pbne(bgame, options.budget);
    json list = json::array();
    for (const StrategyProfile &p : pbne) {
        json costs = json::array();
        for (int i = 0; i < bgame.players(); ++i)
            costs.push_back(number(expected_cost(bgame, p, i)));
        json entry = profile_json(expected, space, p);
        entry["expected_costs"] = costs;
        entry["expected_social_cost"] = number(expected_social_cost(bgame, p));
        list.push_back(entry);
    }
    return json{{"count", pbne.size()}, {"equilibria", list}};
}

json cmd_bce(const BayesianGame &bgame, const RunOptions &options) {
    IcProgram program = build_ic_lp(bgame);
    BceResult bce = optimal_bce(bgame);
    PolicyEvaluation eval = evaluate_policy(bgame, bce.policy);
    BcePoa poa = bce_poa(bgame, options.budget);

    json policy = json::array();
    ProfileSpace space = bgame.joint_space();
    for (int x = 0; x < bgame.states(); ++x) {
        json cells = json::array();
        for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
            const Rational &mass = bce.policy.mass[x][idx];
            if (mass == Rational(0))
                continue;
            StrategyProfile p = space.at(idx);
            json actions = json::array();
            for (int i = 0; i < bgame.players(); ++i)
                actions.push_back(bgame.action_label(i, p.choice[i]));
            cells.push_back({{"actions", actions}, {"probability", number(mass)}});
        }
        policy.push_back({{"state", bgame.state_label(x)}, {"recommendations", cells}});
    }

    json player_costs = json::array();
    for (const Rational &c : eval.player_expected_costs)
        player_costs.push_back(number(c));

    return json{{"lp", {{"variables", program.lp.objective.size()},
                        {"obedience_rows", program.lp.ub_rows.size()}}},
                {"optimal_cost", number(bce.expected_system_cost)},
                {"max_ic_violation", number(bce.max_ic_violation)},
                {"policy", policy},
                {"player_expected_costs", player_costs},
                {"full_information_optimum", number(full_information_optimum(bgame))},
                {"pbne_poa", number(poa.pbne_poa)},
                {"bce_poa", number(poa.bce_poa)}};
}

} // namespace

std::vector<int> parse_order(const std::string &order, int players) {
    std::vector<int> turns(players);
    std::iota(turns.begin(), turns.end(), 0);
    if (order == "roundrobin")
        return turns;
    if (order.rfind("random:", 0) == 0) {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(order.substr(7));
        } catch (...) {
            throw ParseError("bad seed in order '" + order + "'");
        }
        std::mt19937_64 rng(seed);
        std::shuffle(turns.begin(), turns.end(), rng);
        return turns;
    }
    throw ParseError("unknown order '" + order + "' (expected roundrobin or random:<seed>)");
}

RunResult run_command(const RunOptions &options, const LoadedGame &game) {
    auto start = std::chrono::steady_clock::now();
    RunResult result;
    json results;

    const RideShareGame *ride = std::get_if<RideShareGame>(&game);
    const BayesianGame *bayes = std::get_if<BayesianGame>(&game);

    if (options.command == "pbne" || options.command == "bce") {
        if (!bayes)
            throw AnalysisError(options.command + " requires an incomplete-information game");
        results = options.command == "pbne" ? cmd_pbne(*bayes, options)
                                            : cmd_bce(*bayes, options);
    } else {
        std::unique_ptr<RideShareGameView> view;
        std::unique_ptr<MatrixGame> expected;
        const FiniteGame *finite = nullptr;
        if (ride) {
            view = std::make_unique<RideShareGameView>(*ride);
            finite = view.get();
        } else {
            // Complete-information analyses on an uncertain game read the
            // expected-cost matrix.
            expected = std::make_unique<MatrixGame>(bayes->expected_game());
            finite = expected.get();
        }

        if (options.command == "dynamics")
            results = cmd_dynamics(*finite, options, &result.dot, &result.exit_code);
        else if (options.command == "pne")
            results = cmd_pne(*finite, options);
        else if (options.command == "fip")
            results = cmd_fip(*finite, options, &result.dot);
        else if (options.command == "poa")
            results = cmd_poa(*finite, options);
        else if (options.command == "potential-check")
            results = cmd_potential(*finite, options);
        else if (options.command == "hypotheses") {
            if (!view)
                throw AnalysisError("hypotheses requires a simulated ride sharing game");
            results = cmd_hypotheses(*view, options);
        } else
            throw ParseError("unknown command '" + options.command + "'");
    }

    auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);
    json opts{{"order", options.order},
              {"max_steps", options.max_steps},
              {"budget", options.budget}};
    if (options.initial)
        opts["initial"] = *options.initial;
    result.report = json{{"command", options.command},
                         {"game_fingerprint", game_fingerprint(game)},
                         {"options", opts},
                         {"results", results},
                         {"wall_ms", wall.count()}};
    return result;
}

RunResult run_command(const RunOptions &options) {
    return run_command(options, parse_game_file(options.game_path));
}

} // namespace rsg
