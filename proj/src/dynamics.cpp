#include "rsg/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rsg {

namespace {

void check_budget(const FiniteGame &game, std::uint64_t budget, const char *op) {
    std::uint64_t n = 1;
    for (int i = 0; i < game.players(); ++i) {
        n *= static_cast<std::uint64_t>(game.action_count(i));
        if (n > budget)
            throw BudgetExceeded(std::string(op) + ": profile space exceeds budget of " +
                                 std::to_string(budget));
    }
}

} // namespace

std::uint64_t ImprovementGraph::edge_count() const {
    std::uint64_t n = 0;
    for (const auto &adj : out)
        n += adj.size();
    return n;
}

int best_response(const FiniteGame &game, const StrategyProfile &profile, int i) {
    const int count = game.action_count(i);
    if (count <= 0)
        throw std::invalid_argument("empty strategy set");
    StrategyProfile probe = profile;
    int best = 0;
    probe.choice[i] = 0;
    Rational best_cost = game.cost(probe, i);
    for (int a = 1; a < count; ++a) {
        probe.choice[i] = a;
        Rational c = game.cost(probe, i);
        if (c < best_cost) {
            best_cost = c;
            best = a;
        }
    }
    // Keep the current strategy when it already attains the minimum.
    if (game.cost(profile, i) == best_cost)
        return profile.choice[i];
    return best;
}

DynamicsTrace run_dynamics(const FiniteGame &game, const StrategyProfile &initial,
                           const std::vector<int> &order, std::uint64_t max_steps) {
    if (max_steps == 0)
        throw std::invalid_argument("max_steps must be positive");
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(game.players());
        for (int i = 0; i < game.players(); ++i)
            expect[i] = i;
        if (sorted != expect)
            throw std::invalid_argument("order must be a permutation of the players");
    }

    ProfileSpace space = game.space();
    DynamicsTrace trace;
    trace.initial = initial;

    StrategyProfile current = initial;
    std::set<std::pair<std::uint64_t, int>> seen; // (profile, turn) states
    int turn = 0;
    int quiet_turns = 0;

    while (true) {
        if (quiet_turns >= game.players()) {
            trace.status = DynamicsStatus::PneReached;
            break;
        }
        auto state = std::make_pair(space.index_of(current), turn);
        if (!seen.insert(state).second) {
            trace.status = DynamicsStatus::CycleDetected;
            break;
        }
        if (trace.steps.size() >= max_steps) {
            trace.status = DynamicsStatus::StepLimit;
            break;
        }
        int i = order[turn];
        int reply = best_response(game, current, i);
        if (reply != current.choice[i]) {
            DynamicsStep step;
            step.before = current;
            step.player = i;
            step.old_choice = current.choice[i];
            step.new_choice = reply;
            step.cost_before = game.cost(current, i);
            current.choice[i] = reply;
            step.cost_after = game.cost(current, i);
            step.potential_after = potential_value(game, current);
            trace.steps.push_back(std::move(step));
            quiet_turns = 0;
        } else {
            ++quiet_turns;
        }
        turn = (turn + 1) % static_cast<int>(order.size());
    }
    trace.final_profile = current;
    return trace;
}

bool is_pne(const FiniteGame &game, const StrategyProfile &profile) {
    for (int i = 0; i < game.players(); ++i) {
        Rational own = game.cost(profile, i);
        StrategyProfile probe = profile;
        for (int a = 0; a < game.action_count(i); ++a) {
            if (a == profile.choice[i])
                continue;
            probe.choice[i] = a;
            if (game.cost(probe, i) < own)
                return false;
        }
    }
    return true;
}

std::vector<StrategyProfile> enumerate_pne(const FiniteGame &game, std::uint64_t budget) {
    check_budget(game, budget, "enumerate_pne");
    ProfileSpace space = game.space();
    std::vector<StrategyProfile> out;
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
        StrategyProfile p = space.at(idx);
        if (is_pne(game, p))
            out.push_back(std::move(p));
    }
    return out;
}

ImprovementGraph build_improvement_graph(const FiniteGame &game, std::uint64_t budget) {
    check_budget(game, budget, "build_improvement_graph");
    ProfileSpace space = game.space();
    ImprovementGraph graph;
    for (int i = 0; i < game.players(); ++i)
        graph.radices.push_back(game.action_count(i));
    graph.out.resize(space.size());
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
        StrategyProfile p = space.at(idx);
        for (int i = 0; i < game.players(); ++i) {
            Rational own = game.cost(p, i);
            StrategyProfile q = p;
            for (int a = 0; a < game.action_count(i); ++a) {
                if (a == p.choice[i])
                    continue;
                q.choice[i] = a;
                Rational c = game.cost(q, i);
                if (c < own)
                    graph.out[idx].push_back({idx, space.index_of(q), i, c - own});
            }
        }
    }
    return graph;
}

std::optional<std::vector<std::uint64_t>> find_cycle(const ImprovementGraph &graph) {
    const std::uint64_t n = graph.node_count();
    // 0 = white, 1 = on stack, 2 = done.  Iterative DFS; the profile space
    // can be too large for recursion.
    std::vector<char> color(n, 0);
    std::vector<std::uint64_t> parent(n, n);
    for (std::uint64_t root = 0; root < n; ++root) {
        if (color[root] != 0)
            continue;
        std::vector<std::pair<std::uint64_t, std::size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto &[u, next] = stack.back();
            if (next < graph.out[u].size()) {
                std::uint64_t v = graph.out[u][next].to;
                ++next;
                if (color[v] == 0) {
                    color[v] = 1;
                    parent[v] = u;
                    stack.emplace_back(v, 0);
                } else if (color[v] == 1) {
                    // Unwind u -> ... -> v along parents.
                    std::vector<std::uint64_t> cycle{v};
                    for (std::uint64_t w = u; w != v; w = parent[w])
                        cycle.push_back(w);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    cycle.push_back(v);
                    return cycle;
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

bool has_fip(const FiniteGame &game, std::uint64_t budget) {
    return !find_cycle(build_improvement_graph(game, budget)).has_value();
}

std::vector<std::uint64_t> graph_sinks(const ImprovementGraph &graph) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t idx = 0; idx < graph.node_count(); ++idx)
        if (graph.out[idx].empty())
            out.push_back(idx);
    return out;
}

Rational potential_value(const FiniteGame &game, const StrategyProfile &profile) {
    Rational best = game.cost(profile, 0);
    for (int i = 1; i < game.players(); ++i)
        best = std::min(best, game.cost(profile, i));
    return best;
}

bool PotentialReport::strict_ok() const {
    return std::none_of(violations.begin(), violations.end(),
                        [](const PotentialViolation &v) { return v.strict_violation; });
}

bool PotentialReport::weak_ok() const {
    return std::none_of(violations.begin(), violations.end(),
                        [](const PotentialViolation &v) { return v.weak_violation; });
}

PotentialReport
check_ordinal_potential(const FiniteGame &game,
                        const std::function<Rational(const StrategyProfile &)> &phi,
                        std::uint64_t budget) {
    check_budget(game, budget, "check_ordinal_potential");
    ProfileSpace space = game.space();
    PotentialReport report;
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
        StrategyProfile p = space.at(idx);
        Rational phi_p = phi(p);
        for (int i = 0; i < game.players(); ++i) {
            Rational own = game.cost(p, i);
            StrategyProfile q = p;
            for (int a = 0; a < game.action_count(i); ++a) {
                if (a == p.choice[i])
                    continue;
                q.choice[i] = a;
                ++report.deviations_checked;
                Rational dc = game.cost(q, i) - own;
                Rational dphi = phi(q) - phi_p;
                bool strict_bad = !((dc < Rational(0) && dphi < Rational(0)) ||
                                    (dc > Rational(0) && dphi > Rational(0)) ||
                                    (dc == Rational(0) && dphi == Rational(0)));
                bool weak_bad = dc < Rational(0) && dphi > Rational(0);
                if (strict_bad || weak_bad)
                    report.violations.push_back({p, q, i, dc, dphi, strict_bad, weak_bad});
            }
        }
    }
    return report;
}

std::pair<StrategyProfile, Rational> social_optimum(const FiniteGame &game,
                                                    std::uint64_t budget) {
    check_budget(game, budget, "social_optimum");
    ProfileSpace space = game.space();
    StrategyProfile best = space.at(0);
    Rational best_cost = game.social_cost(best);
    for (std::uint64_t idx = 1; idx < space.size(); ++idx) {
        StrategyProfile p = space.at(idx);
        Rational c = game.social_cost(p);
        if (c < best_cost) { // lexicographic tie-break: keep the first
            best = std::move(p);
            best_cost = c;
        }
    }
    return {best, best_cost};
}

PoaResult price_of_anarchy(const FiniteGame &game, std::uint64_t budget) {
    auto equilibria = enumerate_pne(game, budget);
    if (equilibria.empty())
        throw AnalysisError("price_of_anarchy: the game has no pure Nash equilibrium");
    Rational opt = social_optimum(game, budget).second;
    if (opt == Rational(0))
        throw AnalysisError("price_of_anarchy: optimal social cost is zero");
    PoaResult result;
    bool first = true;
    for (const StrategyProfile &p : equilibria) {
        Rational ratio = game.social_cost(p) / opt;
        if (first) {
            result.worst = result.best = ratio;
            first = false;
        } else {
            result.worst = std::max(result.worst, ratio);
            result.best = std::min(result.best, ratio);
        }
    }
    return result;
}

} // namespace rsg
