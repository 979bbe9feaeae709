// Acceptance gate: one line per criterion.  Criteria 7, 8 and part of 9
// assert convergence claims that exhaustive search refutes for the example
// games as specified (strict-improvement cycles exist; see README).  Those
// lines report FAIL honestly; the binary exits 0 only when every criterion
// resolves exactly as documented, so an unexpected regression still breaks
// the suite.

#include "rsg/analysis.hpp"
#include "rsg/bayesian.hpp"
#include "rsg/dynamics.hpp"
#include "rsg/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>

using namespace rsg;

namespace {

int failures = 0; // mismatches against the documented outcome

void report(int criterion, bool pass, bool expected_pass, const std::string &detail) {
    std::printf("criterion %d: %s - %s%s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str(),
                pass == expected_pass ? "" : " [UNEXPECTED]");
    if (pass != expected_pass)
        ++failures;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// --- independent signaling-game data for the oracle ------------------
// cost[x][i][a1][a2], transcribed by hand rather than taken from the
// library under test
const double kCost[2][2][2][2] = {
    {{{20, 20}, {16, 16}}, {{20, 16}, {20, 16}}},
    {{{10, 15}, {9, 16}}, {{10, 9}, {15, 16}}},
};

double system_cost(int x, int a1, int a2) {
    return kCost[x][0][a1][a2] + kCost[x][1][a1][a2];
}

// Symmetric policy: per state mass a on (C,C), b on each of (C,D),(D,C).
struct SymPolicy {
    double a[2];
    double b[2];
};

double oracle_objective(const SymPolicy &p) {
    double total = 0;
    for (int x = 0; x < 2; ++x) {
        double rest = 1 - p.a[x] - 2 * p.b[x];
        total += 0.5 * (p.a[x] * system_cost(x, 0, 0) +
                        p.b[x] * (system_cost(x, 0, 1) + system_cost(x, 1, 0)) +
                        rest * system_cost(x, 1, 1));
    }
    return total;
}

bool oracle_obedient(const SymPolicy &p, double tol = 1e-9) {
    // player 1 rows; player 2 is identical by the symmetry of the tables
    double told_c = 0, told_d = 0;
    for (int x = 0; x < 2; ++x) {
        double rest = 1 - p.a[x] - 2 * p.b[x];
        told_c += 0.5 * (p.a[x] * (kCost[x][0][0][0] - kCost[x][0][1][0]) +
                         p.b[x] * (kCost[x][0][0][1] - kCost[x][0][1][1]));
        told_d += 0.5 * (p.b[x] * (kCost[x][0][1][0] - kCost[x][0][0][0]) +
                         rest * (kCost[x][0][1][1] - kCost[x][0][0][1]));
    }
    return told_c <= tol && told_d <= tol;
}

double grid_search_optimum() {
    // State 0 has its system cost minimized by all-(D,D) and any other
    // mass only tightens the obedience rows, so the fine scan fixes
    // a0 = b0 = 0 and sweeps state 1 at step 0.005; a coarse full sweep
    // over both states cross-checks that nothing better was excluded.
    double best = 1e9;
    for (int ia = 0; ia <= 200; ++ia)
        for (int ib = 0; 2 * ib + ia <= 200; ++ib) {
            SymPolicy p{{0, ia * 0.005}, {0, ib * 0.005}};
            if (!oracle_obedient(p))
                continue;
            best = std::min(best, oracle_objective(p));
        }
    for (int ia0 = 0; ia0 <= 20; ++ia0)
        for (int ib0 = 0; 2 * ib0 + ia0 <= 20; ++ib0)
            for (int ia1 = 0; ia1 <= 20; ++ia1)
                for (int ib1 = 0; 2 * ib1 + ia1 <= 20; ++ib1) {
                    SymPolicy p{{ia0 * 0.05, ia1 * 0.05}, {ib0 * 0.05, ib1 * 0.05}};
                    if (!oracle_obedient(p))
                        continue;
                    if (oracle_objective(p) < best - 0.005)
                        return -1; // coarse sweep beat the fine scan: bug
                }
    return best;
}

// --------------------------------------------------------------------

void criterion_1() {
    BayesianGame g = build_signaling_game();
    MatrixGame e = g.expected_game();
    bool ok = e.cost({{0, 0}}, 0) == Rational(15) && e.cost({{0, 0}}, 1) == Rational(15) &&
              e.cost({{0, 1}}, 0) == Rational(35, 2) && e.cost({{0, 1}}, 1) == Rational(25, 2) &&
              e.cost({{1, 0}}, 0) == Rational(25, 2) && e.cost({{1, 0}}, 1) == Rational(35, 2) &&
              e.cost({{1, 1}}, 0) == Rational(16) && e.cost({{1, 1}}, 1) == Rational(16);
    report(1, ok, true, "expected-cost matrix reproduced exactly");
}

void criterion_2() {
    BayesianGame g = build_signaling_game();
    auto pbne = enumerate_pbne(g);
    bool ok = pbne.size() == 1 && pbne[0].choice == std::vector<int>{1, 1} &&
              expected_social_cost(g, pbne[0]) == Rational(32);
    report(2, ok, true, "unique equilibrium (D,D) with expected system cost 32");
}

void criterion_3() {
    BayesianGame g = build_signaling_game();
    BcePoa poa = bce_poa(g);
    bool ok = full_information_optimum(g) == Rational(26) &&
              near(to_double(poa.pbne_poa), 16.0 / 13.0, 1e-9);
    report(3, ok, true, "full-information benchmark 26, equilibrium/optimum ratio 16/13");
}

void criterion_4() {
    BayesianGame g = build_signaling_game();
    RecommendationPolicy policy;
    policy.mass = {{Rational(0), Rational(0), Rational(0), Rational(1)},
                   {Rational(3, 50), Rational(47, 100), Rational(47, 100), Rational(0)}};
    PolicyEvaluation eval = evaluate_policy(g, policy);
    bool slack_ok = true;
    for (const Rational &s : eval.ic_slack)
        slack_ok &= to_double(s) >= -1e-9;
    double cost = to_double(eval.expected_system_cost);
    bool ok = slack_ok && near(cost, 27.88, 0.02) && near(cost / 26.0, 1.072, 0.001);
    report(4, ok, true, "published policy is obedient, costs 27.88, ratio 1.072");
}

void criterion_5() {
    BayesianGame g = build_signaling_game();
    BceResult bce = optimal_bce(g);
    double lp_value = to_double(bce.expected_system_cost);
    double oracle = grid_search_optimum();
    PolicyEvaluation eval = evaluate_policy(g, bce.policy);
    bool ok = eval.incentive_compatible() && lp_value <= 27.88 + 1e-6 &&
              oracle >= 0 && near(lp_value, oracle, 0.01);
    std::string note = "lp optimum " + std::to_string(lp_value) + ", grid oracle " +
                       std::to_string(oracle);
    if (lp_value < 27.88 - 1e-6)
        note += "; DISCREPANCY: strictly better than the published 27.88 policy";
    report(5, ok, true, note);
}

void criterion_6() {
    RideShareGameView view(build_nonfip_game());
    ImprovementGraph graph = build_improvement_graph(view);
    auto cycle = find_cycle(graph);
    DynamicsTrace trace = run_dynamics(view, view.space().at(0), {0, 1, 2}, 1000);
    bool ok = cycle.has_value() && trace.status == DynamicsStatus::CycleDetected;
    report(6, ok, true, "capacity-one game: improvement cycle found and play loops");
}

void criterion_7() {
    RideShareGame game = build_fip_game();
    RideShareGameView view(game);

    auto pne = enumerate_pne(view);
    bool riders_ok = !pne.empty();
    for (const StrategyProfile &p : pne) {
        const FlowState &flow = view.flow(p);
        for (int t = 1; t < game.horizon(); ++t)
            for (int i = 0; i < game.players(); ++i) {
                int e = game.path(i, p).edge_at(t);
                if (flow.vehicle_count(e, t) > 0 && flow.assignment(i, t) == kNoVehicle)
                    riders_ok = false;
            }
    }
    HypothesisReport hyp = check_theorem_hypotheses(view);
    bool h14 = hyp.common_strategy_set && hyp.single_vehicle && hyp.fleet_covers_players &&
               hyp.first_fit_linear;
    bool acyclic = has_fip(view);
    bool ok = acyclic && riders_ok && h14;
    std::string note = "equilibria " + std::to_string(pne.size()) +
                       (riders_ok ? ", co-located players always seated" : ", seating violated") +
                       (h14 ? ", H1-H4 hold" : ", H1-H4 violated");
    note += acyclic ? ", improvement graph acyclic"
                    : "; improvement graph HAS a cycle (vehicle rerouting at node 2 defeats "
                      "the min-cost potential), so the convergence claim fails";
    report(7, ok, /*expected_pass=*/false, note);
}

void criterion_8() {
    RideShareGameView view(build_two_vehicle_game());
    HypothesisReport hyp = check_theorem_hypotheses(view);
    bool acyclic = has_fip(view);
    bool ok = acyclic && !hyp.single_vehicle;
    report(8, ok, /*expected_pass=*/false,
           acyclic ? "two-vehicle game converges with H2 false"
                   : "two-vehicle game also contains improvement cycles; claim fails");
}

void criterion_9() {
    std::mt19937_64 rng(99);
    std::vector<std::string> notes;
    bool all_expected = true;

    { // cost formula: continuity at s = w and unimodality, 1000 draws
        bool ok = true;
        RoadGraph g2 = RoadGraph::complete_with_loops(2, Rational(1));
        std::uniform_int_distribution<int> wdist(1, 10), num(1, 40);
        for (int round = 0; round < 1000 && ok; ++round) {
            int w = wdist(rng);
            Rational d(num(rng), num(rng));
            RoadGraph g = RoadGraph::complete_with_loops(2, d);
            int e = *g.edge_between(1, 2);
            auto cost = [&](int s) { return edge_cost(FormulaCostModel{}, g, e, w, s); };
            ok &= cost(w) == d / Rational(w + 1);
            Rational at_w = cost(w);
            for (int s = 0; s <= 2 * w + 2; ++s) {
                ok &= cost(s) >= at_w;
                if (s < w)
                    ok &= cost(s + 1) < cost(s);
                else
                    ok &= cost(s + 1) >= cost(s);
            }
        }
        notes.push_back(std::string(ok ? "cost-curve ok" : "cost-curve FAILED"));
        all_expected &= ok;
    }

    RideShareGame fip_game = build_fip_game();
    RideShareGameView fip(fip_game);
    ProfileSpace fip_space = fip.space();

    { // conservation + capacity, 1000 random profiles across all games
        bool ok = true;
        for (const RideShareGame &game :
             {build_fip_game(), build_nonfip_game(), build_two_vehicle_game()}) {
            ProfileSpace space = ProfileSpace::of(game);
            std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
            for (int round = 0; round < 334 && ok; ++round) {
                FlowState f = compute_flows(game, space.at(pick(rng)));
                for (int t = 1; t < game.horizon(); ++t) {
                    int moving = 0;
                    for (int m = 0; m < game.vehicles(); ++m) {
                        ok &= occupancy_of(f, m, t) <= game.capacity();
                        ok &= f.vehicle_node[t - 1][m] >= 1 &&
                              f.vehicle_node[t - 1][m] <= game.graph().node_count();
                        if (occupancy_of(f, m, t) > 0)
                            ++moving;
                        else
                            ok &= f.vehicle_node[t - 1][m] == f.vehicle_node[t][m];
                    }
                    int on_edges = 0;
                    for (int e = 0; e < game.graph().edge_count(); ++e)
                        on_edges += f.vehicle_count(e, t);
                    ok &= on_edges == moving;
                }
            }
        }
        notes.push_back(std::string(ok ? "conservation ok" : "conservation FAILED"));
        all_expected &= ok;
    }

    { // single-vehicle seating when the fleet covers everyone, 1000 draws
        bool ok = true;
        std::uniform_int_distribution<std::uint64_t> pick(0, fip_space.size() - 1);
        for (int round = 0; round < 1000 && ok; ++round) {
            StrategyProfile p = fip_space.at(pick(rng));
            FlowState f = compute_flows(fip_game, p);
            for (int t = 1; t < fip_game.horizon(); ++t)
                for (int e = 0; e < fip_game.graph().edge_count(); ++e) {
                    if (fip_game.graph().edge(e).loop)
                        continue;
                    std::set<int> used;
                    int riders = 0;
                    for (int i = 0; i < 3; ++i) {
                        if (fip_game.path(i, p).edge_at(t) != e)
                            continue;
                        int m = f.assignment(i, t);
                        if (f.vehicle_count(e, t) > 0) {
                            ok &= m != kNoVehicle;
                            used.insert(m);
                            ++riders;
                        } else {
                            ok &= m == kNoVehicle;
                        }
                    }
                    ok &= used.size() <= 1;
                    for (int m : used)
                        ok &= occupancy_of(f, m, t) == riders;
                }
        }
        notes.push_back(std::string(ok ? "shared-seating ok" : "shared-seating FAILED"));
        all_expected &= ok;
    }

    { // copying a rider on vehicle-preserving updates, 1000 draws
        CopyLemmaReport rep = check_copy_lemma(fip, 1000, 424242);
        bool ok = rep.violations == 0 && rep.checked > 0;
        notes.push_back(std::string(ok ? "copy-inequality ok" : "copy-inequality FAILED"));
        all_expected &= ok;
    }

    { // driver stability: vacuous because the game has no necessary path
        auto cls = classify_paths(fip, candidate_segments(fip_game, 4));
        bool vacuous = cls.necessary.empty();
        notes.push_back(vacuous ? "driver-stability vacuous (no necessary path exists)"
                                : "driver-stability evaluated");
        all_expected &= vacuous;
    }

    bool phi_ok = true;
    { // min-cost potential weak decrease on every improvement edge
        ImprovementGraph graph = build_improvement_graph(fip);
        std::uint64_t increases = 0;
        for (const auto &out : graph.out)
            for (const ImprovementEdge &e : out)
                if (potential_value(fip, fip_space.at(e.to)) >
                    potential_value(fip, fip_space.at(e.from)))
                    ++increases;
        phi_ok = increases == 0;
        notes.push_back(phi_ok ? "potential weak-decrease ok"
                               : "potential weak-decrease FAILS on " +
                                     std::to_string(increases) + " improvement edges");
    }

    { // sinks coincide with enumerated equilibria on every example game
        bool ok = true;
        for (const RideShareGame &game :
             {build_fip_game(), build_nonfip_game(), build_two_vehicle_game()}) {
            RideShareGameView view(game);
            ImprovementGraph graph = build_improvement_graph(view);
            std::set<std::uint64_t> sinks;
            for (std::uint64_t s : graph_sinks(graph))
                sinks.insert(s);
            std::set<std::uint64_t> pne;
            ProfileSpace space = view.space();
            for (const StrategyProfile &p : enumerate_pne(view))
                pne.insert(space.index_of(p));
            ok &= sinks == pne;
        }
        notes.push_back(std::string(ok ? "sinks==equilibria ok" : "sinks==equilibria FAILED"));
        all_expected &= ok;
    }

    std::string detail;
    for (const std::string &n : notes)
        detail += (detail.empty() ? "" : "; ") + n;
    // every sub-suite is expected to pass except the potential weak-decrease
    // claim, which the criterion-7 cycle already refutes
    bool pass = all_expected && phi_ok;
    report(9, pass, /*expected_pass=*/false, detail);
    if (!pass && !(all_expected && !phi_ok))
        ++failures; // failed, but not in the documented way
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures) {
        std::printf("%d criterion outcome(s) diverged from the documented results\n", failures);
        return 1;
    }
    std::printf("all criteria resolved as documented (3 known FAILs: see README)\n");
    return 0;
}
