#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsg/analysis.hpp"
#include "rsg/scenarios.hpp"

#include <algorithm>

using namespace rsg;

namespace {

int strategy_index(const RideShareGame &game, const std::string &label) {
    const auto &set = game.strategies(0);
    for (int k = 0; k < static_cast<int>(set.size()); ++k)
        if (set[k].label() == label)
            return k;
    REQUIRE(false);
    return -1;
}

StrategyProfile make_profile(const RideShareGame &game, const std::string &a,
                             const std::string &b, const std::string &c) {
    return {{strategy_index(game, a), strategy_index(game, b), strategy_index(game, c)}};
}

} // namespace

TEST_CASE("riding segments and vehicle corridors at the shared-ride profile") {
    RideShareGame game = build_fip_game();
    RideShareGameView view(game);
    StrategyProfile p = make_profile(game, "(1,2,3,4,1)", "(1,1,3,4,1)", "(1,1,3,4,1)");
    const FlowState &flow = view.flow(p);

    auto driver = riding_segments(game, p, flow, 0);
    REQUIRE(driver.size() == 1);
    CHECK(driver[0].start_time() == 2);
    CHECK(driver[0].nodes() == std::vector<int>{2, 3, 4, 1});

    auto passenger = riding_segments(game, p, flow, 1);
    REQUIRE(passenger.size() == 1);
    CHECK(passenger[0].start_time() == 3);
    CHECK(passenger[0].nodes() == std::vector<int>{3, 4, 1});

    auto corridors = vehicle_corridors(game, flow, 0);
    REQUIRE(corridors.size() == 1);
    CHECK(corridors[0] == driver[0]);

    CHECK(is_allocated_path(flow, corridors[0]));
    CHECK(!is_allocated_path(flow, PathSegment(game.graph(), 2, {1, 3})));
}

TEST_CASE("candidate segments cover all timed sub-paths") {
    RideShareGame game = build_fip_game();
    auto cands = candidate_segments(game, 4);
    CHECK(cands.size() == 128); // distinct timed sub-segments of 18 trips
    for (const PathSegment &seg : cands) {
        CHECK(seg.edge_count() >= 1);
        bool contained = false;
        for (const TripPath &r : game.strategies(0))
            contained |= segment_contained(seg, r);
        CHECK(contained);
    }
    // anchoring distinguishes equal node runs at different times
    int same_nodes = 0;
    for (const PathSegment &seg : cands)
        if (seg.nodes() == std::vector<int>{3, 4} )
            ++same_nodes;
    CHECK(same_nodes >= 2);
}

TEST_CASE("no segment is necessary in the single-vehicle game") {
    // Riding can always be undercut: when two players leave node 2 on
    // different edges the vehicle follows the lowest edge id, so for any
    // corridor there is an opponent profile where chasing it costs more
    // than adopting the rival corridor.  Exhaustive search over all 128
    // candidates confirms none passes the dominance test.  The concrete
    // counterexample for the shared legs (3,4,1)@t=3 is pinned below.
    RideShareGame game = build_fip_game();
    RideShareGameView view(game);

    PathSegment shared(game.graph(), 3, {3, 4, 1});
    CHECK(!is_necessary_path(view, shared));

    StrategyProfile chase = make_profile(game, "(1,2,3,4,1)", "(1,1,3,4,1)", "(1,2,4,3,1)");
    StrategyProfile rival = make_profile(game, "(1,1,4,3,1)", "(1,1,3,4,1)", "(1,2,4,3,1)");
    CHECK(view.cost(chase, 0) == Rational(13, 6)); // best way to include (3,4,1)@3
    CHECK(view.cost(rival, 0) == Rational(5, 3));  // avoiding it is cheaper

    auto classified = classify_paths(view, candidate_segments(game, 4));
    CHECK(classified.necessary.empty());
    CHECK(classified.both.empty());
}

TEST_CASE("sufficiency of the shared legs") {
    RideShareGame game = build_fip_game();
    RideShareGameView view(game);
    // whenever riding exactly (3,4,1)@t=3 is achievable it is weakly
    // cheapest among achievable riding sets
    CHECK(is_sufficient_path(view, PathSegment(game.graph(), 3, {3, 4, 1})));
}

TEST_CASE("convergence hypotheses on the example games") {
    RideShareGameView fip(build_fip_game());
    HypothesisReport r = check_theorem_hypotheses(fip);
    CHECK(r.common_strategy_set);
    CHECK(r.single_vehicle);
    CHECK(r.fleet_covers_players);
    CHECK(r.first_fit_linear);
    REQUIRE(r.disjoint_ns_set.has_value());
    CHECK(!*r.disjoint_ns_set); // equilibrium corridors fail the dominance tests

    RideShareGameView nonfip(build_nonfip_game());
    HypothesisReport q = check_theorem_hypotheses(nonfip);
    CHECK(q.common_strategy_set);
    CHECK(!q.single_vehicle);       // M = 2
    CHECK(!q.fleet_covers_players); // w = 1 < N = 3

    RideShareGameView twov(build_two_vehicle_game());
    HypothesisReport s = check_theorem_hypotheses(twov);
    CHECK(!s.single_vehicle);
    CHECK(s.fleet_covers_players);

    // supplied candidates are judged as given
    PathSegment shared(fip.game().graph(), 3, {3, 4, 1});
    HypothesisReport t = check_theorem_hypotheses(fip, {shared});
    REQUIRE(t.disjoint_ns_set.has_value());
    CHECK(!*t.disjoint_ns_set); // sufficient but not necessary
}

TEST_CASE("roles with respect to the shared corridor") {
    RideShareGame game = build_fip_game();
    StrategyProfile p = make_profile(game, "(1,2,3,4,1)", "(1,1,3,4,1)", "(1,1,3,4,1)");
    PathSegment shared(game.graph(), 3, {3, 4, 1});
    auto roles = classify_roles(game, p, shared);
    CHECK(roles[0] == PlayerRole::Driver);    // rides a strict superset
    CHECK(roles[1] == PlayerRole::Passenger); // rides exactly the corridor
    CHECK(roles[2] == PlayerRole::Passenger);

    StrategyProfile walkers = make_profile(game, "(1,1,3,4,1)", "(1,1,3,4,1)", "(1,1,3,4,1)");
    auto pedestrians = classify_roles(game, walkers, shared);
    for (PlayerRole role : pedestrians)
        CHECK(role == PlayerRole::Pedestrian);
}

TEST_CASE("copying a rider is never worse on vehicle-preserving updates") {
    RideShareGameView view(build_fip_game());
    CopyLemmaReport report = check_copy_lemma(view, 1000, 42);
    CHECK(report.sampled == 1000);
    CHECK(report.checked == 959); // draws surviving the no-vehicle-loss filter
    CHECK(report.violations == 0);

    // a different seed agrees
    CopyLemmaReport again = check_copy_lemma(view, 1000, 2024);
    CHECK(again.violations == 0);
}
