#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsg/cost_model.hpp"

#include <random>

using namespace rsg;

namespace {

RoadGraph map4() { return RoadGraph::complete_with_loops(4, Rational(1)); }

Rational unit_cost(int capacity, int occupancy, const Rational &d = Rational(1)) {
    RoadGraph g = RoadGraph::complete_with_loops(2, d);
    int e12 = *g.edge_between(1, 2);
    return edge_cost(FormulaCostModel{}, g, e12, capacity, occupancy);
}

} // namespace

TEST_CASE("formula values") {
    CHECK(unit_cost(4, 0) == Rational(1));     // walking pays full distance
    CHECK(unit_cost(4, 1) == Rational(1, 2));
    CHECK(unit_cost(4, 2) == Rational(1, 3));
    CHECK(unit_cost(4, 3) == Rational(1, 4));
    CHECK(unit_cost(4, 4) == Rational(1, 5));  // s = w, sharing branch
    CHECK(unit_cost(3, 3) == Rational(1, 4));
    CHECK(unit_cost(3, 4) == Rational(7, 16)); // 1 - 9/16, overload branch
    CHECK(unit_cost(1, 2) == Rational(3, 4));  // 1 - 1/4
    CHECK(unit_cost(1, 3) == Rational(5, 6));  // 1 - 1/6
    CHECK(unit_cost(4, 2, Rational(3)) == Rational(1)); // scales with d
}

TEST_CASE("loop edges are free") {
    RoadGraph g = map4();
    int loop = g.loop_edge(2);
    for (int s = 0; s <= 5; ++s)
        CHECK(edge_cost(FormulaCostModel{}, g, loop, 4, s) == Rational(0));
}

TEST_CASE("branches agree at s = w") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> wdist(1, 12);
    std::uniform_int_distribution<int> num(1, 50);
    for (int round = 0; round < 1000; ++round) {
        int w = wdist(rng);
        Rational d(num(rng), num(rng));
        // sharing branch at s = w
        Rational sharing = d / Rational(w + 1);
        // overload branch evaluated at s = w
        Rational overload = d * (Rational(1) - Rational(w * w) / Rational(w * (w + 1)));
        CHECK(sharing == overload);
        CHECK(unit_cost(w, w, d) == sharing);
    }
}

TEST_CASE("cost is unimodal with minimum at s = w") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> wdist(1, 10);
    std::uniform_int_distribution<int> num(1, 50);
    for (int round = 0; round < 1000; ++round) {
        int w = wdist(rng);
        Rational d(num(rng), num(rng));
        Rational at_w = unit_cost(w, w, d);
        for (int s = 1; s <= 2 * w + 3; ++s) {
            Rational here = unit_cost(w, s, d);
            CHECK(here >= at_w);
            if (s < w)
                CHECK(unit_cost(w, s + 1, d) < here);  // strictly helps below w
            if (s >= w)
                CHECK(unit_cost(w, s + 1, d) >= here); // never helps past w
        }
        CHECK(unit_cost(w, 1, d) < unit_cost(w, 0, d)); // w >= 1 always
    }
}

TEST_CASE("table model lookups") {
    RoadGraph g = map4();
    int e12 = *g.edge_between(1, 2);
    TableCostModel table;
    table.tables[e12] = {{0, Rational(8)}, {1, Rational(6)}, {2, Rational(1)}};
    CostModel model = table;
    CHECK(edge_cost(model, g, e12, 2, 0) == Rational(8));
    CHECK(edge_cost(model, g, e12, 2, 2) == Rational(1));
    CHECK_THROWS(edge_cost(model, g, e12, 2, 3));                      // missing occupancy
    CHECK_THROWS(edge_cost(model, g, *g.edge_between(2, 1), 2, 0));    // missing edge
}

TEST_CASE("model validation enforces the monotone contract") {
    RoadGraph g = map4();
    CHECK_NOTHROW(validate_cost_model(FormulaCostModel{}, g, 4, 10));

    int e12 = *g.edge_between(1, 2);
    TableCostModel bad;
    bad.tables[e12] = {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(3)}};
    CHECK_THROWS(validate_cost_model(bad, g, 2, 2)); // increasing below w

    TableCostModel negative;
    negative.tables[e12] = {{0, Rational(-1)}};
    CHECK_THROWS(validate_cost_model(negative, g, 2, 0));

    TableCostModel good;
    good.tables[e12] = {{0, Rational(8)}, {1, Rational(6)}, {2, Rational(1)}};
    for (const Edge &e : g.edges())
        if (!e.loop && good.tables.find(*g.edge_between(e.from, e.to)) == good.tables.end())
            good.tables[*g.edge_between(e.from, e.to)] = good.tables[e12];
    CHECK_NOTHROW(validate_cost_model(good, g, 2, 2));
}
