#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsg/game_file.hpp"
#include "rsg/scenarios.hpp"

using namespace rsg;
using nlohmann::json;

namespace {

json base_doc() {
    json doc = serialize_game(build_fip_game());
    return doc;
}

} // namespace

TEST_CASE("ride game serialization round-trips") {
    for (const RideShareGame &game :
         {build_fip_game(), build_nonfip_game(), build_two_vehicle_game()}) {
        LoadedGame loaded = parse_game_json(serialize_game(game));
        REQUIRE(std::holds_alternative<RideShareGame>(loaded));
        CHECK(games_equal(game, std::get<RideShareGame>(loaded)));
        CHECK(game_fingerprint(LoadedGame(game)) == game_fingerprint(loaded));
    }
}

TEST_CASE("bayesian matrix serialization round-trips") {
    BayesianGame game = build_signaling_game();
    json doc = serialize_game(game);
    LoadedGame loaded = parse_game_json(doc);
    REQUIRE(std::holds_alternative<BayesianGame>(loaded));
    const BayesianGame &back = std::get<BayesianGame>(loaded);
    CHECK(back.players() == 2);
    CHECK(back.states() == 2);
    for (int x = 0; x < 2; ++x)
        for (int a1 = 0; a1 < 2; ++a1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int i = 0; i < 2; ++i)
                    CHECK(back.state_cost(x, {{a1, a2}}, i) ==
                          game.state_cost(x, {{a1, a2}}, i));
    CHECK(serialize_game(back) == doc);
}

TEST_CASE("fingerprints distinguish different games") {
    CHECK(game_fingerprint(LoadedGame(build_fip_game())) !=
          game_fingerprint(LoadedGame(build_nonfip_game())));
    CHECK(game_fingerprint(LoadedGame(build_fip_game())) ==
          game_fingerprint(LoadedGame(build_fip_game())));
}

TEST_CASE("strategy rules expand to the explicit lists") {
    json doc = base_doc();
    doc["players"].erase("strategies");
    doc["players"]["strategy_rule"] = {{"required_nodes", {3, 4}}, {"return_to_start", true}};
    LoadedGame loaded = parse_game_json(doc);
    REQUIRE(std::holds_alternative<RideShareGame>(loaded));
    CHECK(games_equal(build_fip_game(), std::get<RideShareGame>(loaded)));
}

TEST_CASE("unknown and missing fields are rejected with their location") {
    json doc = base_doc();
    doc["frobnicate"] = 1;
    CHECK_THROWS_WITH_AS(parse_game_json(doc), doctest::Contains("frobnicate"), ParseError);

    doc = base_doc();
    doc["graph"]["color"] = "red";
    CHECK_THROWS_WITH_AS(parse_game_json(doc), doctest::Contains("graph"), ParseError);

    doc = base_doc();
    doc.erase("vehicles");
    CHECK_THROWS_WITH_AS(parse_game_json(doc), doctest::Contains("vehicles"), ParseError);

    doc = base_doc();
    doc["players"].erase("strategies");
    CHECK_THROWS_AS(parse_game_json(doc), ParseError); // neither rule nor lists
}

TEST_CASE("semantic validation failures") {
    json doc = base_doc();
    doc["allocation"] = "round_robin";
    CHECK_THROWS_AS(parse_game_json(doc), ParseError);

    doc = base_doc();
    doc["vehicles"]["capacity"] = 0;
    CHECK_THROWS_AS(parse_game_json(doc), ParseError);

    doc = base_doc();
    doc["players"]["strategies"][0][0] = {1, 7, 3, 4, 1}; // node 7 does not exist
    CHECK_THROWS_AS(parse_game_json(doc), ParseError);

    doc = base_doc();
    doc["graph"]["edges"][1]["d"] = "-1/2";
    CHECK_THROWS_AS(parse_game_json(doc), ParseError);
}

TEST_CASE("numbers parse from integers, decimals and fraction strings") {
    CHECK(json_to_rational(json(3), "x") == Rational(3));
    CHECK(json_to_rational(json("3/4"), "x") == Rational(3, 4));
    CHECK(json_to_rational(json(0.47), "x") == Rational(47, 100));
    CHECK(json_to_rational(json("-2.5"), "x") == Rational(-5, 2));
    CHECK_THROWS_AS(json_to_rational(json("1/0"), "x"), ParseError);
    CHECK_THROWS_AS(json_to_rational(json(true), "x"), ParseError);

    CHECK(rational_to_json(Rational(5)) == json(5));
    CHECK(rational_to_json(Rational(1, 3)) == json("1/3"));
}

TEST_CASE("table cost model round-trips") {
    RoadGraph g = RoadGraph::complete_with_loops(2, Rational(1));
    TableCostModel table;
    int e12 = *g.edge_between(1, 2);
    int e21 = *g.edge_between(2, 1);
    table.tables[e12] = {{0, Rational(8)}, {1, Rational(6)}, {2, Rational(1)}};
    table.tables[e21] = {{0, Rational(8)}, {1, Rational(6)}, {2, Rational(1)}};
    std::vector<TripPath> trips = {TripPath(g, {1, 2, 1}), TripPath(g, {1, 1, 1})};
    RideShareGame game(std::move(g), 3, {trips, trips}, {1, 1}, {1}, 2, table);

    LoadedGame loaded = parse_game_json(serialize_game(game));
    REQUIRE(std::holds_alternative<RideShareGame>(loaded));
    CHECK(games_equal(game, std::get<RideShareGame>(loaded)));
}

TEST_CASE("bayesian overrides build per-state fleets") {
    json doc = base_doc();
    doc["bayesian"] = {
        {"prior", {"1/2", "1/2"}},
        {"states", {{{"label", "none"}, {"vehicles", {{"count", 0}}}},
                    {{"label", "one"}}}}};
    LoadedGame loaded = parse_game_json(doc);
    REQUIRE(std::holds_alternative<BayesianGame>(loaded));
    const BayesianGame &g = std::get<BayesianGame>(loaded);
    CHECK(g.states() == 2);
    CHECK(g.state_label(0) == "none");
    CHECK(g.players() == 3);
    // state "one" matches the plain simulated game
    RideShareGameView view(build_fip_game());
    StrategyProfile p{{0, 0, 0}};
    CHECK(g.state_cost(1, p, 0) == view.cost(p, 0));
}

TEST_CASE("file loading reports parse failures") {
    CHECK_THROWS_AS(parse_game_file("/nonexistent/game.json"), ParseError);
}
