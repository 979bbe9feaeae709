#include "rsg/game_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rsg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &where, const std::string &what) {
    throw ParseError(where + ": " + what);
}

void require_keys(const json &obj, const std::string &where, const std::set<std::string> &allowed,
                  const std::set<std::string> &required) {
    if (!obj.is_object())
        fail(where, "expected an object");
    for (const auto &[key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key))
            fail(where, "unknown field '" + key + "'");
    }
    for (const std::string &key : required)
        if (!obj.contains(key))
            fail(where, "missing field '" + key + "'");
}

int get_int(const json &obj, const std::string &where) {
    if (!obj.is_number_integer())
        fail(where, "expected an integer");
    return obj.get<int>();
}

std::vector<int> get_int_list(const json &obj, const std::string &where) {
    if (!obj.is_array())
        fail(where, "expected an array");
    std::vector<int> out;
    for (std::size_t k = 0; k < obj.size(); ++k)
        out.push_back(get_int(obj[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

RoadGraph parse_graph(const json &doc) {
    require_keys(doc, "graph", {"nodes", "edges"}, {"nodes", "edges"});
    int nodes = get_int(doc["nodes"], "graph.nodes");
    if (!doc["edges"].is_array())
        fail("graph.edges", "expected an array");
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
        const json &e = doc["edges"][k];
        std::string where = "graph.edges[" + std::to_string(k) + "]";
        require_keys(e, where, {"from", "to", "d"}, {"from", "to", "d"});
        edges.push_back({get_int(e["from"], where + ".from"), get_int(e["to"], where + ".to"),
                         json_to_rational(e["d"], where + ".d"), false});
    }
    try {
        return RoadGraph(nodes, std::move(edges));
    } catch (const std::invalid_argument &ex) {
        fail("graph", ex.what());
    }
}

CostModel parse_cost(const json &doc, const RoadGraph &graph) {
    require_keys(doc, "cost", {"model", "entries"}, {"model"});
    std::string model = doc["model"].is_string() ? doc["model"].get<std::string>() : "";
    if (model == "formula") {
        if (doc.contains("entries"))
            fail("cost", "formula model takes no entries");
        return FormulaCostModel{};
    }
    if (model != "table")
        fail("cost.model", "expected 'formula' or 'table'");
    if (!doc.contains("entries") || !doc["entries"].is_array())
        fail("cost.entries", "table model requires an entries array");
    TableCostModel table;
    for (std::size_t k = 0; k < doc["entries"].size(); ++k) {
        const json &entry = doc["entries"][k];
        std::string where = "cost.entries[" + std::to_string(k) + "]";
        require_keys(entry, where, {"from", "to", "by_occupancy"},
                     {"from", "to", "by_occupancy"});
        auto edge = graph.edge_between(get_int(entry["from"], where + ".from"),
                                       get_int(entry["to"], where + ".to"));
        if (!edge)
            fail(where, "edge not present in the graph");
        if (!entry["by_occupancy"].is_object())
            fail(where + ".by_occupancy", "expected an object keyed by occupancy");
        for (const auto &[key, value] : entry["by_occupancy"].items()) {
            int s = 0;
            try {
                s = std::stoi(key);
            } catch (...) {
                fail(where + ".by_occupancy", "non-numeric occupancy key '" + key + "'");
            }
            table.tables[*edge][s] = json_to_rational(value, where + ".by_occupancy." + key);
        }
    }
    return table;
}

struct ParsedDeterministic {
    RoadGraph graph;
    int horizon;
    std::vector<std::vector<TripPath>> strategy_sets;
    std::vector<int> player_starts;
    int vehicle_count;
    int capacity;
    std::vector<int> vehicle_starts;
    CostModel cost;
};

ParsedDeterministic parse_deterministic(const json &doc) {
    require_keys(doc, "game",
                 {"horizon", "graph", "players", "vehicles", "cost", "allocation", "bayesian"},
                 {"horizon", "graph", "players", "vehicles", "cost", "allocation"});
    int horizon = get_int(doc["horizon"], "horizon");
    RoadGraph graph = parse_graph(doc["graph"]);

    const json &players = doc["players"];
    require_keys(players, "players", {"count", "initial_nodes", "strategy_rule", "strategies"},
                 {"count", "initial_nodes"});
    int count = get_int(players["count"], "players.count");
    if (count <= 0)
        fail("players.count", "must be positive");
    std::vector<int> starts = get_int_list(players["initial_nodes"], "players.initial_nodes");
    if (static_cast<int>(starts.size()) != count)
        fail("players.initial_nodes", "must list one node per player");

    std::vector<std::vector<TripPath>> sets;
    if (players.contains("strategy_rule") == players.contains("strategies"))
        fail("players", "exactly one of strategy_rule/strategies is required");
    if (players.contains("strategy_rule")) {
        const json &rule = players["strategy_rule"];
        require_keys(rule, "players.strategy_rule", {"required_nodes", "return_to_start"},
                     {"required_nodes", "return_to_start"});
        if (!rule["return_to_start"].is_boolean())
            fail("players.strategy_rule.return_to_start", "expected a boolean");
        auto required_list =
            get_int_list(rule["required_nodes"], "players.strategy_rule.required_nodes");
        std::set<int> required(required_list.begin(), required_list.end());
        bool ret = rule["return_to_start"].get<bool>();
        for (int i = 0; i < count; ++i) {
            auto set = enumerate_strategies(graph, starts[i], required, horizon, ret);
            if (set.empty())
                fail("players.strategy_rule", "no feasible strategy for player " +
                                                  std::to_string(i + 1));
            sets.push_back(std::move(set));
        }
    } else {
        const json &lists = players["strategies"];
        if (!lists.is_array() || static_cast<int>(lists.size()) != count)
            fail("players.strategies", "expected one strategy list per player");
        for (int i = 0; i < count; ++i) {
            std::vector<TripPath> set;
            std::string where = "players.strategies[" + std::to_string(i) + "]";
            if (!lists[i].is_array() || lists[i].empty())
                fail(where, "expected a non-empty array of trips");
            for (std::size_t k = 0; k < lists[i].size(); ++k) {
                try {
                    set.emplace_back(graph,
                                     get_int_list(lists[i][k], where + "[" + std::to_string(k) +
                                                                   "]"));
                } catch (const std::invalid_argument &ex) {
                    fail(where + "[" + std::to_string(k) + "]", ex.what());
                }
            }
            sets.push_back(std::move(set));
        }
    }

    const json &vehicles = doc["vehicles"];
    require_keys(vehicles, "vehicles", {"count", "capacity", "initial_nodes"},
                 {"count", "capacity", "initial_nodes"});
    int vcount = get_int(vehicles["count"], "vehicles.count");
    int capacity = get_int(vehicles["capacity"], "vehicles.capacity");
    if (capacity <= 0)
        fail("vehicles.capacity", "capacity must satisfy w > 0");
    std::vector<int> vstarts = get_int_list(vehicles["initial_nodes"], "vehicles.initial_nodes");
    if (static_cast<int>(vstarts.size()) != vcount)
        fail("vehicles.initial_nodes", "must list one node per vehicle");

    if (!doc["allocation"].is_string() || doc["allocation"].get<std::string>() != "first_fit_linear")
        fail("allocation", "expected \"first_fit_linear\"");

    CostModel cost = parse_cost(doc["cost"], graph);
    return {std::move(graph), horizon,  std::move(sets), std::move(starts),
            vcount,           capacity, std::move(vstarts), std::move(cost)};
}

RideShareGame build_game(ParsedDeterministic parts) {
    try {
        return RideShareGame(std::move(parts.graph), parts.horizon, std::move(parts.strategy_sets),
                             std::move(parts.player_starts), std::move(parts.vehicle_starts),
                             parts.capacity, std::move(parts.cost));
    } catch (const std::invalid_argument &ex) {
        fail("game", ex.what());
    }
}

std::vector<Rational> parse_prior(const json &doc, std::size_t states, const std::string &where) {
    if (!doc.is_array() || doc.size() != states)
        fail(where, "expected one probability per state");
    std::vector<Rational> prior;
    for (std::size_t k = 0; k < doc.size(); ++k)
        prior.push_back(json_to_rational(doc[k], where + "[" + std::to_string(k) + "]"));
    return prior;
}

// Matrix-form states: costs[a1]...[aN] = [c_1..c_N].
BayesianGame parse_bayesian_matrix(const json &doc) {
    const json &bayes = doc["bayesian"];
    require_keys(bayes, "bayesian", {"actions", "prior", "states"},
                 {"actions", "prior", "states"});
    if (!bayes["actions"].is_array() || bayes["actions"].empty())
        fail("bayesian.actions", "expected a non-empty array of action label lists");
    std::vector<std::vector<std::string>> labels;
    std::vector<int> counts;
    for (std::size_t i = 0; i < bayes["actions"].size(); ++i) {
        const json &per = bayes["actions"][i];
        std::string where = "bayesian.actions[" + std::to_string(i) + "]";
        if (!per.is_array() || per.empty())
            fail(where, "expected a non-empty array of labels");
        std::vector<std::string> lab;
        for (const auto &l : per) {
            if (!l.is_string())
                fail(where, "labels must be strings");
            lab.push_back(l.get<std::string>());
        }
        counts.push_back(static_cast<int>(lab.size()));
        labels.push_back(std::move(lab));
    }
    if (counts.size() > 2)
        fail("bayesian.actions", "matrix form supports at most two players");

    const json &states = bayes["states"];
    if (!states.is_array() || states.empty())
        fail("bayesian.states", "expected a non-empty array");
    ProfileSpace space{counts};
    std::vector<std::vector<std::vector<Rational>>> costs;
    std::vector<std::string> state_labels;
    for (std::size_t x = 0; x < states.size(); ++x) {
        std::string where = "bayesian.states[" + std::to_string(x) + "]";
        require_keys(states[x], where, {"label", "costs"}, {"costs"});
        state_labels.push_back(states[x].contains("label")
                                   ? states[x]["label"].get<std::string>()
                                   : ("x=" + std::to_string(x)));
        std::vector<std::vector<Rational>> per_state(counts.size(),
                                                     std::vector<Rational>(space.size()));
        const json &matrix = states[x]["costs"];
        for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
            StrategyProfile p = space.at(idx);
            const json *cell = &matrix;
            std::string cw = where + ".costs";
            for (std::size_t i = 0; i < counts.size(); ++i) {
                if (!cell->is_array() || cell->size() != static_cast<std::size_t>(counts[i]))
                    fail(cw, "cost matrix shape mismatch");
                cell = &(*cell)[p.choice[i]];
                cw += "[" + std::to_string(p.choice[i]) + "]";
            }
            if (!cell->is_array() || cell->size() != counts.size())
                fail(cw, "expected one cost per player");
            for (std::size_t i = 0; i < counts.size(); ++i)
                per_state[i][idx] =
                    json_to_rational((*cell)[i], cw + "[" + std::to_string(i) + "]");
        }
        costs.push_back(std::move(per_state));
    }
    std::vector<Rational> prior = parse_prior(bayes["prior"], states.size(), "bayesian.prior");
    try {
        return BayesianGame::with_common_prior(std::move(counts), std::move(costs),
                                               std::move(prior), std::move(labels),
                                               std::move(state_labels));
    } catch (const std::invalid_argument &ex) {
        fail("bayesian", ex.what());
    }
}

// Override-form states: each state re-runs the base game with a modified
// fleet.
BayesianGame parse_bayesian_overrides(const json &doc) {
    ParsedDeterministic base = parse_deterministic(doc);
    const json &bayes = doc["bayesian"];
    require_keys(bayes, "bayesian", {"prior", "states"}, {"prior", "states"});
    const json &states = bayes["states"];
    if (!states.is_array() || states.empty())
        fail("bayesian.states", "expected a non-empty array");
    std::vector<RideShareGame> state_games;
    std::vector<std::string> state_labels;
    for (std::size_t x = 0; x < states.size(); ++x) {
        std::string where = "bayesian.states[" + std::to_string(x) + "]";
        require_keys(states[x], where, {"label", "vehicles"}, {});
        state_labels.push_back(states[x].contains("label")
                                   ? states[x]["label"].get<std::string>()
                                   : ("x=" + std::to_string(x)));
        ParsedDeterministic parts = base; // copy and override
        if (states[x].contains("vehicles")) {
            const json &v = states[x]["vehicles"];
            require_keys(v, where + ".vehicles", {"count", "capacity", "initial_nodes"}, {});
            if (v.contains("count"))
                parts.vehicle_count = get_int(v["count"], where + ".vehicles.count");
            if (v.contains("capacity"))
                parts.capacity = get_int(v["capacity"], where + ".vehicles.capacity");
            if (v.contains("initial_nodes"))
                parts.vehicle_starts =
                    get_int_list(v["initial_nodes"], where + ".vehicles.initial_nodes");
            if (v.contains("count"))
                parts.vehicle_starts.resize(parts.vehicle_count,
                                            parts.vehicle_starts.empty()
                                                ? 1
                                                : parts.vehicle_starts.front());
        }
        state_games.push_back(build_game(std::move(parts)));
    }
    std::vector<Rational> prior = parse_prior(bayes["prior"], states.size(), "bayesian.prior");
    try {
        return BayesianGame::from_state_games(state_games, std::move(prior),
                                              std::move(state_labels));
    } catch (const std::invalid_argument &ex) {
        fail("bayesian", ex.what());
    }
}

std::uint64_t fnv1a(const std::string &data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

Rational json_to_rational(const nlohmann::json &value, const std::string &where) {
    try {
        if (value.is_string())
            return parse_rational(value.get<std::string>());
        if (value.is_number_integer())
            return Rational(value.get<std::int64_t>());
        if (value.is_number_float())
            return rational_from_decimal(value.get<double>());
    } catch (const std::invalid_argument &ex) {
        fail(where, ex.what());
    }
    fail(where, "expected a number or a \"p/q\" string");
}

nlohmann::json rational_to_json(const Rational &value) {
    if (value.denominator() == 1)
        return nlohmann::json(value.numerator());
    return nlohmann::json(to_string(value));
}

LoadedGame parse_game_json(const nlohmann::json &doc) {
    if (!doc.is_object())
        throw ParseError("top level: expected an object");
    if (doc.contains("bayesian")) {
        bool matrix_form = !doc.contains("graph");
        if (matrix_form) {
            for (const auto &[key, value] : doc.items()) {
                (void)value;
                if (key != "bayesian")
                    fail("top level", "unknown field '" + key + "' beside matrix-form bayesian");
            }
            return parse_bayesian_matrix(doc);
        }
        return parse_bayesian_overrides(doc);
    }
    return build_game(parse_deterministic(doc));
}

LoadedGame parse_game_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open game file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &ex) {
        throw ParseError(path + ": " + ex.what());
    }
    return parse_game_json(doc);
}

nlohmann::json serialize_game(const RideShareGame &game) {
    nlohmann::json doc;
    doc["horizon"] = game.horizon();
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge &e : game.graph().edges())
        edges.push_back({{"from", e.from}, {"to", e.to}, {"d", rational_to_json(e.dist)}});
    doc["graph"] = {{"nodes", game.graph().node_count()}, {"edges", edges}};

    nlohmann::json strategy_lists = nlohmann::json::array();
    nlohmann::json starts = nlohmann::json::array();
    for (int i = 0; i < game.players(); ++i) {
        starts.push_back(game.player_start(i));
        nlohmann::json per_player = nlohmann::json::array();
        for (const TripPath &p : game.strategies(i))
            per_player.push_back(p.nodes());
        strategy_lists.push_back(per_player);
    }
    doc["players"] = {{"count", game.players()},
                      {"initial_nodes", starts},
                      {"strategies", strategy_lists}};

    nlohmann::json vstarts = nlohmann::json::array();
    for (int m = 0; m < game.vehicles(); ++m)
        vstarts.push_back(game.vehicle_start(m));
    doc["vehicles"] = {
        {"count", game.vehicles()}, {"capacity", game.capacity()}, {"initial_nodes", vstarts}};

    if (std::holds_alternative<FormulaCostModel>(game.cost_model())) {
        doc["cost"] = {{"model", "formula"}};
    } else {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto &[edge_id, table] : std::get<TableCostModel>(game.cost_model()).tables) {
            nlohmann::json by_occ = nlohmann::json::object();
            for (const auto &[s, c] : table)
                by_occ[std::to_string(s)] = rational_to_json(c);
            entries.push_back({{"from", game.graph().edge(edge_id).from},
                               {"to", game.graph().edge(edge_id).to},
                               {"by_occupancy", by_occ}});
        }
        doc["cost"] = {{"model", "table"}, {"entries", entries}};
    }
    doc["allocation"] = "first_fit_linear";
    return doc;
}

nlohmann::json serialize_game(const BayesianGame &game) {
    if (game.players() > 2)
        throw std::invalid_argument("matrix serialization supports at most two players");
    nlohmann::json actions = nlohmann::json::array();
    for (int i = 0; i < game.players(); ++i) {
        nlohmann::json per = nlohmann::json::array();
        for (int a = 0; a < game.action_count(i); ++a)
            per.push_back(game.action_label(i, a));
        actions.push_back(per);
    }
    nlohmann::json prior = nlohmann::json::array();
    for (int x = 0; x < game.states(); ++x)
        prior.push_back(rational_to_json(game.prior(0, x)));

    ProfileSpace space = game.joint_space();
    nlohmann::json states = nlohmann::json::array();
    for (int x = 0; x < game.states(); ++x) {
        nlohmann::json matrix;
        if (game.players() == 1) {
            matrix = nlohmann::json::array();
            for (int a = 0; a < game.action_count(0); ++a)
                matrix.push_back({rational_to_json(game.state_cost(x, {{a}}, 0))});
        } else {
            matrix = nlohmann::json::array();
            for (int a0 = 0; a0 < game.action_count(0); ++a0) {
                nlohmann::json row = nlohmann::json::array();
                for (int a1 = 0; a1 < game.action_count(1); ++a1) {
                    StrategyProfile p{{a0, a1}};
                    row.push_back({rational_to_json(game.state_cost(x, p, 0)),
                                   rational_to_json(game.state_cost(x, p, 1))});
                }
                matrix.push_back(row);
            }
        }
        states.push_back({{"label", game.state_label(x)}, {"costs", matrix}});
    }
    return {{"bayesian", {{"actions", actions}, {"prior", prior}, {"states", states}}}};
}

nlohmann::json serialize_loaded(const LoadedGame &game) {
    return std::visit([](const auto &g) { return serialize_game(g); }, game);
}

std::string game_fingerprint(const LoadedGame &game) {
    std::uint64_t h = fnv1a(serialize_loaded(game).dump());
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

bool games_equal(const RideShareGame &a, const RideShareGame &b) {
    return serialize_game(a) == serialize_game(b);
}

} // namespace rsg
