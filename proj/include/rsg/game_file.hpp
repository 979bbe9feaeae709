#pragma once

#include "rsg/bayesian.hpp"
#include "rsg/errors.hpp"
#include "rsg/game.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace rsg {

using LoadedGame = std::variant<RideShareGame, BayesianGame>;

// Parses a game-definition document.  Costs and probabilities accept
// integers, finite decimals, and "p/q" strings.  Unknown fields are
// rejected with a field-precise diagnostic.
LoadedGame parse_game_json(const nlohmann::json &doc);
LoadedGame parse_game_file(const std::string &path);

nlohmann::json serialize_game(const RideShareGame &game);
// Matrix form; supports up to two players.
nlohmann::json serialize_game(const BayesianGame &game);
nlohmann::json serialize_loaded(const LoadedGame &game);

// Content hash of the canonical serialization (FNV-1a 64, hex).
std::string game_fingerprint(const LoadedGame &game);

bool games_equal(const RideShareGame &a, const RideShareGame &b);

Rational json_to_rational(const nlohmann::json &value, const std::string &where);
nlohmann::json rational_to_json(const Rational &value);

} // namespace rsg
