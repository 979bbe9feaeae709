#pragma once

#include "rsg/bayesian.hpp"
#include "rsg/game.hpp"

#include <string>
#include <vector>

namespace rsg {

// Canonical worked examples: three players on the complete 4-node map
// with trips through nodes 3 and 4, plus the two-player two-state
// signaling game.

// Shared skeleton: N=3, T=5, V=4 complete with d=0 loops, players start
// at node 1, the fleet at node 2, common 18-trip strategy set.
RideShareGame build_section4_base(int fleet_size, int capacity);

RideShareGame build_nonfip_game();      // M=2, w=1: improvement cycles exist
RideShareGame build_fip_game();         // M=1, w=4: the proven-FIP instance
RideShareGame build_two_vehicle_game(); // M=2, w=4: FIP without M=1

// Two actions C=(1,2,3,1) and D=(1,1,3,1), uniform prior over "no
// vehicle" (x=0) and "one vehicle" (x=1), costs given by the published
// matrices.
BayesianGame build_signaling_game();

// Metadata for table-driven registration (CLI `scenario` command).
struct ScenarioInfo {
    std::string name;
    std::string summary;
    bool bayesian = false;
};

const std::vector<ScenarioInfo> &scenario_registry();

} // namespace rsg
