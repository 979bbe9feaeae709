#pragma once

#include "rsg/dynamics.hpp"

#include <string>

namespace rsg {

// Graphviz rendering of the strict-improvement graph.  Nodes are profile
// indices (action labels in the tooltip), sinks are drawn doubled, edges
// carry the deviating player.
std::string improvement_graph_dot(const FiniteGame &game, const ImprovementGraph &graph);

// The visited profile chain of one dynamics run, edges labelled with the
// deviating player and their cost change.
std::string dynamics_trace_dot(const FiniteGame &game, const DynamicsTrace &trace);

} // namespace rsg
