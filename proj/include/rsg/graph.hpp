#pragma once

#include "rsg/rational.hpp"

#include <optional>
#include <vector>

namespace rsg {

// Nodes are 1-based throughout, matching the usual map-drawing convention.
struct Edge {
    int from = 0;
    int to = 0;
    Rational dist; // d >= 0
    bool loop = false;
};

// Simple directed graph where every node additionally carries exactly one
// loop edge to itself (staying in place is always a move).
class RoadGraph {
public:
    RoadGraph(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge &edge(int id) const { return edges_.at(id); }
    const std::vector<Edge> &edges() const { return edges_; }

    // Outgoing edge ids of a node, ascending by edge id.
    const std::vector<int> &out_edges(int node) const { return out_.at(node - 1); }

    std::optional<int> edge_between(int from, int to) const;
    int loop_edge(int node) const;

    // Complete digraph on n nodes plus d=0 loops; the standard example map.
    static RoadGraph complete_with_loops(int n, const Rational &edge_dist);

private:
    int node_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
};

} // namespace rsg
