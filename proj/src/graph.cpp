#include "rsg/graph.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace rsg {

RoadGraph::RoadGraph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)), out_(node_count) {
    if (node_count <= 0)
        throw std::invalid_argument("graph needs at least one node");
    std::set<std::pair<int, int>> seen;
    std::vector<int> loops(node_count, 0);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        Edge &e = edges_[id];
        if (e.from < 1 || e.from > node_count || e.to < 1 || e.to > node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.dist < Rational(0))
            throw std::invalid_argument("negative edge distance");
        e.loop = (e.from == e.to);
        if (!seen.insert({e.from, e.to}).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(e.from) + "->" +
                                        std::to_string(e.to));
        if (e.loop)
            ++loops[e.from - 1];
        out_[e.from - 1].push_back(id);
    }
    for (int v = 1; v <= node_count; ++v)
        if (loops[v - 1] != 1)
            throw std::invalid_argument("node " + std::to_string(v) +
                                        " must have exactly one loop edge");
}

std::optional<int> RoadGraph::edge_between(int from, int to) const {
    if (from < 1 || from > node_count_ || to < 1 || to > node_count_)
        return std::nullopt;
    for (int id : out_.at(from - 1))
        if (edges_[id].to == to)
            return id;
    return std::nullopt;
}

int RoadGraph::loop_edge(int node) const {
    auto id = edge_between(node, node);
    if (!id)
        throw std::logic_error("missing loop edge"); // constructor guarantees one
    return *id;
}

RoadGraph RoadGraph::complete_with_loops(int n, const Rational &edge_dist) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            edges.push_back({u, v, u == v ? Rational(0) : edge_dist, u == v});
    return RoadGraph(n, std::move(edges));
}

} // namespace rsg
