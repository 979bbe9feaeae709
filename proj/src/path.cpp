#include "rsg/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsg {

namespace {

std::vector<int> edges_for(const RoadGraph &graph, const std::vector<int> &nodes) {
    std::vector<int> ids;
    ids.reserve(nodes.empty() ? 0 : nodes.size() - 1);
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
        auto id = graph.edge_between(nodes[k], nodes[k + 1]);
        if (!id)
            throw std::invalid_argument("no edge " + std::to_string(nodes[k]) + "->" +
                                        std::to_string(nodes[k + 1]));
        ids.push_back(*id);
    }
    return ids;
}

std::string nodes_label(const std::vector<int> &nodes) {
    std::string s = "(";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k)
            s += ",";
        s += std::to_string(nodes[k]);
    }
    return s + ")";
}

} // namespace

TripPath::TripPath(const RoadGraph &graph, std::vector<int> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
        throw std::invalid_argument("trip needs at least two time steps");
    edge_ids_ = edges_for(graph, nodes_);
}

std::vector<TimedEdge> TripPath::timed_edges() const {
    std::vector<TimedEdge> out;
    out.reserve(edge_ids_.size());
    for (int t = 1; t <= static_cast<int>(edge_ids_.size()); ++t)
        out.push_back({edge_ids_[t - 1], t});
    return out;
}

std::string TripPath::label() const { return nodes_label(nodes_); }

PathSegment::PathSegment(const RoadGraph &graph, int start_time, std::vector<int> nodes)
    : start_time_(start_time), nodes_(std::move(nodes)) {
    if (nodes_.empty())
        throw std::invalid_argument("empty segment");
    if (start_time_ < 1)
        throw std::invalid_argument("segment start time must be >= 1");
    edge_ids_ = edges_for(graph, nodes_);
}

std::vector<TimedEdge> PathSegment::timed_edges() const {
    std::vector<TimedEdge> out;
    out.reserve(edge_ids_.size());
    for (int k = 0; k < static_cast<int>(edge_ids_.size()); ++k)
        out.push_back({edge_ids_[k], start_time_ + k});
    return out;
}

std::string PathSegment::label() const {
    return nodes_label(nodes_) + "@t=" + std::to_string(start_time_);
}

PathSegment PathSegment::whole(const RoadGraph &graph, const TripPath &r) {
    return PathSegment(graph, 1, r.nodes());
}

PathSegment PathSegment::of(const RoadGraph &graph, const TripPath &r, int t_from, int t_to) {
    if (t_from < 1 || t_to > r.horizon() || t_from > t_to)
        throw std::invalid_argument("segment time range out of bounds");
    std::vector<int> nodes(r.nodes().begin() + (t_from - 1), r.nodes().begin() + t_to);
    return PathSegment(graph, t_from, std::move(nodes));
}

bool segment_contained(const PathSegment &r_k, const TripPath &r) {
    if (r_k.start_time() < 1 || r_k.end_time() > r.horizon())
        return false;
    for (int k = 0; k < static_cast<int>(r_k.nodes().size()); ++k)
        if (r.node_at(r_k.start_time() + k) != r_k.nodes()[k])
            return false;
    return true; // matching nodes imply matching edges in a simple graph
}

std::vector<PathSegment> segment_intersection(const RoadGraph &graph, const TripPath &r1,
                                              const TripPath &r2) {
    if (r1.horizon() != r2.horizon())
        throw std::invalid_argument("horizon mismatch in segment_intersection");
    std::vector<PathSegment> out;
    int T = r1.horizon();
    int t = 1;
    while (t <= T - 1) {
        if (r1.edge_at(t) != r2.edge_at(t)) {
            ++t;
            continue;
        }
        int start = t;
        while (t <= T - 1 && r1.edge_at(t) == r2.edge_at(t))
            ++t;
        out.push_back(PathSegment::of(graph, r1, start, t));
    }
    return out;
}

std::vector<PathSegment> segment_complement(const RoadGraph &graph, const TripPath &r,
                                            const PathSegment &r_k) {
    if (!segment_contained(r_k, r))
        throw std::invalid_argument("segment not contained in trip");
    std::vector<bool> removed(r.horizon(), false); // per period 1..T-1
    for (const TimedEdge &te : r_k.timed_edges())
        removed[te.t] = true;
    std::vector<PathSegment> out;
    int t = 1;
    while (t <= r.horizon() - 1) {
        if (removed[t]) {
            ++t;
            continue;
        }
        int start = t;
        while (t <= r.horizon() - 1 && !removed[t])
            ++t;
        out.push_back(PathSegment::of(graph, r, start, t));
    }
    return out;
}

bool segments_disjoint(const PathSegment &a, const PathSegment &b) {
    auto ta = a.timed_edges();
    auto tb = b.timed_edges();
    for (const TimedEdge &x : ta)
        if (std::find(tb.begin(), tb.end(), x) != tb.end())
            return false;
    return true;
}

} // namespace rsg
