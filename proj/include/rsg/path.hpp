#pragma once

#include "rsg/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace rsg {

// An edge pinned to the period (t, t+1) it is traversed in. Sub-path
// matching is always done on timed edges: the same road at a different
// period is a different resource.
struct TimedEdge {
    int edge_id = -1;
    int t = 0; // 1-based period start
    auto operator<=>(const TimedEdge &) const = default;
};

// A round trip: node v_t occupied at time t, edge e_t traversed during
// (t, t+1). Exactly T nodes and T-1 edges.
class TripPath {
public:
    TripPath(const RoadGraph &graph, std::vector<int> nodes);

    int horizon() const { return static_cast<int>(nodes_.size()); }
    int node_at(int t) const { return nodes_.at(t - 1); }     // t in 1..T
    int edge_at(int t) const { return edge_ids_.at(t - 1); }  // t in 1..T-1
    const std::vector<int> &nodes() const { return nodes_; }
    const std::vector<int> &edge_ids() const { return edge_ids_; }

    std::vector<TimedEdge> timed_edges() const;
    std::string label() const; // "(1,2,3,4,1)"

    bool operator==(const TripPath &o) const { return nodes_ == o.nodes_; }
    auto operator<=>(const TripPath &o) const { return nodes_ <=> o.nodes_; }

private:
    std::vector<int> nodes_;
    std::vector<int> edge_ids_;
};

// A contiguous time-anchored piece of a trip; may be a single node
// (start_time == end_time, no edges).
class PathSegment {
public:
    PathSegment(const RoadGraph &graph, int start_time, std::vector<int> nodes);

    int start_time() const { return start_time_; }
    int end_time() const { return start_time_ + static_cast<int>(nodes_.size()) - 1; }
    const std::vector<int> &nodes() const { return nodes_; }
    const std::vector<int> &edge_ids() const { return edge_ids_; }
    int edge_count() const { return static_cast<int>(edge_ids_.size()); }

    std::vector<TimedEdge> timed_edges() const;
    std::string label() const;

    bool operator==(const PathSegment &o) const {
        return start_time_ == o.start_time_ && nodes_ == o.nodes_;
    }
    auto operator<=>(const PathSegment &o) const {
        if (auto c = start_time_ <=> o.start_time_; c != 0)
            return c;
        return nodes_ <=> o.nodes_;
    }

    static PathSegment whole(const RoadGraph &graph, const TripPath &r);
    // Sub-segment of r covering times [t_from, t_to].
    static PathSegment of(const RoadGraph &graph, const TripPath &r, int t_from, int t_to);

private:
    int start_time_;
    std::vector<int> nodes_;
    std::vector<int> edge_ids_;
};

// True iff r_k occurs in r at its anchored times.
bool segment_contained(const PathSegment &r_k, const TripPath &r);

// Maximal time-anchored segments (with >= 1 edge) shared by r1 and r2.
std::vector<PathSegment> segment_intersection(const RoadGraph &graph, const TripPath &r1,
                                              const TripPath &r2);

// Timed edges of r not in r_k, grouped into maximal contiguous segments.
// Throws if r_k is not contained in r.
std::vector<PathSegment> segment_complement(const RoadGraph &graph, const TripPath &r,
                                            const PathSegment &r_k);

// Timed-edge set intersection of two segments is empty (Eq-style
// disjointness for candidate path sets).
bool segments_disjoint(const PathSegment &a, const PathSegment &b);

} // namespace rsg
