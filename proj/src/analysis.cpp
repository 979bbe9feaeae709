#include "rsg/analysis.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace rsg {

namespace {

// Iterates over all opponent assignments of player i; body receives a full
// profile whose entry for i is left at 0 and must be set by the caller.
template <typename Body>
void for_each_opponent_profile(const RideShareGame &game, int i, Body &&body) {
    std::vector<int> radices;
    std::vector<int> others;
    for (int j = 0; j < game.players(); ++j) {
        if (j == i)
            continue;
        others.push_back(j);
        radices.push_back(static_cast<int>(game.strategies(j).size()));
    }
    ProfileSpace rest(radices);
    StrategyProfile p;
    p.choice.assign(game.players(), 0);
    for (std::uint64_t idx = 0; idx < rest.size(); ++idx) {
        StrategyProfile sub = rest.at(idx);
        for (std::size_t k = 0; k < others.size(); ++k)
            p.choice[others[k]] = sub.choice[k];
        body(p);
    }
}

std::set<TimedEdge> riding_edge_set(const RideShareGame &game, const StrategyProfile &profile,
                                    const FlowState &flow, int player) {
    std::set<TimedEdge> out;
    const TripPath &trip = game.path(player, profile);
    for (int t = 1; t <= game.horizon() - 1; ++t)
        if (flow.assignment(player, t) != kNoVehicle)
            out.insert({trip.edge_at(t), t});
    return out;
}

std::set<TimedEdge> edge_set(const PathSegment &seg) {
    auto v = seg.timed_edges();
    return {v.begin(), v.end()};
}

void check_profile_budget(const RideShareGame &game, std::uint64_t budget, const char *op) {
    std::uint64_t n = 1;
    for (int i = 0; i < game.players(); ++i) {
        n *= game.strategies(i).size();
        if (n > budget)
            throw BudgetExceeded(std::string(op) + ": profile space exceeds budget");
    }
}

} // namespace

std::vector<PathSegment> riding_segments(const RideShareGame &game, const StrategyProfile &profile,
                                         const FlowState &flow, int player) {
    const TripPath &trip = game.path(player, profile);
    std::vector<PathSegment> out;
    int t = 1;
    while (t <= game.horizon() - 1) {
        if (flow.assignment(player, t) == kNoVehicle) {
            ++t;
            continue;
        }
        int start = t;
        while (t <= game.horizon() - 1 && flow.assignment(player, t) != kNoVehicle)
            ++t;
        out.push_back(PathSegment::of(game.graph(), trip, start, t));
    }
    return out;
}

bool is_allocated_path(const FlowState &flow, const PathSegment &segment) {
    for (const TimedEdge &te : segment.timed_edges())
        if (flow.vehicle_count(te.edge_id, te.t) == 0)
            return false;
    return true;
}

std::vector<PathSegment> vehicle_corridors(const RideShareGame &game, const FlowState &flow,
                                           int vehicle) {
    std::vector<PathSegment> out;
    int t = 1;
    while (t <= game.horizon() - 1) {
        if (flow.occupancy[t - 1][vehicle] == 0) { // only moves with riders
            ++t;
            continue;
        }
        int start = t;
        std::vector<int> nodes{flow.vehicle_node[t - 1][vehicle]};
        while (t <= game.horizon() - 1 && flow.occupancy[t - 1][vehicle] > 0) {
            nodes.push_back(flow.vehicle_node[t][vehicle]);
            ++t;
        }
        out.push_back(PathSegment(game.graph(), start, std::move(nodes)));
    }
    return out;
}

std::vector<PathSegment> candidate_segments(const RideShareGame &game, int max_edges) {
    std::set<PathSegment> seen;
    std::vector<PathSegment> out;
    for (int i = 0; i < game.players(); ++i) {
        for (const TripPath &trip : game.strategies(i)) {
            for (int from = 1; from <= game.horizon() - 1; ++from) {
                for (int to = from + 1; to <= game.horizon() && to - from <= max_edges; ++to) {
                    PathSegment seg = PathSegment::of(game.graph(), trip, from, to);
                    if (seen.insert(seg).second)
                        out.push_back(std::move(seg));
                }
            }
        }
    }
    return out;
}

bool is_necessary_path(const RideShareGameView &view, const PathSegment &segment,
                       std::uint64_t budget) {
    const RideShareGame &game = view.game();
    check_profile_budget(game, budget, "is_necessary_path");
    bool realizable = false;
    for (int i = 0; i < game.players(); ++i) {
        const auto &set = game.strategies(i);
        std::vector<int> containing, avoiding;
        for (int a = 0; a < static_cast<int>(set.size()); ++a)
            (segment_contained(segment, set[a]) ? containing : avoiding).push_back(a);
        bool ok = true;
        for_each_opponent_profile(game, i, [&](StrategyProfile &p) {
            if (!ok)
                return;
            bool have_left = false;
            Rational left;
            for (int a : containing) {
                p.choice[i] = a;
                if (!is_allocated_path(view.flow(p), segment))
                    continue;
                Rational c = view.cost(p, i);
                if (!have_left || c < left) {
                    left = c;
                    have_left = true;
                }
            }
            if (!have_left)
                return; // r not servable here; nothing to require
            realizable = true;
            for (int b : avoiding) {
                p.choice[i] = b;
                if (view.cost(p, i) < left) {
                    ok = false;
                    return;
                }
            }
        });
        if (!ok)
            return false;
    }
    return realizable;
}

bool is_sufficient_path(const RideShareGameView &view, const PathSegment &segment,
                        std::uint64_t budget) {
    const RideShareGame &game = view.game();
    check_profile_budget(game, budget, "is_sufficient_path");
    std::set<TimedEdge> target = edge_set(segment);
    for (int i = 0; i < game.players(); ++i) {
        bool ok = true;
        for_each_opponent_profile(game, i, [&](StrategyProfile &p) {
            if (!ok)
                return;
            bool have_exact = false, have_other = false;
            Rational exact_min, other_min;
            for (int a = 0; a < static_cast<int>(game.strategies(i).size()); ++a) {
                p.choice[i] = a;
                std::set<TimedEdge> ridden = riding_edge_set(game, p, view.flow(p), i);
                if (ridden.empty())
                    continue;
                Rational c = view.cost(p, i);
                if (ridden == target) {
                    if (!have_exact || c < exact_min) {
                        exact_min = c;
                        have_exact = true;
                    }
                } else {
                    if (!have_other || c < other_min) {
                        other_min = c;
                        have_other = true;
                    }
                }
            }
            if (have_exact && have_other && other_min < exact_min)
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

PathClassification classify_paths(const RideShareGameView &view,
                                  const std::vector<PathSegment> &candidates,
                                  std::uint64_t budget) {
    PathClassification out;
    for (const PathSegment &seg : candidates) {
        bool nec = is_necessary_path(view, seg, budget);
        bool suf = is_sufficient_path(view, seg, budget);
        if (nec)
            out.necessary.push_back(seg);
        if (suf)
            out.sufficient.push_back(seg);
        if (nec && suf)
            out.both.push_back(seg);
    }
    out.both_disjoint = true;
    for (std::size_t a = 0; a < out.both.size(); ++a)
        for (std::size_t b = a + 1; b < out.both.size(); ++b)
            if (!segments_disjoint(out.both[a], out.both[b]))
                out.both_disjoint = false;
    return out;
}

HypothesisReport check_theorem_hypotheses(const RideShareGameView &view,
                                          std::vector<PathSegment> candidates,
                                          std::uint64_t budget) {
    const RideShareGame &game = view.game();
    HypothesisReport report;
    report.common_strategy_set = game.common_strategy_set();
    report.single_vehicle = (game.vehicles() == 1);
    report.fleet_covers_players = (game.players() <= game.capacity());
    report.first_fit_linear = (game.policy() == AllocationPolicy::FirstFitLinear);

    const bool supplied = !candidates.empty();
    if (candidates.empty()) {
        // Default candidate pool: corridors the fleet drives in some pNE.
        std::set<PathSegment> seen;
        for (const StrategyProfile &p : enumerate_pne(view, budget)) {
            const FlowState &flow = view.flow(p);
            for (int m = 0; m < game.vehicles(); ++m)
                for (PathSegment &seg : vehicle_corridors(game, flow, m))
                    if (seen.insert(seg).second)
                        candidates.push_back(seg);
        }
    }
    if (!candidates.empty()) {
        PathClassification cls = classify_paths(view, candidates, budget);
        bool all_qualify = !supplied || cls.both.size() == candidates.size();
        report.disjoint_ns_set = !cls.both.empty() && all_qualify && cls.both_disjoint;
        report.ns_candidates_checked = std::move(candidates);
    }
    return report;
}

std::vector<PlayerRole> classify_roles(const RideShareGame &game, const StrategyProfile &profile,
                                       const PathSegment &necessary) {
    FlowState flow = compute_flows(game, profile);
    std::set<TimedEdge> target = edge_set(necessary);
    std::vector<PlayerRole> roles;
    for (int i = 0; i < game.players(); ++i) {
        PlayerRole role = PlayerRole::Pedestrian;
        for (const PathSegment &seg : riding_segments(game, profile, flow, i)) {
            std::set<TimedEdge> ridden = edge_set(seg);
            if (ridden == target) {
                role = PlayerRole::Passenger;
                break;
            }
            if (std::includes(ridden.begin(), ridden.end(), target.begin(), target.end())) {
                role = PlayerRole::Driver;
                break;
            }
        }
        roles.push_back(role);
    }
    return roles;
}

CopyLemmaReport check_copy_lemma(const RideShareGameView &view, std::uint64_t samples,
                                 std::uint64_t seed) {
    const RideShareGame &game = view.game();
    ProfileSpace space = ProfileSpace::of(game);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick_profile(0, space.size() - 1);
    std::uniform_int_distribution<int> pick_player(0, game.players() - 1);

    CopyLemmaReport report;
    for (std::uint64_t k = 0; k < samples; ++k) {
        ++report.sampled;
        StrategyProfile a = space.at(pick_profile(rng));
        int i = pick_player(rng);
        int j = pick_player(rng);
        // Copy needs a common strategy set, so choices translate directly.
        int copied = a.choice[j];
        if (!is_no_vehicle_loss(game, a, i, copied))
            continue;
        ++report.checked;
        Rational cj = view.cost(a, j);
        StrategyProfile b = a;
        b.choice[i] = copied;
        if (view.cost(b, i) > cj)
            ++report.violations;
    }
    return report;
}

} // namespace rsg
