#include "rsg/cost_model.hpp"

#include <stdexcept>
#include <string>

namespace rsg {

Rational edge_cost(const CostModel &model, const RoadGraph &graph, int edge_id, int capacity,
                   int occupancy) {
    if (occupancy < 0)
        throw std::invalid_argument("negative occupancy");
    if (const auto *formula = std::get_if<FormulaCostModel>(&model)) {
        (void)formula;
        const Rational d = graph.edge(edge_id).dist;
        if (occupancy <= capacity)
            return d / Rational(occupancy + 1);
        // overload branch: d * (1 - w^2 / (s * (w + 1)))
        Rational w2(static_cast<std::int64_t>(capacity) * capacity);
        return d * (Rational(1) - w2 / Rational(static_cast<std::int64_t>(occupancy) *
                                                (capacity + 1)));
    }
    const auto &tables = std::get<TableCostModel>(model).tables;
    auto it = tables.find(edge_id);
    if (it == tables.end())
        throw std::out_of_range("no cost table for edge " + std::to_string(edge_id));
    auto jt = it->second.find(occupancy);
    if (jt == it->second.end())
        throw std::out_of_range("occupancy " + std::to_string(occupancy) +
                                " outside cost table of edge " + std::to_string(edge_id));
    return jt->second;
}

void validate_cost_model(const CostModel &model, const RoadGraph &graph, int capacity,
                         int max_occupancy) {
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (std::holds_alternative<TableCostModel>(model) &&
            !std::get<TableCostModel>(model).tables.count(e))
            continue;
        Rational prev;
        for (int s = 0; s <= max_occupancy; ++s) {
            Rational c = edge_cost(model, graph, e, capacity, s);
            if (c < Rational(0))
                throw std::invalid_argument("negative cost on edge " + std::to_string(e));
            if (s > 0) {
                if (s <= capacity && c > prev)
                    throw std::invalid_argument("cost not non-increasing below capacity on edge " +
                                                std::to_string(e));
                if (s > capacity && c < prev)
                    throw std::invalid_argument("cost not non-decreasing above capacity on edge " +
                                                std::to_string(e));
            }
            prev = c;
        }
    }
}

} // namespace rsg
