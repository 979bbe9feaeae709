#include "rsg/dot.hpp"

#include <sstream>

namespace rsg {

namespace {

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string profile_label(const FiniteGame &game, const StrategyProfile &profile) {
    std::string out;
    for (int i = 0; i < game.players(); ++i) {
        if (i)
            out += " | ";
        out += game.action_label(i, profile.choice[i]);
    }
    return out;
}

} // namespace

std::string improvement_graph_dot(const FiniteGame &game, const ImprovementGraph &graph) {
    ProfileSpace space(graph.radices);
    std::vector<std::uint64_t> sinks = graph_sinks(graph);
    std::vector<bool> is_sink(graph.node_count(), false);
    for (std::uint64_t s : sinks)
        is_sink[s] = true;

    std::ostringstream out;
    out << "digraph improvement {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::uint64_t v = 0; v < graph.node_count(); ++v) {
        out << "  n" << v << " [label=\"" << v << "\" tooltip=\""
            << escape(profile_label(game, space.at(v))) << "\"";
        if (is_sink[v])
            out << " shape=doublecircle";
        out << "];\n";
    }
    for (const auto &edges : graph.out)
        for (const ImprovementEdge &e : edges)
            out << "  n" << e.from << " -> n" << e.to << " [label=\"p" << e.player + 1
                << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string dynamics_trace_dot(const FiniteGame &game, const DynamicsTrace &trace) {
    ProfileSpace space = game.space();
    std::ostringstream out;
    out << "digraph dynamics {\n  rankdir=LR;\n  node [shape=box];\n";

    std::vector<std::uint64_t> visited = {space.index_of(trace.initial)};
    for (const DynamicsStep &step : trace.steps) {
        StrategyProfile next = step.before;
        next.choice[step.player] = step.new_choice;
        visited.push_back(space.index_of(next));
    }
    std::vector<bool> emitted(space.size(), false);
    for (std::uint64_t v : visited) {
        if (emitted[v])
            continue;
        emitted[v] = true;
        out << "  n" << v << " [label=\"" << v << "\\n"
            << escape(profile_label(game, space.at(v))) << "\"];\n";
    }
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const DynamicsStep &step = trace.steps[k];
        out << "  n" << visited[k] << " -> n" << visited[k + 1] << " [label=\"p"
            << step.player + 1 << ": " << to_string(step.cost_before) << " -> "
            << to_string(step.cost_after) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rsg
