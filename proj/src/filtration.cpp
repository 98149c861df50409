#include "cera/filtration.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cera {

TimeGrid::TimeGrid(std::vector<double> instants) : instants_(std::move(instants))
{
    if (instants_.empty())
        throw InputError("time grid is empty");
    for (std::size_t i = 1; i < instants_.size(); ++i)
        if (!(instants_[i - 1] < instants_[i]))
            throw InputError("time grid must be strictly increasing");
}

std::string_view to_string(VertexMode m)
{
    return m == VertexMode::full ? "full" : "incident";
}

VertexMode parse_vertex_mode(std::string_view name)
{
    if (name == "full") return VertexMode::full;
    if (name == "incident") return VertexMode::incident;
    throw InputError("unknown vertex mode '" + std::string(name) + "'");
}

Filtration Filtration::from_graph(const CausalGraph& graph, const TimeGrid& grid, VertexMode mode)
{
    if (auto bad = validate_causal(graph); !bad.empty()) {
        std::ostringstream msg;
        msg << "edge " << bad.front() << " violates the causal ordering";
        throw InputError(msg.str());
    }
    const auto& t = grid.instants();
    Filtration f;
    f.vertices_ = graph.vertices();
    f.diffs_.resize(t.size());
    f.instants_ = t;
    f.mode_ = mode;
    for (const Edge& e : graph.edges()) {
        const double arrival = graph.event(e.target).tau;
        auto it = std::lower_bound(t.begin(), t.end(), arrival);
        if (it != t.end())
            f.diffs_[static_cast<std::size_t>(it - t.begin())].push_back(e);
    }
    return f;
}

Filtration Filtration::from_levels(std::vector<VertexId> universe,
                                   std::vector<std::vector<Edge>> diffs, VertexMode mode,
                                   std::optional<std::vector<double>> instants)
{
    if (diffs.empty())
        throw InputError("filtration has no levels");
    if (instants) {
        if (instants->size() != diffs.size())
            throw InputError("number of instants does not match number of levels");
        TimeGrid check(*instants);
    }

    std::set<VertexId> vertices(universe.begin(), universe.end());
    std::set<UndirectedEdge> seen;
    for (const auto& diff : diffs) {
        for (const Edge& e : diff) {
            if (e.source == e.target) {
                std::ostringstream msg;
                msg << "self-loop at vertex " << e.source;
                throw InputError(msg.str());
            }
            if (!seen.insert(UndirectedEdge(e)).second) {
                std::ostringstream msg;
                msg << "edge " << e << " listed more than once (in either direction)";
                throw InputError(msg.str());
            }
            vertices.insert(e.source);
            vertices.insert(e.target);
        }
    }

    Filtration f;
    f.vertices_.assign(vertices.begin(), vertices.end());
    f.diffs_ = std::move(diffs);
    f.instants_ = std::move(instants);
    f.mode_ = mode;
    return f;
}

Filtration Filtration::with_mode(VertexMode mode) const
{
    Filtration copy = *this;
    copy.mode_ = mode;
    return copy;
}

std::vector<Edge> Filtration::edges(std::size_t n) const
{
    std::vector<Edge> out;
    const std::size_t last = std::min(n, diffs_.size());
    for (std::size_t i = 0; i < last; ++i)
        out.insert(out.end(), diffs_[i].begin(), diffs_[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Edge>& Filtration::new_edges(std::size_t n) const
{
    if (n < 1 || n > diffs_.size()) {
        std::ostringstream msg;
        msg << "level " << n << " outside 1.." << diffs_.size();
        throw std::out_of_range(msg.str());
    }
    return diffs_[n - 1];
}

std::vector<Edge> level_diff(const Filtration& filtration, std::size_t n)
{
    std::vector<Edge> out = filtration.new_edges(n);
    std::sort(out.begin(), out.end());
    return out;
}

LevelGraph underlying_undirected(const Filtration& filtration, std::size_t n)
{
    if (n > filtration.num_levels()) {
        std::ostringstream msg;
        msg << "level " << n << " outside 0.." << filtration.num_levels();
        throw std::out_of_range(msg.str());
    }
    LevelGraph g;
    g.level = n;
    for (const Edge& e : filtration.edges(n))
        g.edges.emplace_back(e);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

    if (filtration.mode() == VertexMode::full) {
        g.vertices = filtration.vertices();
    } else {
        for (const auto& e : g.edges) {
            g.vertices.push_back(e.lo);
            g.vertices.push_back(e.hi);
        }
        std::sort(g.vertices.begin(), g.vertices.end());
        g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    }
    return g;
}

TimeGrid auto_grid(const CausalGraph& graph)
{
    if (graph.events().empty())
        throw InputError("cannot derive a time grid from an empty graph");
    std::vector<double> times;
    for (const Edge& e : graph.edges())
        times.push_back(graph.event(e.target).tau);
    if (times.empty()) {
        double latest = graph.events().begin()->second.tau;
        for (const auto& [id, ev] : graph.events())
            latest = std::max(latest, ev.tau);
        return TimeGrid({latest});
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return TimeGrid(std::move(times));
}

}  // namespace cera
