#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cera/graph.hpp"

namespace cera {

/// Strictly increasing, nonempty sequence of time instants t_1 < ... < t_k.
class TimeGrid {
public:
    explicit TimeGrid(std::vector<double> instants);

    const std::vector<double>& instants() const { return instants_; }
    std::size_t size() const { return instants_.size(); }

private:
    std::vector<double> instants_;
};

/// Whether every vertex is present at every level (full) or only vertices
/// incident to the level's edges (incident).
enum class VertexMode { full, incident };

std::string_view to_string(VertexMode m);
VertexMode parse_vertex_mode(std::string_view name);

/// Undirected view G_n^* of one filtration level.
struct LevelGraph {
    std::size_t level = 0;
    std::vector<VertexId> vertices;          // sorted
    std::vector<UndirectedEdge> edges;       // sorted, deduplicated
};

/// Cumulative edge filtration E_1 ⊆ ... ⊆ E_k over a fixed vertex universe.
///
/// Level 0 is the empty edge set. Levels past k repeat E_k when queried via
/// edges(); the range-checked accessors reject them.
class Filtration {
public:
    /// E_n = {(u,v) in E : tau(v) <= t_n}. The graph must pass validate_causal.
    static Filtration from_graph(const CausalGraph& graph, const TimeGrid& grid, VertexMode mode);

    /// Direct construction from per-level new edges: diffs[n-1] holds the edges
    /// introduced at level n, in input order. `universe` lists extra vertices
    /// (isolated ones included); endpoints are always added to it.
    static Filtration from_levels(std::vector<VertexId> universe,
                                  std::vector<std::vector<Edge>> diffs, VertexMode mode,
                                  std::optional<std::vector<double>> instants = std::nullopt);

    std::size_t num_levels() const { return diffs_.size(); }
    VertexMode mode() const { return mode_; }
    Filtration with_mode(VertexMode mode) const;

    /// Sorted vertex universe V.
    const std::vector<VertexId>& vertices() const { return vertices_; }
    /// Time instants, absent when built from level-tagged edges without times.
    const std::optional<std::vector<double>>& instants() const { return instants_; }

    /// E_n, sorted; n = 0 gives the empty set and n > k gives E_k.
    std::vector<Edge> edges(std::size_t n) const;
    /// Edges introduced at level n in input order. Requires 1 <= n <= k.
    const std::vector<Edge>& new_edges(std::size_t n) const;

private:
    Filtration() = default;

    std::vector<VertexId> vertices_;
    std::vector<std::vector<Edge>> diffs_;
    std::optional<std::vector<double>> instants_;
    VertexMode mode_ = VertexMode::full;
};

inline Filtration build_filtration(const CausalGraph& graph, const TimeGrid& grid,
                                   VertexMode mode = VertexMode::full)
{
    return Filtration::from_graph(graph, grid, mode);
}

/// E_n \ E_{n-1}, sorted. Throws std::out_of_range unless 1 <= n <= k.
std::vector<Edge> level_diff(const Filtration& filtration, std::size_t n);

/// G_n^*; throws std::out_of_range unless 0 <= n <= k.
LevelGraph underlying_undirected(const Filtration& filtration, std::size_t n);

/// Sorted distinct times of edge targets; a graph without edges yields the
/// single instant max tau.
TimeGrid auto_grid(const CausalGraph& graph);

}  // namespace cera
