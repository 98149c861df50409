#pragma once

// Independent reference computations. None of these call into the library's
// algorithms; they only read plain data out of its types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "cera/filtration.hpp"

namespace cera::oracle {

/// Connected components by breadth-first search.
inline long long bfs_components(const std::vector<VertexId>& vertices,
                                const std::vector<std::pair<VertexId, VertexId>>& edges)
{
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : vertices)
        adj[v];
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<VertexId> seen;
    long long components = 0;
    for (const auto& [start, _] : adj) {
        if (seen.contains(start))
            continue;
        ++components;
        std::queue<VertexId> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            for (VertexId w : adj[v])
                if (seen.insert(w).second)
                    q.push(w);
        }
    }
    return components;
}

/// beta0 of level n, recomputed from the raw per-level diffs.
inline long long level_components(const Filtration& f, std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<VertexId> incident;
    for (std::size_t level = 1; level <= n; ++level) {
        for (const Edge& e : f.new_edges(level)) {
            edges.emplace_back(e.source, e.target);
            incident.insert(e.source);
            incident.insert(e.target);
        }
    }
    const std::vector<VertexId> vertices =
        f.mode() == VertexMode::full ? f.vertices()
                                     : std::vector<VertexId>(incident.begin(), incident.end());
    return bfs_components(vertices, edges);
}

using Exponents = std::vector<int>;

namespace detail {

template <typename Visit>
void compositions(Exponents& e, std::size_t i, int remaining, Visit& visit)
{
    if (i + 1 == e.size()) {
        e[i] = remaining;
        visit(static_cast<const Exponents&>(e));
        return;
    }
    for (int x = 0; x <= remaining; ++x) {
        e[i] = x;
        compositions(e, i + 1, remaining - x, visit);
    }
}

}  // namespace detail

/// Calls visit(exponents) for every degree-d monomial in n variables.
template <typename Visit>
void for_each_monomial(std::size_t n, int d, Visit&& visit)
{
    if (n == 0) {
        if (d == 0)
            visit(Exponents{});
        return;
    }
    Exponents e(n, 0);
    detail::compositions(e, 0, d, visit);
}

/// Number of degree-d monomials divisible by at least one generator
/// (generators given as exponent vectors over n variables).
inline std::uint64_t count_in_ideal(std::size_t n, int d, const std::vector<Exponents>& gens)
{
    std::uint64_t count = 0;
    for_each_monomial(n, d, [&](const Exponents& m) {
        for (const auto& g : gens) {
            bool divides = true;
            for (std::size_t i = 0; i < n && divides; ++i)
                divides = g[i] <= m[i];
            if (divides) {
                ++count;
                return;
            }
        }
    });
    return count;
}

/// Adjacency matrix over positions 0..n-1.
using Adjacency = std::vector<std::vector<bool>>;

inline bool is_clique(const Adjacency& adj, std::uint32_t mask)
{
    const std::size_t n = adj.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if ((mask >> a & 1u) && (mask >> b & 1u) && !adj[a][b])
                return false;
    return true;
}

/// counts[i] = cliques with i vertices, by scanning every vertex subset.
inline std::vector<std::uint64_t> clique_counts(const Adjacency& adj)
{
    const std::size_t n = adj.size();
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (is_clique(adj, mask))
            ++counts[static_cast<std::size_t>(__builtin_popcount(mask))];
    while (counts.size() > 1 && counts.back() == 0)
        counts.pop_back();
    return counts;
}

/// Minimal non-cliques, as position masks, by scanning every vertex subset.
inline std::vector<std::uint32_t> minimal_nonclique_masks(const Adjacency& adj)
{
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (is_clique(adj, mask))
            continue;
        bool minimal = true;
        for (std::size_t v = 0; v < n && minimal; ++v)
            if (mask >> v & 1u)
                minimal = is_clique(adj, mask & ~(1u << v));
        if (minimal)
            out.push_back(mask);
    }
    return out;
}

}  // namespace cera::oracle
