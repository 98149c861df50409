#pragma once

#include <vector>

#include "cera/kernels.hpp"

namespace cera::kernels::detail {

/// fwd[v] = neighbours of v with a larger index.
inline std::vector<Bitset> forward_adjacency(std::span<const Bitset> adjacency)
{
    const std::size_t n = adjacency.size();
    std::vector<Bitset> fwd(adjacency.begin(), adjacency.end());
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u <= v && u < n; ++u)
            fwd[v].reset(u);
    return fwd;
}

inline void grow_cliques(const std::vector<Bitset>& fwd, const Bitset& candidates,
                         std::size_t size, std::vector<std::uint64_t>& counts)
{
    if (counts.size() <= size)
        counts.resize(size + 1, 0);
    ++counts[size];
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v))
        grow_cliques(fwd, candidates & fwd[v], size + 1, counts);
}

using ForbiddenIndex = std::vector<std::vector<const Bitset*>>;

inline ForbiddenIndex index_forbidden(std::size_t n, std::span<const Bitset> forbidden)
{
    ForbiddenIndex by_vertex(n);
    for (const Bitset& f : forbidden)
        for (auto v = f.find_first(); v != Bitset::npos; v = f.find_next(v))
            by_vertex[v].push_back(&f);
    return by_vertex;
}

/// Tries to add v to `current`; returns false (leaving `current` unchanged)
/// when that would complete a forbidden set.
inline bool try_add(const ForbiddenIndex& by_vertex, Bitset& current, std::size_t v)
{
    current.set(v);
    for (const Bitset* f : by_vertex[v]) {
        if (f->is_subset_of(current)) {
            current.reset(v);
            return false;
        }
    }
    return true;
}

inline void grow_free_sets(const ForbiddenIndex& by_vertex, Bitset& current,
                           std::size_t next_vertex, std::size_t size,
                           std::vector<std::uint64_t>& counts)
{
    if (counts.size() <= size)
        counts.resize(size + 1, 0);
    ++counts[size];
    for (std::size_t v = next_vertex; v < by_vertex.size(); ++v) {
        if (try_add(by_vertex, current, v)) {
            grow_free_sets(by_vertex, current, v + 1, size + 1, counts);
            current.reset(v);
        }
    }
}

inline void accumulate(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& part)
{
    if (into.size() < part.size())
        into.resize(part.size(), 0);
    for (std::size_t i = 0; i < part.size(); ++i)
        into[i] += part[i];
}

inline void trim(std::vector<std::uint64_t>& counts)
{
    while (counts.size() > 1 && counts.back() == 0)
        counts.pop_back();
}

}  // namespace cera::kernels::detail
