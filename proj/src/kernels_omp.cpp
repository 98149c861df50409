#include <algorithm>

#include "kernels_detail.hpp"

namespace cera::kernels {

std::vector<Edge> admissible_pairs_parallel(std::span<const Event> events,
                                            const AdmissibilityParams& params)
{
    const auto n = static_cast<std::ptrdiff_t>(events.size());
    std::vector<std::vector<Edge>> rows(events.size());

    #pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Event& u = events[i];
        for (const Event& v : events)
            if (admissible(u, v, params))
                rows[i].push_back({u.id, v.id});
    }

    std::vector<Edge> out;
    for (auto& row : rows)
        out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> clique_counts_parallel(std::span<const Bitset> adjacency)
{
    const auto fwd = detail::forward_adjacency(adjacency);
    const auto n = static_cast<std::ptrdiff_t>(adjacency.size());
    std::vector<std::uint64_t> counts{1};  // empty clique

    #pragma omp parallel
    {
        std::vector<std::uint64_t> local{0};
        #pragma omp for schedule(dynamic)
        for (std::ptrdiff_t v = 0; v < n; ++v) {
            std::vector<std::uint64_t> part;
            detail::grow_cliques(fwd, fwd[v], 0, part);
            // part[i] counts cliques of size i + 1 rooted at v
            if (local.size() < part.size() + 1)
                local.resize(part.size() + 1, 0);
            for (std::size_t i = 0; i < part.size(); ++i)
                local[i + 1] += part[i];
        }
        #pragma omp critical
        detail::accumulate(counts, local);
    }
    detail::trim(counts);
    return counts;
}

std::vector<std::uint64_t> free_set_counts_parallel(std::size_t n,
                                                    std::span<const Bitset> forbidden)
{
    for (const Bitset& f : forbidden)
        if (f.none())
            return {0};
    const auto by_vertex = detail::index_forbidden(n, forbidden);
    const auto count = static_cast<std::ptrdiff_t>(n);
    std::vector<std::uint64_t> counts{1};  // empty set

    #pragma omp parallel
    {
        std::vector<std::uint64_t> local{0};
        Bitset current(n);
        #pragma omp for schedule(dynamic)
        for (std::ptrdiff_t v = 0; v < count; ++v) {
            if (!detail::try_add(by_vertex, current, static_cast<std::size_t>(v)))
                continue;
            std::vector<std::uint64_t> part;
            detail::grow_free_sets(by_vertex, current, static_cast<std::size_t>(v) + 1, 0, part);
            current.reset(static_cast<std::size_t>(v));
            if (local.size() < part.size() + 1)
                local.resize(part.size() + 1, 0);
            for (std::size_t i = 0; i < part.size(); ++i)
                local[i + 1] += part[i];
        }
        #pragma omp critical
        detail::accumulate(counts, local);
    }
    detail::trim(counts);
    return counts;
}

}  // namespace cera::kernels
