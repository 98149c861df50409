#include <algorithm>

#include "kernels_detail.hpp"

namespace cera::kernels {

std::vector<Edge> admissible_pairs_serial(std::span<const Event> events,
                                          const AdmissibilityParams& params)
{
    std::vector<Edge> out;
    for (const Event& u : events)
        for (const Event& v : events)
            if (admissible(u, v, params))
                out.push_back({u.id, v.id});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> clique_counts_serial(std::span<const Bitset> adjacency)
{
    const auto fwd = detail::forward_adjacency(adjacency);
    Bitset all(adjacency.size());
    all.set();
    std::vector<std::uint64_t> counts{0};
    detail::grow_cliques(fwd, all, 0, counts);
    return counts;
}

std::vector<std::uint64_t> free_set_counts_serial(std::size_t n,
                                                  std::span<const Bitset> forbidden)
{
    for (const Bitset& f : forbidden)
        if (f.none())
            return {0};
    const auto by_vertex = detail::index_forbidden(n, forbidden);
    Bitset current(n);
    std::vector<std::uint64_t> counts{0};
    detail::grow_free_sets(by_vertex, current, 0, 0, counts);
    return counts;
}

}  // namespace cera::kernels
