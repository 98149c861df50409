#pragma once

// Worked examples and random generators shared by the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cera/filtration.hpp"
#include "cera/functorial.hpp"

namespace cera::testing {

inline Filtration example_one(VertexMode mode = VertexMode::full)
{
    return Filtration::from_levels({1, 2, 3, 4}, {{{1, 2}, {3, 4}}, {{2, 3}}}, mode);
}

inline Filtration example_two(VertexMode mode = VertexMode::full)
{
    return Filtration::from_levels({1, 2, 3, 4}, {{{1, 2}, {2, 3}, {3, 4}}, {{4, 1}}}, mode);
}

inline Filtration example_three(VertexMode mode = VertexMode::full)
{
    return Filtration::from_levels({1, 2, 3, 4, 5, 6},
                                   {{{1, 2}, {3, 4}, {5, 6}}, {{2, 3}, {4, 5}}}, mode);
}

/// Lattice point (i, j), 1 <= i, j <= 3, as vertex id 3(i-1)+j.
constexpr VertexId lattice_id(int i, int j) { return static_cast<VertexId>(3 * (i - 1) + j); }

/// The four lattice snapshots t1..t4: upper-left cluster, second cluster,
/// the joining edge (2,2)-(2,3), then no further change. Only the seven
/// active lattice points are vertices.
inline Filtration lattice_levels(VertexMode mode = VertexMode::full)
{
    const auto e = [](int i1, int j1, int i2, int j2) {
        return Edge{lattice_id(i1, j1), lattice_id(i2, j2)};
    };
    return Filtration::from_levels(
        {},
        {
            {e(1, 1, 1, 2), e(1, 1, 2, 1), e(2, 1, 2, 2)},
            {e(2, 3, 3, 3), e(3, 2, 3, 3)},
            {e(2, 2, 2, 3)},
            {},
        },
        mode);
}

/// Random filtration: up to max_vertices sparse vertex ids, each possible
/// undirected pair present with probability `density` and assigned a random
/// level in 1..levels (levels itself random in 1..max_levels).
inline Filtration random_filtration(std::mt19937_64& rng, VertexMode mode,
                                    std::size_t max_vertices = 10, std::size_t max_levels = 6,
                                    double density = 0.3)
{
    std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
    std::uniform_int_distribution<std::size_t> nl(1, max_levels);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const std::size_t n = nv(rng);
    const std::size_t k = nl(rng);

    std::set<VertexId> ids;
    std::uniform_int_distribution<VertexId> id(0, 40);
    while (ids.size() < n)
        ids.insert(id(rng));
    std::vector<VertexId> vertices(ids.begin(), ids.end());

    std::vector<std::vector<Edge>> diffs(k);
    std::uniform_int_distribution<std::size_t> level(0, k - 1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (coin(rng) >= density)
                continue;
            Edge e = coin(rng) < 0.5 ? Edge{vertices[a], vertices[b]} : Edge{vertices[b], vertices[a]};
            diffs[level(rng)].push_back(e);
        }
    }
    for (auto& d : diffs)
        std::shuffle(d.begin(), d.end(), rng);
    return Filtration::from_levels(vertices, std::move(diffs), mode);
}

struct RandomMorphism {
    Filtration target;
    VertexMap map;
};

/// Injective relabelling of `source` into a larger filtration: every image
/// edge appears at the same or an earlier level, plus extra edges among the
/// image and a few fresh vertices.
inline RandomMorphism random_morphism(std::mt19937_64& rng, const Filtration& source,
                                      VertexId offset = 100)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<VertexId> images;
    for (std::size_t i = 0; i < source.vertices().size() + 3; ++i)
        images.push_back(offset + static_cast<VertexId>(i));
    std::shuffle(images.begin(), images.end(), rng);

    VertexMap map;
    for (std::size_t i = 0; i < source.vertices().size(); ++i)
        map[source.vertices()[i]] = images[i];

    const std::size_t k = source.num_levels() + (coin(rng) < 0.3 ? 1 : 0);
    std::vector<std::vector<Edge>> diffs(k);
    std::set<UndirectedEdge> used;
    for (std::size_t n = 1; n <= source.num_levels(); ++n) {
        for (const Edge& e : source.new_edges(n)) {
            const Edge image{map.at(e.source), map.at(e.target)};
            std::uniform_int_distribution<std::size_t> earlier(1, n);
            diffs[earlier(rng) - 1].push_back(image);
            used.insert(UndirectedEdge(image));
        }
    }
    std::uniform_int_distribution<std::size_t> level(0, k - 1);
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
            if (!used.contains(UndirectedEdge(images[a], images[b])) && coin(rng) < 0.15)
                diffs[level(rng)].push_back({images[a], images[b]});
    return {Filtration::from_levels(images, std::move(diffs), source.mode()), std::move(map)};
}

}  // namespace cera::testing
