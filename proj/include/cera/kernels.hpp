#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version and an
// OpenMP version; both must return identical results.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cera/graph.hpp"

namespace cera::kernels {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// All admissible ordered pairs, sorted by (source, target).
std::vector<Edge> admissible_pairs_serial(std::span<const Event> events,
                                          const AdmissibilityParams& params);
std::vector<Edge> admissible_pairs_parallel(std::span<const Event> events,
                                            const AdmissibilityParams& params);

/// counts[i] = number of cliques with i vertices (counts[0] = 1 for the empty
/// clique). `adjacency[v]` is the neighbour set of vertex v.
std::vector<std::uint64_t> clique_counts_serial(std::span<const Bitset> adjacency);
std::vector<std::uint64_t> clique_counts_parallel(std::span<const Bitset> adjacency);

/// counts[i] = number of i-subsets of {0..n-1} that contain none of the
/// `forbidden` sets. This is the f-vector (shifted by one) of the simplicial
/// complex whose minimal non-faces are `forbidden`.
std::vector<std::uint64_t> free_set_counts_serial(std::size_t n,
                                                  std::span<const Bitset> forbidden);
std::vector<std::uint64_t> free_set_counts_parallel(std::size_t n,
                                                    std::span<const Bitset> forbidden);

}  // namespace cera::kernels
