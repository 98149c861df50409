#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cera/kernels.hpp"
#include "cera/monomial.hpp"

namespace cera {

/// Finite simplicial complex stored through its maximal faces (facets).
///
/// Every vertex of the vertex set is a face, and so is the empty set.
class SimplicialComplex {
public:
    using Face = std::vector<VertexId>;

    /// Downward closure of `faces` over `vertices`. Vertices not covered by a
    /// face become isolated points. Throws InputError if a face uses a vertex
    /// outside `vertices`.
    static SimplicialComplex from_faces(std::vector<VertexId> vertices, std::vector<Face> faces);

    /// Clique (flag) complex of an undirected graph.
    static SimplicialComplex clique_complex(const LevelGraph& graph);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    /// Facets, each sorted; the list is sorted.
    std::vector<Face> facets() const;
    /// Largest face cardinality minus one; -1 for the empty complex.
    long long dim() const;

    bool is_face(std::span<const VertexId> face) const;
    bool is_face(const kernels::Bitset& face) const;
    /// True iff every face of this complex is a face of `other`.
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    /// Neighbour bitsets when built as a clique complex.
    const std::optional<std::vector<kernels::Bitset>>& flag_adjacency() const { return adjacency_; }

private:
    SimplicialComplex() = default;
    void add_facet_candidates(std::vector<kernels::Bitset> faces);

    std::vector<VertexId> vertices_;
    std::vector<kernels::Bitset> facets_;
    std::optional<std::vector<kernels::Bitset>> adjacency_;
};

inline SimplicialComplex clique_complex(const LevelGraph& graph)
{
    return SimplicialComplex::clique_complex(graph);
}

/// counts[i] = number of faces with i vertices; counts[0] = 1 is the empty face,
/// so counts[i] is f_{i-1} in the usual indexing.
struct FVector {
    std::vector<std::uint64_t> counts;

    std::uint64_t f(long long i) const
    {
        const auto idx = static_cast<std::size_t>(i + 1);
        return i >= -1 && idx < counts.size() ? counts[idx] : 0;
    }
};

FVector f_vector(const SimplicialComplex& complex, Execution exec = Execution::serial);

/// Inclusion-minimal vertex subsets that are not faces, each sorted.
std::vector<SimplicialComplex::Face> minimal_nonfaces(const SimplicialComplex& complex);

/// Squarefree ideal of the minimal non-faces, over the complex's vertices.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Hilbert function of k[Delta] in degree d from the f-vector.
BigInt quotient_hilbert(const FVector& f, unsigned d);
BigInt quotient_hilbert(const SimplicialComplex& complex, unsigned d);
/// Counts degree-d monomials whose support is a face.
BigInt quotient_hilbert_bruteforce(const SimplicialComplex& complex, unsigned d);

/// Clique complexes of G_0^*, ..., G_k^* (vertices per the filtration's mode).
std::vector<SimplicialComplex> clique_filtration(const Filtration& filtration);

/// H(n, d) = dim_k (I_{Delta_n})_d over k[x_v : v in vertices of Delta_n].
GradedDimTable sr_hilbert_table(std::span<const SimplicialComplex> levels, unsigned d_max,
                                Execution exec = Execution::parallel);
GradedDimTable sr_hilbert_table(const Filtration& filtration, unsigned d_max,
                                Execution exec = Execution::parallel);

/// Same table from graded_dim_bruteforce on each Stanley-Reisner ideal.
GradedDimTable sr_hilbert_table_bruteforce(std::span<const SimplicialComplex> levels,
                                           unsigned d_max);

/// f in I_{Delta_n}, g in I_{Delta_m}; f*g must lie in I_{Delta_max(n,m)}.
struct BigradedSample {
    Monomial f;
    std::size_t n = 0;
    Monomial g;
    std::size_t m = 0;
};

/// All ordered pairs of Stanley-Reisner generators across levels.
std::vector<BigradedSample> exhaustive_bigraded_samples(std::span<const SimplicialComplex> levels);

/// True iff every product lies in I_{Delta_max(n,m)} with degree deg f + deg g.
bool check_bigraded_closure(std::span<const SimplicialComplex> levels,
                            std::span<const BigradedSample> samples);

}  // namespace cera
