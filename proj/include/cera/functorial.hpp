#pragma once

#include <map>
#include <string>
#include <vector>

#include "cera/monomial.hpp"

namespace cera {

using VertexMap = std::map<VertexId, VertexId>;

/// An edge of the source at `level` whose image is missing from the target's E'_level.
struct MorphismViolation {
    Edge edge;
    std::size_t level = 0;

    friend bool operator==(const MorphismViolation&, const MorphismViolation&) = default;
};

/// Empty iff (phi(u), phi(v)) is in E'_n for every (u, v) in E_n and every
/// level n of the source; target levels past k' repeat E'_{k'}. Throws
/// StructuralError if a source vertex is unmapped.
std::vector<MorphismViolation> check_morphism(const Filtration& source, const Filtration& target,
                                              const VertexMap& vertex_map);

/// Vertex map between two filtrations; construction runs check_morphism and
/// throws InputError on any violation.
class FilteredMorphism {
public:
    FilteredMorphism(const Filtration& source, const Filtration& target, VertexMap vertex_map);

    /// Skips the edge-preservation check (vertices must still all be mapped).
    /// Used to diagnose maps that fail it.
    static FilteredMorphism unchecked(const Filtration& source, const Filtration& target,
                                      VertexMap vertex_map);

    const Filtration& source() const { return source_; }
    const Filtration& target() const { return target_; }
    const VertexMap& vertex_map() const { return map_; }

    VertexId operator()(VertexId v) const { return map_.at(v); }
    /// x_v -> x_{phi(v)}, extended multiplicatively.
    Monomial apply(const Monomial& m) const;

private:
    struct NoCheck {};
    FilteredMorphism(NoCheck, const Filtration& source, const Filtration& target, VertexMap map);

    Filtration source_;
    Filtration target_;
    VertexMap map_;
};

/// psi o phi as a vertex map: v -> second(first(v)).
VertexMap compose(const VertexMap& first, const VertexMap& second);

struct ImageCheck {
    bool holds = true;
    /// Images that are not squarefree (the map collapsed an edge to one vertex).
    std::vector<std::string> warnings;
};

/// Every generator of I_n maps into I'_n, for every level n of the source.
ImageCheck induced_image_check(const FilteredMorphism& morphism);

/// Edge ideal of the aggregated graph: the union of all per-level new generators.
MonomialIdeal temporal_collapse(const Filtration& filtration);

/// Compares both sides of the collapse square on generators: collapsing the
/// mapped level generators must give the same monomials as mapping the
/// collapsed generators, and all of them must lie in collapse(target).
ImageCheck verify_naturality(const FilteredMorphism& morphism);

}  // namespace cera
