#include "cera/functorial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cera {

std::vector<MorphismViolation> check_morphism(const Filtration& source, const Filtration& target,
                                              const VertexMap& vertex_map)
{
    for (VertexId v : source.vertices()) {
        if (!vertex_map.contains(v)) {
            std::ostringstream msg;
            msg << "source vertex " << v << " is not mapped";
            throw StructuralError(msg.str());
        }
    }
    std::vector<MorphismViolation> out;
    for (std::size_t n = 1; n <= source.num_levels(); ++n) {
        const auto target_edges = target.edges(n);
        for (const Edge& e : source.edges(n)) {
            const Edge image{vertex_map.at(e.source), vertex_map.at(e.target)};
            if (!std::binary_search(target_edges.begin(), target_edges.end(), image))
                out.push_back({e, n});
        }
    }
    return out;
}

FilteredMorphism::FilteredMorphism(const Filtration& source, const Filtration& target,
                                   VertexMap vertex_map)
    : source_(source), target_(target), map_(std::move(vertex_map))
{
    const auto violations = check_morphism(source_, target_, map_);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "vertex map does not preserve edge " << violations.front().edge << " at level "
            << violations.front().level;
        throw InputError(msg.str());
    }
}

FilteredMorphism::FilteredMorphism(NoCheck, const Filtration& source, const Filtration& target,
                                   VertexMap map)
    : source_(source), target_(target), map_(std::move(map))
{
    for (VertexId v : source_.vertices()) {
        if (!map_.contains(v)) {
            std::ostringstream msg;
            msg << "source vertex " << v << " is not mapped";
            throw StructuralError(msg.str());
        }
    }
}

FilteredMorphism FilteredMorphism::unchecked(const Filtration& source, const Filtration& target,
                                             VertexMap vertex_map)
{
    return FilteredMorphism(NoCheck{}, source, target, std::move(vertex_map));
}

Monomial FilteredMorphism::apply(const Monomial& m) const
{
    std::vector<Monomial::Term> terms;
    for (const auto& [v, e] : m.terms())
        terms.emplace_back(map_.at(v), e);
    return Monomial(std::move(terms));
}

VertexMap compose(const VertexMap& first, const VertexMap& second)
{
    VertexMap out;
    for (const auto& [v, w] : first) {
        auto it = second.find(w);
        if (it == second.end()) {
            std::ostringstream msg;
            msg << "vertex " << w << " is not mapped by the second morphism";
            throw StructuralError(msg.str());
        }
        out.emplace(v, it->second);
    }
    return out;
}

namespace {

void note_collapse(const Monomial& image, const Monomial& original, ImageCheck& check)
{
    if (!image.is_squarefree())
        check.warnings.push_back(original.to_string() + " maps to non-squarefree " +
                                 image.to_string());
}

}  // namespace

ImageCheck induced_image_check(const FilteredMorphism& morphism)
{
    ImageCheck check;
    for (std::size_t n = 1; n <= morphism.source().num_levels(); ++n) {
        const MonomialIdeal target_ideal = edge_ideal(morphism.target(), n);
        const MonomialIdeal source_ideal = edge_ideal(morphism.source(), n);
        for (const auto& g : source_ideal.generators()) {
            const Monomial image = morphism.apply(g);
            note_collapse(image, g, check);
            if (!contains(target_ideal, image))
                check.holds = false;
        }
    }
    return check;
}

MonomialIdeal temporal_collapse(const Filtration& filtration)
{
    std::vector<Monomial> gens;
    for (std::size_t n = 1; n <= filtration.num_levels(); ++n)
        for (auto& m : quotient_new_generators(filtration, n))
            gens.push_back(std::move(m));
    return MonomialIdeal(std::move(gens), filtration.vertices());
}

ImageCheck verify_naturality(const FilteredMorphism& morphism)
{
    ImageCheck check;
    const MonomialIdeal collapsed_target = temporal_collapse(morphism.target());

    // map each graded piece, then forget the grading
    std::set<Monomial> map_then_collapse;
    for (std::size_t n = 1; n <= morphism.source().num_levels(); ++n) {
        const MonomialIdeal level = edge_ideal(morphism.source(), n);
        for (const auto& g : level.generators())
            map_then_collapse.insert(morphism.apply(g));
    }

    // forget the grading, then map
    std::set<Monomial> collapse_then_map;
    const MonomialIdeal collapsed_source = temporal_collapse(morphism.source());
    for (const auto& g : collapsed_source.generators()) {
        const Monomial image = morphism.apply(g);
        note_collapse(image, g, check);
        collapse_then_map.insert(image);
        if (!contains(collapsed_target, image))
            check.holds = false;
    }
    if (map_then_collapse != collapse_then_map)
        check.holds = false;
    return check;
}

}  // namespace cera
