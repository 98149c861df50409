#include "cera/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace cera {

using kernels::Bitset;

namespace {

std::size_t index_of(const std::vector<VertexId>& vertices, VertexId v)
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) {
        std::ostringstream msg;
        msg << "vertex " << v << " is not in the complex's vertex set";
        throw InputError(msg.str());
    }
    return static_cast<std::size_t>(it - vertices.begin());
}

void bron_kerbosch(const std::vector<Bitset>& adj, Bitset& clique, Bitset candidates,
                   Bitset excluded, std::vector<Bitset>& out)
{
    if (candidates.none() && excluded.none()) {
        if (clique.any())
            out.push_back(clique);
        return;
    }
    // pivot maximizing |candidates ∩ N(u)|
    const Bitset pool = candidates | excluded;
    std::size_t pivot = pool.find_first();
    std::size_t best = 0;
    for (auto u = pool.find_first(); u != Bitset::npos; u = pool.find_next(u)) {
        const std::size_t c = (candidates & adj[u]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    const Bitset branch = candidates - adj[pivot];
    for (auto v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
        clique.set(v);
        bron_kerbosch(adj, clique, candidates & adj[v], excluded & adj[v], out);
        clique.reset(v);
        candidates.reset(v);
        excluded.set(v);
    }
}

/// Depth-first walk over all faces. `visit(face, size, live_facets)` is called
/// for every face; `live_facets` lists the facets containing it.
template <typename Visit>
void walk_faces(const std::vector<Bitset>& facets, std::size_t n, Bitset& face,
                std::size_t next, std::size_t size, const std::vector<std::size_t>& live,
                Visit& visit)
{
    visit(face, next, size, live);
    std::vector<std::size_t> sub;
    for (std::size_t v = next; v < n; ++v) {
        sub.clear();
        for (std::size_t i : live)
            if (facets[i].test(v))
                sub.push_back(i);
        if (sub.empty())
            continue;
        face.set(v);
        walk_faces(facets, n, face, v + 1, size + 1, sub, visit);
        face.reset(v);
    }
}

void enumerate_exponents(std::size_t var, std::size_t n, unsigned remaining, Bitset& support,
                         const SimplicialComplex& complex, BigInt& count)
{
    if (var + 1 == n) {
        support[var] = remaining > 0;
        if (complex.is_face(support))
            ++count;
        support.reset(var);
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        support[var] = e > 0;
        enumerate_exponents(var + 1, n, remaining - e, support, complex, count);
    }
    support.reset(var);
}

}  // namespace

void SimplicialComplex::add_facet_candidates(std::vector<Bitset> faces)
{
    std::sort(faces.begin(), faces.end(), [](const Bitset& a, const Bitset& b) {
        return a.count() > b.count();
    });
    facets_.clear();
    for (auto& f : faces) {
        const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                         [&](const Bitset& g) { return f.is_subset_of(g); });
        if (!covered)
            facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<VertexId> vertices,
                                                std::vector<Face> faces)
{
    SimplicialComplex c;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    c.vertices_ = std::move(vertices);
    const std::size_t n = c.vertices_.size();

    std::vector<Bitset> candidates;
    for (const Face& face : faces) {
        Bitset b(n);
        for (VertexId v : face)
            b.set(index_of(c.vertices_, v));
        candidates.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < n; ++i)
        candidates.push_back(Bitset(n).set(i));
    c.add_facet_candidates(std::move(candidates));
    return c;
}

SimplicialComplex SimplicialComplex::clique_complex(const LevelGraph& graph)
{
    SimplicialComplex c;
    c.vertices_ = graph.vertices;
    const std::size_t n = c.vertices_.size();
    std::vector<Bitset> adj(n, Bitset(n));
    for (const auto& e : graph.edges) {
        const std::size_t a = index_of(c.vertices_, e.lo);
        const std::size_t b = index_of(c.vertices_, e.hi);
        adj[a].set(b);
        adj[b].set(a);
    }
    std::vector<Bitset> maximal;
    Bitset clique(n), candidates(n), excluded(n);
    candidates.set();
    bron_kerbosch(adj, clique, candidates, excluded, maximal);
    c.add_facet_candidates(std::move(maximal));
    c.adjacency_ = std::move(adj);
    return c;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::facets() const
{
    std::vector<Face> out;
    for (const Bitset& f : facets_) {
        Face face;
        for (auto i = f.find_first(); i != Bitset::npos; i = f.find_next(i))
            face.push_back(vertices_[i]);
        out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long SimplicialComplex::dim() const
{
    std::size_t largest = 0;
    for (const Bitset& f : facets_)
        largest = std::max(largest, f.count());
    return static_cast<long long>(largest) - 1;
}

bool SimplicialComplex::is_face(const Bitset& face) const
{
    if (face.none())
        return true;
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Bitset& f) { return face.is_subset_of(f); });
}

bool SimplicialComplex::is_face(std::span<const VertexId> face) const
{
    Bitset b(vertices_.size());
    for (VertexId v : face) {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v)
            return false;
        b.set(static_cast<std::size_t>(it - vertices_.begin()));
    }
    return is_face(b);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const
{
    return std::all_of(facets_.begin(), facets_.end(), [&](const Bitset& f) {
        Face face;
        for (auto i = f.find_first(); i != Bitset::npos; i = f.find_next(i))
            face.push_back(vertices_[i]);
        return other.is_face(face);
    });
}

FVector f_vector(const SimplicialComplex& complex, Execution exec)
{
    if (const auto& adj = complex.flag_adjacency()) {
        return {exec == Execution::serial ? kernels::clique_counts_serial(*adj)
                                          : kernels::clique_counts_parallel(*adj)};
    }
    // general complexes: count faces by walking subsets of facets
    std::vector<Bitset> facets;
    for (const auto& face : complex.facets()) {
        Bitset b(complex.vertices().size());
        for (VertexId v : face)
            b.set(index_of(complex.vertices(), v));
        facets.push_back(std::move(b));
    }
    FVector out;
    auto visit = [&](const Bitset&, std::size_t, std::size_t size,
                     const std::vector<std::size_t>&) {
        if (out.counts.size() <= size)
            out.counts.resize(size + 1, 0);
        ++out.counts[size];
    };
    std::vector<std::size_t> live(facets.size());
    for (std::size_t i = 0; i < live.size(); ++i)
        live[i] = i;
    Bitset face(complex.vertices().size());
    walk_faces(facets, complex.vertices().size(), face, 0, 0, live, visit);
    return out;
}

std::vector<SimplicialComplex::Face> minimal_nonfaces(const SimplicialComplex& complex)
{
    const auto& vertices = complex.vertices();
    const std::size_t n = vertices.size();
    std::vector<Bitset> facets;
    for (const auto& face : complex.facets()) {
        Bitset b(n);
        for (VertexId v : face)
            b.set(index_of(vertices, v));
        facets.push_back(std::move(b));
    }

    // Each minimal non-face T is found once, from the face T minus its largest vertex.
    std::vector<SimplicialComplex::Face> out;
    auto visit = [&](const Bitset& face, std::size_t next, std::size_t,
                     const std::vector<std::size_t>& live) {
        for (std::size_t v = next; v < n; ++v) {
            const bool extends = std::any_of(live.begin(), live.end(),
                                             [&](std::size_t i) { return facets[i].test(v); });
            if (extends)
                continue;
            Bitset candidate = face;
            candidate.set(v);
            bool minimal = true;
            for (auto w = face.find_first(); w != Bitset::npos && minimal; w = face.find_next(w)) {
                candidate.reset(w);
                minimal = complex.is_face(candidate);
                candidate.set(w);
            }
            if (!minimal)
                continue;
            SimplicialComplex::Face nonface;
            for (auto i = candidate.find_first(); i != Bitset::npos; i = candidate.find_next(i))
                nonface.push_back(vertices[i]);
            out.push_back(std::move(nonface));
        }
    };
    std::vector<std::size_t> live(facets.size());
    for (std::size_t i = 0; i < live.size(); ++i)
        live[i] = i;
    Bitset face(n);
    walk_faces(facets, n, face, 0, 0, live, visit);
    std::sort(out.begin(), out.end());
    return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex)
{
    std::vector<Monomial> gens;
    for (const auto& nonface : minimal_nonfaces(complex))
        gens.push_back(Monomial::from_support(nonface));
    return MonomialIdeal(std::move(gens), complex.vertices());
}

BigInt quotient_hilbert(const FVector& f, unsigned d)
{
    if (d == 0)
        return 1;
    BigInt sum = 0;
    for (std::size_t i = 1; i < f.counts.size(); ++i)
        sum += BigInt(f.counts[i]) *
               binomial(static_cast<long long>(d) - 1, static_cast<long long>(i) - 1);
    return sum;
}

BigInt quotient_hilbert(const SimplicialComplex& complex, unsigned d)
{
    return quotient_hilbert(f_vector(complex), d);
}

BigInt quotient_hilbert_bruteforce(const SimplicialComplex& complex, unsigned d)
{
    const std::size_t n = complex.vertices().size();
    if (n == 0)
        return d == 0 ? 1 : 0;
    BigInt count = 0;
    Bitset support(n);
    enumerate_exponents(0, n, d, support, complex, count);
    return count;
}

std::vector<SimplicialComplex> clique_filtration(const Filtration& filtration)
{
    std::vector<SimplicialComplex> out;
    for (std::size_t n = 0; n <= filtration.num_levels(); ++n)
        out.push_back(clique_complex(underlying_undirected(filtration, n)));
    return out;
}

GradedDimTable sr_hilbert_table(std::span<const SimplicialComplex> levels, unsigned d_max,
                                Execution exec)
{
    const auto count = static_cast<std::ptrdiff_t>(levels.size());
    GradedDimTable table;
    table.cells.assign(levels.size(), std::vector<BigInt>(d_max + 1));

    auto fill_row = [&](std::ptrdiff_t n) {
        const auto& complex = levels[static_cast<std::size_t>(n)];
        const FVector f = f_vector(complex, Execution::serial);
        const std::size_t vars = complex.vertices().size();
        auto& row = table.cells[static_cast<std::size_t>(n)];
        for (unsigned d = 0; d <= d_max; ++d)
            row[d] = monomial_count(vars, d) - quotient_hilbert(f, d);
    };

    if (exec == Execution::serial) {
        for (std::ptrdiff_t n = 0; n < count; ++n)
            fill_row(n);
    } else {
        #pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t n = 0; n < count; ++n)
            fill_row(n);
    }
    return table;
}

GradedDimTable sr_hilbert_table(const Filtration& filtration, unsigned d_max, Execution exec)
{
    const auto levels = clique_filtration(filtration);
    return sr_hilbert_table(levels, d_max, exec);
}

GradedDimTable sr_hilbert_table_bruteforce(std::span<const SimplicialComplex> levels,
                                           unsigned d_max)
{
    GradedDimTable table;
    for (const auto& complex : levels) {
        const MonomialIdeal ideal = stanley_reisner_ideal(complex);
        auto& row = table.cells.emplace_back();
        for (unsigned d = 0; d <= d_max; ++d)
            row.push_back(graded_dim_bruteforce(ideal, d));
    }
    return table;
}

std::vector<BigradedSample> exhaustive_bigraded_samples(std::span<const SimplicialComplex> levels)
{
    std::vector<std::vector<Monomial>> gens;
    for (const auto& complex : levels)
        gens.push_back(stanley_reisner_ideal(complex).generators());
    std::vector<BigradedSample> out;
    for (std::size_t n = 0; n < gens.size(); ++n)
        for (const auto& f : gens[n])
            for (std::size_t m = 0; m < gens.size(); ++m)
                for (const auto& g : gens[m])
                    out.push_back({f, n, g, m});
    return out;
}

bool check_bigraded_closure(std::span<const SimplicialComplex> levels,
                            std::span<const BigradedSample> samples)
{
    std::vector<MonomialIdeal> ideals;
    for (const auto& complex : levels)
        ideals.push_back(stanley_reisner_ideal(complex));
    for (const auto& s : samples) {
        if (s.n >= ideals.size() || s.m >= ideals.size())
            throw std::out_of_range("bigraded sample refers to a missing level");
        if (!contains(ideals[s.n], s.f) || !contains(ideals[s.m], s.g))
            throw InputError("bigraded sample factor is not in its Stanley-Reisner ideal");
        const Monomial product = s.f * s.g;
        if (product.degree() != s.f.degree() + s.g.degree())
            return false;
        if (!contains(ideals[std::max(s.n, s.m)], product))
            return false;
    }
    return true;
}

}  // namespace cera
