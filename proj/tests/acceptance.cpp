// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "cera/connectivity.hpp"
#include "cera/functorial.hpp"
#include "cera/simplicial.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cera;
using testing::example_one;
using testing::example_three;
using testing::example_two;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<Monomial> parse_all(std::initializer_list<const char*> texts)
{
    std::vector<Monomial> out;
    for (const char* t : texts)
        out.push_back(Monomial::parse(t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> betti_sequence(const Filtration& f)
{
    std::vector<long long> out;
    for (std::size_t n = 1; n <= f.num_levels(); ++n)
        out.push_back(beta0(f, n));
    return out;
}

Outcome example_one_check()
{
    Outcome o;
    const auto f = example_one();
    o.expect(betti_sequence(f) == std::vector<long long>{2, 1}, "beta0 sequence");
    const auto level = classify_level_edges(f, 2);
    o.expect(level.dim_B == 1, "dim B_2");
    o.expect(quotient_new_generators(f, 2) == parse_all({"x2*x3"}), "quotient generator");
    o.expect(edge_ideal(f, 1).generators() == parse_all({"x1*x2", "x3*x4"}), "I_1 generators");
    o.expect(edge_ideal(f, 2).generators() == parse_all({"x1*x2", "x3*x4", "x2*x3"}),
             "I_2 generators");
    return o;
}

Outcome example_two_check()
{
    Outcome o;
    const auto f = example_two();
    const auto level = classify_level_edges(f, 2);
    o.expect(level.dim_B == 0, "dim B_2");
    o.expect(level.classified.size() == 1 && level.classified[0].edge == Edge{4, 1} &&
                 level.classified[0].cls == EdgeClass::cycle,
             "new edge (4,1) is not a cycle");
    o.expect(betti_sequence(f) == std::vector<long long>{1, 1}, "beta0 sequence");
    return o;
}

Outcome example_three_check()
{
    Outcome o;
    const auto f = example_three();
    o.expect(betti_sequence(f) == std::vector<long long>{3, 1}, "beta0 sequence");
    const auto level = classify_level_edges(f, 2);
    o.expect(level.dim_B == 2, "dim B_2");
    o.expect(level.bridges() == std::vector<Edge>{{2, 3}, {4, 5}}, "bridge edges");
    return o;
}

Outcome lattice_check()
{
    Outcome o;
    for (auto mode : {VertexMode::full, VertexMode::incident}) {
        const auto f = testing::lattice_levels(mode);
        const auto levels = classify_all_levels(f);
        o.expect(levels[2].dim_B == 1, "dim B at t3");
        o.expect(levels[2].bridges() == std::vector<Edge>{{testing::lattice_id(2, 2),
                                                           testing::lattice_id(2, 3)}},
                 "bridge at t3");
        o.expect(levels[3].dim_B == 0, "dim B at t4");
        o.expect(beta0(f, 2) == 2 && beta0(f, 3) == 1, "beta0 drop at t3");
    }
    return o;
}

Outcome theorem_suite()
{
    Outcome o;
    std::mt19937_64 rng(20240501);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = testing::random_filtration(rng, VertexMode::full, 10, 6);
        const auto levels = classify_all_levels(f);
        for (std::size_t n = 1; n <= f.num_levels(); ++n)
            o.expect(levels[n - 1].dim_B ==
                         oracle::level_components(f, n - 1) - oracle::level_components(f, n),
                     "trial " + std::to_string(trial) + " level " + std::to_string(n));
    }
    return o;
}

Outcome ledger_suite()
{
    Outcome o;
    std::mt19937_64 rng(20240502);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = testing::random_filtration(rng, VertexMode::incident, 10, 6);
        const auto levels = classify_all_levels(f);
        for (std::size_t n = 1; n <= f.num_levels(); ++n) {
            const auto& c = levels[n - 1];
            o.expect(oracle::level_components(f, n) ==
                         oracle::level_components(f, n - 1) + c.creations - c.dim_B,
                     "trial " + std::to_string(trial) + " level " + std::to_string(n));
        }
    }
    return o;
}

/// Degree-d monomials in `n` variables whose support is not a face. Faces are
/// the empty set, singletons and subsets of an input face (positions 0..n-1).
std::uint64_t count_nonface_monomials(std::size_t n, int d, const std::vector<std::uint32_t>& faces)
{
    std::uint64_t count = 0;
    oracle::for_each_monomial(n, d, [&](const oracle::Exponents& e) {
        std::uint32_t support = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0)
                support |= 1u << i;
        bool face = __builtin_popcount(support) <= 1;
        for (std::uint32_t f : faces)
            face = face || (support & ~f) == 0;
        if (!face)
            ++count;
    });
    return count;
}

Outcome graded_dim_suite()
{
    Outcome o;
    std::mt19937_64 rng(20240503);
    std::uniform_int_distribution<std::size_t> nv(1, 7), ng(1, 6);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    // 50 monomial ideals, half of them with higher powers
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = nv(rng);
        const int max_exp = trial % 2 == 0 ? 1 : 3;
        std::uniform_int_distribution<int> ex(0, max_exp);
        std::vector<VertexId> vars;
        for (std::size_t i = 0; i < n; ++i)
            vars.push_back(static_cast<VertexId>(i + 1));
        std::vector<Monomial> gens;
        std::vector<oracle::Exponents> raw;
        for (std::size_t g = ng(rng); g > 0; --g) {
            oracle::Exponents e(n);
            std::vector<Monomial::Term> terms;
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = ex(rng);
                if (e[i] > 0)
                    terms.push_back({vars[i], static_cast<std::uint32_t>(e[i])});
            }
            if (terms.empty())
                continue;
            gens.emplace_back(std::move(terms));
            raw.push_back(e);
        }
        const MonomialIdeal ideal(gens, vars);
        for (int d = 0; d <= 5; ++d)
            o.expect(graded_dim(ideal, static_cast<unsigned>(d)) ==
                         oracle::count_in_ideal(n, d, raw),
                     "ideal trial " + std::to_string(trial) + " degree " + std::to_string(d));
    }

    // 50 simplicial filtrations of three levels
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = nv(rng);
        std::vector<VertexId> vars;
        for (std::size_t i = 0; i < n; ++i)
            vars.push_back(static_cast<VertexId>(10 + i));
        std::vector<SimplicialComplex> levels{SimplicialComplex::from_faces(vars, {})};
        std::vector<std::vector<std::uint32_t>> masks{{}};
        std::vector<SimplicialComplex::Face> faces;
        std::vector<std::uint32_t> face_masks;
        for (int level = 1; level <= 3; ++level) {
            for (int k = 0; k < 2; ++k) {
                SimplicialComplex::Face face;
                std::uint32_t mask = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (coin(rng) < 0.45) {
                        face.push_back(vars[i]);
                        mask |= 1u << i;
                    }
                faces.push_back(face);
                face_masks.push_back(mask);
            }
            levels.push_back(SimplicialComplex::from_faces(vars, faces));
            masks.push_back(face_masks);
        }
        const auto table = sr_hilbert_table(levels, 5);
        for (std::size_t level = 0; level < levels.size(); ++level)
            for (int d = 0; d <= 5; ++d)
                o.expect(table.cells[level][static_cast<std::size_t>(d)] ==
                             count_nonface_monomials(n, d, masks[level]),
                         "complex trial " + std::to_string(trial) + " level " +
                             std::to_string(level) + " degree " + std::to_string(d));
    }
    return o;
}

Outcome flag_identity_suite()
{
    Outcome o;
    std::mt19937_64 rng(20240504);
    std::uniform_int_distribution<std::size_t> nv(1, 12);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = nv(rng);
        const double density = coin(rng);
        LevelGraph g;
        for (std::size_t i = 0; i < n; ++i)
            g.vertices.push_back(static_cast<VertexId>(3 * i + 2));
        std::vector<SimplicialComplex::Face> nonedges;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                if (coin(rng) < density)
                    g.edges.emplace_back(g.vertices[a], g.vertices[b]);
                else
                    nonedges.push_back({g.vertices[a], g.vertices[b]});
            }
        auto found = minimal_nonfaces(clique_complex(g));
        std::sort(found.begin(), found.end());
        o.expect(found == nonedges, "graph trial " + std::to_string(trial));
    }
    return o;
}

Outcome closure_suite()
{
    Outcome o;
    for (const auto& f : {example_one(), example_two(), example_three()}) {
        const auto samples = exhaustive_closure_samples(f);
        o.expect(!samples.empty() && check_multiplicative_closure(f, samples),
                 "multiplicative closure");
        const auto complexes = clique_filtration(f);
        const auto bigraded = exhaustive_bigraded_samples(complexes);
        o.expect(!bigraded.empty() && check_bigraded_closure(complexes, bigraded),
                 "bigraded closure");
    }
    return o;
}

Outcome collapse_suite()
{
    Outcome o;
    std::mt19937_64 rng(20240505);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = testing::random_filtration(rng, VertexMode::full);
        std::set<Monomial> aggregated;
        for (std::size_t n = 1; n <= f.num_levels(); ++n)
            for (const Edge& e : f.new_edges(n))
                aggregated.insert(Monomial::product(e.source, e.target));
        const auto collapsed = temporal_collapse(f);
        o.expect(std::vector<Monomial>(aggregated.begin(), aggregated.end()) ==
                     collapsed.generators(),
                 "collapse trial " + std::to_string(trial));

        const auto phi = testing::random_morphism(rng, f);
        o.expect(check_morphism(f, phi.target, phi.map).empty(),
                 "generated map is not a morphism");
        const FilteredMorphism morphism(f, phi.target, phi.map);
        o.expect(verify_naturality(morphism).holds, "naturality trial " + std::to_string(trial));
        o.expect(induced_image_check(morphism).holds, "image trial " + std::to_string(trial));
    }
    return o;
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds = 0.0;  // 0 means no time limit
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"Example I: beta0 (2,1), one bridge, generator sets", example_one_check, 1.0},
        {"Example II: closing edge is a cycle", example_two_check},
        {"Example III: two bridges, beta0 3 -> 1", example_three_check},
        {"Lattice: one bridge at t3, beta0 2 -> 1", lattice_check},
        {"Bridge theorem, 200 full-mode filtrations vs BFS", theorem_suite, 10.0},
        {"Incident-mode ledger, 200 filtrations vs BFS", ledger_suite},
        {"Graded dimensions vs enumeration, 100 ideals/complexes", graded_dim_suite, 30.0},
        {"Flag complex non-faces are non-edges, 100 graphs", flag_identity_suite},
        {"Multiplicative and bigraded closure, Examples I-III", closure_suite},
        {"Temporal collapse and naturality, 50 filtrations", collapse_suite},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds)
            outcome.expect(false, "took " + std::to_string(seconds) + " s");
        if (!outcome.pass)
            ++failures;
        std::printf("%s  %2zu  %-56s %8.3f s%s%s\n", outcome.pass ? "PASS" : "FAIL", i + 1, c.name,
                    seconds, outcome.pass ? "" : "  ", outcome.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
