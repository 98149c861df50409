#include <random>

#include "cera/monomial.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cera;
using testing::example_one;
using testing::example_three;
using testing::example_two;

namespace {

Monomial m(std::string_view text) { return Monomial::parse(text); }

std::vector<oracle::Exponents> exponents_of(const MonomialIdeal& ideal)
{
    const auto& vars = ideal.ambient_vars();
    std::vector<oracle::Exponents> out;
    for (const auto& g : ideal.generators()) {
        oracle::Exponents e(vars.size(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i)
            e[i] = static_cast<int>(g.exponent(vars[i]));
        out.push_back(e);
    }
    return out;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_gens,
                           int max_exp)
{
    std::uniform_int_distribution<std::size_t> nv(1, max_vars), ng(1, max_gens);
    std::uniform_int_distribution<int> ex(0, max_exp);
    const std::size_t n = nv(rng);
    std::vector<VertexId> vars;
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back(static_cast<VertexId>(3 * i + 1));
    std::vector<Monomial> gens;
    const std::size_t count = ng(rng);
    while (gens.size() < count) {
        std::vector<Monomial::Term> terms;
        for (VertexId v : vars)
            if (int e = ex(rng); e > 0)
                terms.push_back({v, static_cast<std::uint32_t>(e)});
        if (!terms.empty())
            gens.emplace_back(std::move(terms));
    }
    return MonomialIdeal(std::move(gens), vars);
}

}  // namespace

TEST_CASE("monomial arithmetic and text form")
{
    const Monomial a = m("x1*x2");
    const Monomial b = m("x2^2*x5");
    CHECK(a.degree() == 2);
    CHECK((a * b).to_string() == "x1*x2^3*x5");
    CHECK(a.lcm(b) == m("x1*x2^2*x5"));
    CHECK(a.divides(m("x1*x2*x3")));
    CHECK_FALSE(a.divides(b));
    CHECK(a.is_squarefree());
    CHECK_FALSE(b.is_squarefree());
    CHECK(Monomial{}.is_unit());
    CHECK(Monomial{}.to_string() == "1");
    CHECK(Monomial::parse("1").is_unit());
    CHECK(Monomial::from_edge(UndirectedEdge(4, 2)) == m("x2*x4"));
    CHECK(m("x4^2").exponent(4) == 2);
    CHECK(m("x3") < m("x1*x2"));
    CHECK_THROWS_AS(Monomial::parse("y1"), InputError);
    CHECK_THROWS_AS(Monomial::parse("x1*"), InputError);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto ideal = random_ideal(rng, 5, 3, 3);
        for (const auto& g : ideal.generators())
            CHECK(Monomial::parse(g.to_string()) == g);
    }
}

TEST_CASE("ideal membership and minimal generators")
{
    const MonomialIdeal i1({m("x1*x2"), m("x3*x4")}, {1, 2, 3, 4});
    CHECK_FALSE(contains(i1, m("x2*x3")));
    CHECK(contains(i1, m("x1^2*x2")));
    CHECK(contains(i1, m("x2*x3*x4")));
    CHECK_FALSE(contains(MonomialIdeal({}, {1, 2}), m("x1")));

    const MonomialIdeal redundant({m("x1*x2"), m("x1^2*x2"), m("x3"), m("x3*x4")}, {1, 2, 3, 4});
    CHECK(minimal_generators(redundant) == std::vector<Monomial>{m("x3"), m("x1*x2")});

    CHECK_THROWS_AS(MonomialIdeal({m("x9")}, {1, 2}), InputError);
}

TEST_CASE("graded dimensions of the worked ideals")
{
    CHECK(monomial_count(4, 2) == 10);
    CHECK(monomial_count(0, 0) == 1);
    CHECK(monomial_count(0, 3) == 0);

    const auto i1 = edge_ideal(example_one(), 1);
    const auto i2 = edge_ideal(example_one(), 2);
    CHECK(i1.generators() == std::vector<Monomial>{m("x1*x2"), m("x3*x4")});
    CHECK(graded_dim(i1, 2) == 2);
    CHECK(graded_dim(i2, 2) == 3);
    CHECK(graded_dim(i1, 0) == 0);
    CHECK(graded_dim(i1, 1) == 0);
    CHECK(graded_dim(i1, 3) == 8);
    CHECK(graded_dim(i2, 3) == 10);
    CHECK(graded_dim(MonomialIdeal({Monomial{}}, {1, 2}), 3) == 4);
    CHECK(edge_ideal(example_one(), 0).is_zero());
    CHECK(edge_ideal(example_one(), 0).ambient_vars() == std::vector<VertexId>{1, 2, 3, 4});
}

TEST_CASE("quotient generators and the generator table")
{
    CHECK(quotient_new_generators(example_one(), 1) == std::vector<Monomial>{m("x1*x2"), m("x3*x4")});
    CHECK(quotient_new_generators(example_one(), 2) == std::vector<Monomial>{m("x2*x3")});
    CHECK(quotient_new_generators(example_one(), 3).empty());
    CHECK_THROWS_AS(quotient_new_generators(example_one(), 0), std::out_of_range);

    const auto t1 = cera_table(example_one());
    CHECK(t1.at(1, GeneratorStatus::fresh) == std::vector<Monomial>{m("x1*x2"), m("x3*x4")});
    CHECK(t1.at(1, GeneratorStatus::inherited).empty());
    CHECK(t1.at(2, GeneratorStatus::fresh) == std::vector<Monomial>{m("x2*x3")});
    CHECK(t1.at(2, GeneratorStatus::inherited) == std::vector<Monomial>{m("x1*x2"), m("x3*x4")});

    const auto t2 = cera_table(example_two());
    CHECK(t2.at(2, GeneratorStatus::fresh) == std::vector<Monomial>{m("x1*x4")});
    CHECK(t2.at(2, GeneratorStatus::inherited).size() == 3);

    const auto t3 = cera_table(example_three());
    CHECK(t3.at(2, GeneratorStatus::fresh) == std::vector<Monomial>{m("x2*x3"), m("x4*x5")});
}

TEST_CASE("edge-ideal Hilbert table")
{
    const auto table = hilbert_table(example_one(), 3);
    REQUIRE(table.rows() == 3);
    REQUIRE(table.cols() == 4);
    const std::vector<std::vector<BigInt>> expected{{0, 0, 0, 0}, {0, 0, 2, 8}, {0, 0, 3, 10}};
    CHECK(table.cells == expected);
    CHECK(hilbert_table(example_one(), 3, Execution::serial).cells == expected);
    CHECK(hilbert_table_bruteforce(example_one(), 3).cells == expected);
}

TEST_CASE("random ideals: inclusion-exclusion against enumeration")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const bool squarefree = trial % 2 == 0;
        const auto ideal = random_ideal(rng, 7, 6, squarefree ? 1 : 3);
        const auto gens = exponents_of(ideal);
        for (unsigned d = 0; d <= 5; ++d) {
            const auto expected = oracle::count_in_ideal(ideal.ambient_vars().size(),
                                                         static_cast<int>(d), gens);
            CHECK(graded_dim(ideal, d) == expected);
            CHECK(graded_dim(ideal, d, Execution::parallel) == expected);
            CHECK(graded_dim_bruteforce(ideal, d) == expected);
        }
    }
}

TEST_CASE("many non-squarefree generators fall back correctly")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto ideal = random_ideal(rng, 4, 40, 3);
        const auto gens = exponents_of(ideal);
        for (unsigned d = 0; d <= 5; ++d)
            CHECK(graded_dim(ideal, d) ==
                  oracle::count_in_ideal(ideal.ambient_vars().size(), static_cast<int>(d), gens));
    }
}

TEST_CASE("random filtrations: table structure")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const auto f = testing::random_filtration(rng, VertexMode::full, 8, 5);
        const unsigned d_max = 4;
        const auto table = hilbert_table(f, d_max);
        CHECK(table.cells == hilbert_table_bruteforce(f, d_max).cells);
        CHECK(table.cells == hilbert_table(f, d_max, Execution::serial).cells);
        for (std::size_t n = 1; n <= f.num_levels(); ++n) {
            const auto fresh = quotient_new_generators(f, n);
            CHECK(table.cells[n][2] - table.cells[n - 1][2] == fresh.size());
            for (unsigned d = 0; d <= d_max; ++d)
                CHECK(table.cells[n][d] >= table.cells[n - 1][d]);
            if (fresh.empty())
                CHECK(table.cells[n] == table.cells[n - 1]);
        }
        CHECK(table.cells[0] == std::vector<BigInt>(d_max + 1, 0));
    }
}

TEST_CASE("multiplicative closure across levels")
{
    for (const auto& f : {example_one(), example_two(), example_three(),
                          testing::lattice_levels()}) {
        const auto samples = exhaustive_closure_samples(f);
        CHECK_FALSE(samples.empty());
        CHECK(check_multiplicative_closure(f, samples));
    }

    // x2*x3 only enters at level 2
    const std::vector<ClosureSample> bad{{m("x2*x3"), 1, m("x1*x2"), 1}};
    CHECK_THROWS_AS(check_multiplicative_closure(example_one(), bad), InputError);
    const std::vector<ClosureSample> unit{{Monomial{}, 1, m("x1*x2"), 1}};
    CHECK(check_multiplicative_closure(example_one(), unit));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = testing::random_filtration(rng, VertexMode::full, 7, 4);
        CHECK(check_multiplicative_closure(f, exhaustive_closure_samples(f)));
    }
}
