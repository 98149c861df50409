#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cera/filtration.hpp"

namespace cera {

/// Sparse monomial prod x_v^{a_v}; the empty product is the unit 1.
class Monomial {
public:
    using Term = std::pair<VertexId, std::uint32_t>;

    Monomial() = default;
    /// Zero exponents are dropped; repeated variables are summed.
    explicit Monomial(std::vector<Term> terms);

    static Monomial variable(VertexId v) { return Monomial({{v, 1}}); }
    /// x_u * x_v (x_u^2 when u == v).
    static Monomial product(VertexId u, VertexId v) { return Monomial({{u, 1}, {v, 1}}); }
    static Monomial from_edge(const UndirectedEdge& e) { return product(e.lo, e.hi); }
    static Monomial from_support(std::span<const VertexId> vertices);

    /// Sorted by variable, all exponents positive.
    const std::vector<Term>& terms() const { return terms_; }
    std::uint32_t exponent(VertexId v) const;
    unsigned long long degree() const { return degree_; }
    bool is_unit() const { return terms_.empty(); }
    bool is_squarefree() const;
    std::vector<VertexId> support() const;

    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// "1", "x3", "x1*x2", "x4^2".
    std::string to_string() const;
    /// Inverse of to_string(); throws InputError on malformed text.
    static Monomial parse(std::string_view text);

    /// Degree first, then lexicographic on terms.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<Term> terms_;
    unsigned long long degree_ = 0;
};

/// Monomial ideal in k[x_v : v in ambient_vars].
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Generators are sorted and deduplicated (not minimized). Throws
    /// InputError when a generator uses a variable outside `ambient_vars`.
    MonomialIdeal(std::vector<Monomial> generators, std::vector<VertexId> ambient_vars);

    const std::vector<Monomial>& generators() const { return generators_; }
    const std::vector<VertexId>& ambient_vars() const { return ambient_; }
    bool is_zero() const { return generators_.empty(); }
    bool is_squarefree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<Monomial> generators_;
    std::vector<VertexId> ambient_;
};

/// True iff some generator divides m.
bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// Generators not divisible by any other generator.
std::vector<Monomial> minimal_generators(const MonomialIdeal& ideal);

/// Number of monomials of degree d in n variables, C(n+d-1, d).
BigInt monomial_count(std::size_t n, unsigned d);

/// dim_k (ideal)_d. Squarefree ideals go through the f-vector of the complex
/// of sets avoiding every generator support; other ideals use
/// inclusion-exclusion over generator lcms (or enumeration for large
/// generator sets).
BigInt graded_dim(const MonomialIdeal& ideal, unsigned d, Execution exec = Execution::serial);

/// Counts degree-d monomials in the ideal by enumerating all of them.
BigInt graded_dim_bruteforce(const MonomialIdeal& ideal, unsigned d);

/// Monomials x_u x_v over the undirected edges of G_n^*, in k[x_v : v in V].
/// Levels past k give I_k.
MonomialIdeal edge_ideal(const Filtration& filtration, std::size_t n);

/// Generators of I_n / I_{n-1}: monomials of edges first appearing at level n.
/// Empty for n > k. Throws InvariantViolation if one of them already lies in
/// I_{n-1}.
std::vector<Monomial> quotient_new_generators(const Filtration& filtration, std::size_t n);

enum class GeneratorStatus { fresh, inherited };

struct CeraTableRow {
    std::size_t level = 0;
    Monomial monomial;
    GeneratorStatus status = GeneratorStatus::fresh;
};

/// Per level: new generators of I_n plus the inherited minimal generators of I_{n-1}.
struct CeraGeneratorTable {
    std::vector<CeraTableRow> rows;

    std::vector<Monomial> at(std::size_t level, GeneratorStatus status) const;
};

CeraGeneratorTable cera_table(const Filtration& filtration);

/// cells[n][d] for 0 <= n <= k and 0 <= d <= d_max.
struct GradedDimTable {
    std::vector<std::vector<BigInt>> cells;

    std::size_t rows() const { return cells.size(); }
    std::size_t cols() const { return cells.empty() ? 0 : cells.front().size(); }
};

/// H(n, d) = dim_k (I_n)_d for the edge ideals of the filtration.
GradedDimTable hilbert_table(const Filtration& filtration, unsigned d_max,
                             Execution exec = Execution::parallel);

/// Same table filled by brute-force enumeration.
GradedDimTable hilbert_table_bruteforce(const Filtration& filtration, unsigned d_max);

/// f in I_a and g in I_b, to be tested for f*g in I_{min(a+b, k)}.
struct ClosureSample {
    Monomial f;
    std::size_t a = 0;
    Monomial g;
    std::size_t b = 0;
};

/// Every ordered pair of generators (f at level a, g at level b), 1 <= a, b <= k,
/// where a generator is listed at each level containing it.
std::vector<ClosureSample> exhaustive_closure_samples(const Filtration& filtration);

/// True iff every sampled product lands in I_{min(a+b, k)}. Throws InputError
/// if a sample factor is not in its claimed level (the unit is exempt).
bool check_multiplicative_closure(const Filtration& filtration,
                                  std::span<const ClosureSample> samples);

}  // namespace cera
