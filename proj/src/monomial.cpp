#include "cera/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "cera/kernels.hpp"

namespace cera {

BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end());
    for (const auto& [v, e] : terms) {
        if (e == 0)
            continue;
        if (!terms_.empty() && terms_.back().first == v)
            terms_.back().second += e;
        else
            terms_.emplace_back(v, e);
        degree_ += e;
    }
}

Monomial Monomial::from_support(std::span<const VertexId> vertices)
{
    std::vector<Term> terms;
    for (VertexId v : vertices)
        terms.emplace_back(v, 1);
    return Monomial(std::move(terms));
}

std::uint32_t Monomial::exponent(VertexId v) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{v, 0});
    return it != terms_.end() && it->first == v ? it->second : 0;
}

bool Monomial::is_squarefree() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
}

std::vector<VertexId> Monomial::support() const
{
    std::vector<VertexId> out;
    for (const auto& t : terms_)
        out.push_back(t.first);
    return out;
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_)
        return false;
    auto it = other.terms_.begin();
    for (const auto& [v, e] : terms_) {
        while (it != other.terms_.end() && it->first < v)
            ++it;
        if (it == other.terms_.end() || it->first != v || it->second < e)
            return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    std::map<VertexId, std::uint32_t> merged;
    for (const auto& [v, e] : terms_)
        merged[v] = e;
    for (const auto& [v, e] : other.terms_)
        merged[v] = std::max(merged[v], e);
    return Monomial(std::vector<Term>(merged.begin(), merged.end()));
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    std::vector<Monomial::Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return Monomial(std::move(terms));
}

std::string Monomial::to_string() const
{
    if (terms_.empty())
        return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0)
            out << '*';
        out << 'x' << terms_[i].first;
        if (terms_[i].second > 1)
            out << '^' << terms_[i].second;
    }
    return out.str();
}

Monomial Monomial::parse(std::string_view text)
{
    auto fail = [&] { return InputError("malformed monomial '" + std::string(text) + "'"); };
    if (text == "1")
        return Monomial();
    if (text.empty() || text.back() == '*')
        throw fail();
    std::vector<Term> terms;
    while (!text.empty()) {
        const auto star = text.find('*');
        std::string_view factor = text.substr(0, star);
        text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
        if (factor.size() < 2 || factor.front() != 'x')
            throw fail();
        factor.remove_prefix(1);
        std::uint32_t exp = 1;
        const auto caret = factor.find('^');
        std::string_view var = factor.substr(0, caret);
        if (caret != std::string_view::npos) {
            std::string_view e = factor.substr(caret + 1);
            auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
            if (ec != std::errc{} || p != e.data() + e.size())
                throw fail();
        }
        VertexId v = 0;
        auto [p, ec] = std::from_chars(var.data(), var.data() + var.size(), v);
        if (ec != std::errc{} || p != var.data() + var.size())
            throw fail();
        terms.emplace_back(v, exp);
    }
    return Monomial(std::move(terms));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree_ <=> b.degree_; c != 0)
        return c;
    return a.terms_ <=> b.terms_;
}

// --- MonomialIdeal ----------------------------------------------------------

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators, std::vector<VertexId> ambient_vars)
    : generators_(std::move(generators)), ambient_(std::move(ambient_vars))
{
    std::sort(ambient_.begin(), ambient_.end());
    ambient_.erase(std::unique(ambient_.begin(), ambient_.end()), ambient_.end());
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    for (const auto& g : generators_) {
        for (const auto& [v, e] : g.terms()) {
            if (!std::binary_search(ambient_.begin(), ambient_.end(), v)) {
                std::ostringstream msg;
                msg << "generator " << g.to_string() << " uses x" << v
                    << " outside the ambient variables";
                throw InputError(msg.str());
            }
        }
    }
}

bool MonomialIdeal::is_squarefree() const
{
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Monomial& m) { return m.is_squarefree(); });
}

bool contains(const MonomialIdeal& ideal, const Monomial& m)
{
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> minimal_generators(const MonomialIdeal& ideal)
{
    // generators are sorted by degree, so a divisor always precedes its multiples
    std::vector<Monomial> kept;
    for (const auto& g : ideal.generators()) {
        const bool redundant = std::any_of(kept.begin(), kept.end(),
                                           [&](const Monomial& k) { return k.divides(g); });
        if (!redundant)
            kept.push_back(g);
    }
    return kept;
}

BigInt monomial_count(std::size_t n, unsigned d)
{
    if (n == 0)
        return d == 0 ? 1 : 0;
    return binomial(static_cast<long long>(n + d) - 1, d);
}

namespace {

/// Hilbert function of the Stanley-Reisner quotient whose faces are counted by
/// `faces` (faces[i] = number of faces with i vertices).
BigInt face_hilbert(const std::vector<std::uint64_t>& faces, unsigned d)
{
    if (d == 0)
        return faces.empty() ? BigInt(0) : BigInt(faces[0]);
    BigInt sum = 0;
    for (std::size_t i = 1; i < faces.size(); ++i)
        sum += BigInt(faces[i]) * binomial(static_cast<long long>(d) - 1,
                                           static_cast<long long>(i) - 1);
    return sum;
}

std::vector<std::uint64_t> free_face_counts(const MonomialIdeal& ideal, Execution exec)
{
    const auto& vars = ideal.ambient_vars();
    std::vector<kernels::Bitset> forbidden;
    for (const auto& g : minimal_generators(ideal)) {
        kernels::Bitset s(vars.size());
        for (const auto& [v, e] : g.terms())
            s.set(static_cast<std::size_t>(
                std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
        forbidden.push_back(std::move(s));
    }
    return exec == Execution::serial ? kernels::free_set_counts_serial(vars.size(), forbidden)
                                     : kernels::free_set_counts_parallel(vars.size(), forbidden);
}

void enumerate_monomials(const MonomialIdeal& ideal, std::vector<Monomial::Term>& terms,
                         std::size_t var, unsigned remaining, BigInt& count)
{
    const auto& vars = ideal.ambient_vars();
    if (var + 1 == vars.size()) {
        terms.emplace_back(vars[var], remaining);
        if (contains(ideal, Monomial(terms)))
            ++count;
        terms.pop_back();
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        terms.emplace_back(vars[var], e);
        enumerate_monomials(ideal, terms, var + 1, remaining - e, count);
        terms.pop_back();
    }
}

constexpr std::size_t kInclusionExclusionLimit = 20;

}  // namespace

BigInt graded_dim(const MonomialIdeal& ideal, unsigned d, Execution exec)
{
    const std::size_t n = ideal.ambient_vars().size();
    if (ideal.is_zero())
        return 0;
    if (ideal.is_squarefree())
        return monomial_count(n, d) - face_hilbert(free_face_counts(ideal, exec), d);

    const auto gens = minimal_generators(ideal);
    if (gens.size() > kInclusionExclusionLimit)
        return graded_dim_bruteforce(ideal, d);
    // |union of multiples of g_i in degree d| by inclusion-exclusion over lcms
    BigInt total = 0;
    const std::uint64_t subsets = std::uint64_t{1} << gens.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        Monomial l;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask & (std::uint64_t{1} << i))
                l = l.lcm(gens[i]);
        if (l.degree() > d)
            continue;
        const BigInt term = monomial_count(n, static_cast<unsigned>(d - l.degree()));
        if (std::popcount(mask) % 2 == 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

BigInt graded_dim_bruteforce(const MonomialIdeal& ideal, unsigned d)
{
    BigInt count = 0;
    if (ideal.ambient_vars().empty()) {
        if (d == 0 && contains(ideal, Monomial()))
            count = 1;
        return count;
    }
    std::vector<Monomial::Term> terms;
    enumerate_monomials(ideal, terms, 0, d, count);
    return count;
}

// --- Filtration-level algebra -----------------------------------------------

MonomialIdeal edge_ideal(const Filtration& filtration, std::size_t n)
{
    std::vector<Monomial> gens;
    for (const Edge& e : filtration.edges(n))
        gens.push_back(Monomial::from_edge(UndirectedEdge(e)));
    return MonomialIdeal(std::move(gens), filtration.vertices());
}

std::vector<Monomial> quotient_new_generators(const Filtration& filtration, std::size_t n)
{
    if (n == 0)
        throw std::out_of_range("quotient generators are defined for levels n >= 1");
    if (n > filtration.num_levels())
        return {};
    const MonomialIdeal previous = edge_ideal(filtration, n - 1);
    std::vector<Monomial> out;
    for (const Edge& e : level_diff(filtration, n)) {
        Monomial m = Monomial::from_edge(UndirectedEdge(e));
        if (contains(previous, m))
            throw InvariantViolation("new generator " + m.to_string() +
                                     " already lies in the previous edge ideal");
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Monomial> CeraGeneratorTable::at(std::size_t level, GeneratorStatus status) const
{
    std::vector<Monomial> out;
    for (const auto& r : rows)
        if (r.level == level && r.status == status)
            out.push_back(r.monomial);
    return out;
}

CeraGeneratorTable cera_table(const Filtration& filtration)
{
    CeraGeneratorTable table;
    for (std::size_t n = 1; n <= filtration.num_levels(); ++n) {
        for (auto& m : minimal_generators(edge_ideal(filtration, n - 1)))
            table.rows.push_back({n, std::move(m), GeneratorStatus::inherited});
        for (auto& m : quotient_new_generators(filtration, n))
            table.rows.push_back({n, std::move(m), GeneratorStatus::fresh});
    }
    return table;
}

GradedDimTable hilbert_table(const Filtration& filtration, unsigned d_max, Execution exec)
{
    const auto k = static_cast<std::ptrdiff_t>(filtration.num_levels());
    GradedDimTable table;
    table.cells.assign(static_cast<std::size_t>(k) + 1, std::vector<BigInt>(d_max + 1));

    auto fill_row = [&](std::ptrdiff_t n) {
        const MonomialIdeal ideal = edge_ideal(filtration, static_cast<std::size_t>(n));
        auto& row = table.cells[static_cast<std::size_t>(n)];
        if (ideal.is_zero())
            return;  // cells stay 0
        const auto faces = free_face_counts(ideal, Execution::serial);
        const std::size_t vars = ideal.ambient_vars().size();
        for (unsigned d = 0; d <= d_max; ++d)
            row[d] = monomial_count(vars, d) - face_hilbert(faces, d);
    };

    if (exec == Execution::serial) {
        for (std::ptrdiff_t n = 0; n <= k; ++n)
            fill_row(n);
    } else {
        #pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t n = 0; n <= k; ++n)
            fill_row(n);
    }
    return table;
}

GradedDimTable hilbert_table_bruteforce(const Filtration& filtration, unsigned d_max)
{
    GradedDimTable table;
    for (std::size_t n = 0; n <= filtration.num_levels(); ++n) {
        const MonomialIdeal ideal = edge_ideal(filtration, n);
        auto& row = table.cells.emplace_back();
        for (unsigned d = 0; d <= d_max; ++d)
            row.push_back(graded_dim_bruteforce(ideal, d));
    }
    return table;
}

std::vector<ClosureSample> exhaustive_closure_samples(const Filtration& filtration)
{
    const std::size_t k = filtration.num_levels();
    std::vector<std::vector<Monomial>> gens(k + 1);
    for (std::size_t n = 1; n <= k; ++n)
        gens[n] = edge_ideal(filtration, n).generators();
    std::vector<ClosureSample> out;
    for (std::size_t a = 1; a <= k; ++a)
        for (const auto& f : gens[a])
            for (std::size_t b = 1; b <= k; ++b)
                for (const auto& g : gens[b])
                    out.push_back({f, a, g, b});
    return out;
}

bool check_multiplicative_closure(const Filtration& filtration,
                                  std::span<const ClosureSample> samples)
{
    const std::size_t k = filtration.num_levels();
    std::vector<MonomialIdeal> ideals;
    for (std::size_t n = 0; n <= k; ++n)
        ideals.push_back(edge_ideal(filtration, n));
    auto level = [&](std::size_t n) -> const MonomialIdeal& { return ideals[std::min(n, k)]; };

    for (const auto& s : samples) {
        if (!s.f.is_unit() && !contains(level(s.a), s.f))
            throw InputError(s.f.to_string() + " is not in the edge ideal of its level");
        if (!s.g.is_unit() && !contains(level(s.b), s.g))
            throw InputError(s.g.to_string() + " is not in the edge ideal of its level");
        if (!contains(level(s.a + s.b), s.f * s.g))
            return false;
    }
    return true;
}

}  // namespace cera
