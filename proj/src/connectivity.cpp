#include "cera/connectivity.hpp"

#include <algorithm>
#include <sstream>

#include "cera/union_find.hpp"

namespace cera {

std::string_view to_string(EdgeClass c)
{
    switch (c) {
    case EdgeClass::bridge: return "bridge";
    case EdgeClass::cycle: return "cycle";
    case EdgeClass::expansion: return "expansion";
    case EdgeClass::creation: return "creation";
    }
    return "cycle";
}

EdgeClass parse_edge_class(std::string_view name)
{
    if (name == "bridge") return EdgeClass::bridge;
    if (name == "cycle") return EdgeClass::cycle;
    if (name == "expansion") return EdgeClass::expansion;
    if (name == "creation") return EdgeClass::creation;
    throw InputError("unknown edge class '" + std::string(name) + "'");
}

std::string_view to_string(OrderPolicy p)
{
    return p == OrderPolicy::lex ? "lex" : "input";
}

OrderPolicy parse_order_policy(std::string_view name)
{
    if (name == "lex") return OrderPolicy::lex;
    if (name == "input" || name == "input-order") return OrderPolicy::input;
    throw InputError("unknown order policy '" + std::string(name) + "'");
}

std::vector<Edge> LevelClassification::bridges() const
{
    std::vector<Edge> out;
    for (const auto& c : classified)
        if (c.cls == EdgeClass::bridge)
            out.push_back(c.edge);
    return out;
}

namespace {

class ComponentReplay {
public:
    explicit ComponentReplay(const Filtration& f)
        : vertices_(f.vertices()), mode_(f.mode()),
          forest_(vertices_.size(), f.mode() == VertexMode::full)
    {}

    long long components() const { return static_cast<long long>(forest_.set_count()); }

    EdgeClass add(const Edge& e)
    {
        const std::size_t a = index(e.source);
        const std::size_t b = index(e.target);
        const bool new_a = forest_.activate(a);
        const bool new_b = forest_.activate(b);
        const bool merged = forest_.unite(a, b);
        if (new_a && new_b)
            return EdgeClass::creation;
        if (new_a || new_b)
            return EdgeClass::expansion;
        return merged ? EdgeClass::bridge : EdgeClass::cycle;
    }

    LevelClassification process_level(const Filtration& f, std::size_t n, OrderPolicy order)
    {
        LevelClassification out;
        out.level = n;
        out.beta0_before = components();

        std::vector<Edge> pending = f.new_edges(n);
        if (order == OrderPolicy::lex) {
            std::sort(pending.begin(), pending.end(), [](const Edge& x, const Edge& y) {
                const UndirectedEdge ux(x), uy(y);
                return ux != uy ? ux < uy : x < y;
            });
        }
        for (const Edge& e : pending) {
            const EdgeClass cls = add(e);
            out.classified.push_back({e, cls});
            switch (cls) {
            case EdgeClass::bridge: ++out.dim_B; break;
            case EdgeClass::cycle: ++out.dim_C; break;
            case EdgeClass::expansion: ++out.expansions; break;
            case EdgeClass::creation: ++out.creations; break;
            }
        }
        out.dim_R = out.expansions + out.creations;
        out.beta0_after = components();

        const auto total = static_cast<long long>(pending.size());
        if (out.dim_B + out.dim_C + out.dim_R != total)
            throw InvariantViolation("edge classes do not partition the level diff");
        if (out.beta0_after != out.beta0_before + out.creations - out.dim_B)
            throw InvariantViolation("component ledger mismatch at a filtration level");
        if (mode_ == VertexMode::full && out.dim_R != 0)
            throw InvariantViolation("expansion or creation edge in full vertex mode");
        return out;
    }

private:
    std::size_t index(VertexId v) const
    {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v) {
            std::ostringstream msg;
            msg << "vertex " << v << " is not in the filtration's vertex set";
            throw InvariantViolation(msg.str());
        }
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    const std::vector<VertexId>& vertices_;
    VertexMode mode_;
    UnionFind forest_;
};

}  // namespace

long long beta0(const Filtration& filtration, std::size_t n)
{
    const LevelGraph g = underlying_undirected(filtration, n);
    UnionFind forest(g.vertices.size());
    auto index = [&](VertexId v) {
        return static_cast<std::size_t>(
            std::lower_bound(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin());
    };
    for (const auto& e : g.edges)
        forest.unite(index(e.lo), index(e.hi));
    return static_cast<long long>(forest.set_count());
}

LevelClassification classify_level_edges(const Filtration& filtration, std::size_t n,
                                         OrderPolicy order)
{
    filtration.new_edges(n);  // range check
    ComponentReplay replay(filtration);
    for (const Edge& e : filtration.edges(n - 1))
        replay.add(e);
    return replay.process_level(filtration, n, order);
}

std::vector<LevelClassification> classify_all_levels(const Filtration& filtration,
                                                     OrderPolicy order)
{
    ComponentReplay replay(filtration);
    std::vector<LevelClassification> out;
    out.reserve(filtration.num_levels());
    for (std::size_t n = 1; n <= filtration.num_levels(); ++n)
        out.push_back(replay.process_level(filtration, n, order));
    return out;
}

BridgePolynomial bridge_polynomial(const Filtration& filtration, OrderPolicy order)
{
    BridgePolynomial p;
    for (const auto& level : classify_all_levels(filtration, order))
        p.coefficients.push_back(level.dim_B);
    return p;
}

std::vector<TheoremCheck> verify_bridge_theorem(const Filtration& filtration, OrderPolicy order)
{
    std::vector<TheoremCheck> out;
    long long previous = beta0(filtration, 0);
    for (const auto& level : classify_all_levels(filtration, order)) {
        const long long current = beta0(filtration, level.level);
        TheoremCheck c;
        c.level = level.level;
        c.dim_B = level.dim_B;
        c.beta0_drop = previous - current;
        c.discrepancy = c.dim_B - c.beta0_drop;
        c.holds = c.discrepancy == 0;
        out.push_back(c);
        previous = current;
    }
    return out;
}

}  // namespace cera
