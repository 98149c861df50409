#pragma once

#include <string_view>
#include <vector>

#include "cera/filtration.hpp"

namespace cera {

/// How a new edge at level n relates to the components of G_{n-1}^*.
enum class EdgeClass {
    bridge,     // joins two existing components
    cycle,      // both endpoints already in one component
    expansion,  // exactly one endpoint is new (incident mode only)
    creation,   // both endpoints are new (incident mode only)
};

std::string_view to_string(EdgeClass c);
EdgeClass parse_edge_class(std::string_view name);

/// Processing order for the edges of one level.
enum class OrderPolicy { lex, input };

std::string_view to_string(OrderPolicy p);
OrderPolicy parse_order_policy(std::string_view name);

struct ClassifiedEdge {
    Edge edge;
    EdgeClass cls = EdgeClass::cycle;
};

struct LevelClassification {
    std::size_t level = 0;
    std::vector<ClassifiedEdge> classified;  // in processing order
    long long dim_B = 0;
    long long dim_C = 0;
    long long dim_R = 0;  // expansions + creations
    long long expansions = 0;
    long long creations = 0;
    long long beta0_before = 0;
    long long beta0_after = 0;

    std::vector<Edge> bridges() const;
};

/// Number of connected components of G_n^* under the filtration's vertex mode.
long long beta0(const Filtration& filtration, std::size_t n);

/// Classifies E_n \ E_{n-1} by sequential union-find replay seeded with
/// G_{n-1}^*. Only the first of several edges joining the same pair of
/// components is a bridge; later ones are cycles.
LevelClassification classify_level_edges(const Filtration& filtration, std::size_t n,
                                         OrderPolicy order = OrderPolicy::lex);

/// All levels in one cumulative replay; element n-1 describes level n.
std::vector<LevelClassification> classify_all_levels(const Filtration& filtration,
                                                     OrderPolicy order = OrderPolicy::lex);

/// Coefficients c_1..c_k of P(t) = sum_n dim(B_n) t^n.
struct BridgePolynomial {
    std::vector<long long> coefficients;
};

BridgePolynomial bridge_polynomial(const Filtration& filtration,
                                   OrderPolicy order = OrderPolicy::lex);

struct TheoremCheck {
    std::size_t level = 0;
    long long dim_B = 0;
    long long beta0_drop = 0;   // beta0(n-1) - beta0(n)
    bool holds = false;
    long long discrepancy = 0;  // dim_B - beta0_drop
};

/// Compares dim B_n with the component-count drop, where the component counts
/// come from beta0() rather than the classification replay.
std::vector<TheoremCheck> verify_bridge_theorem(const Filtration& filtration,
                                                OrderPolicy order = OrderPolicy::lex);

}  // namespace cera
