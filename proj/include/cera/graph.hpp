#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "cera/types.hpp"

namespace cera {

/// A vertex with spatial coordinates and an occurrence time.
struct Event {
    VertexId id = 0;
    std::vector<double> coords;
    double tau = 0.0;
};

enum class Metric { euclidean, manhattan, chebyshev };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view name);

struct AdmissibilityParams {
    double delta = 1.0;    // max time gap
    double epsilon = 1.0;  // max spatial distance
    Metric metric = Metric::euclidean;

    /// Throws InputError unless delta > 0 and epsilon > 0.
    void validate() const;
};

double distance(std::span<const double> a, std::span<const double> b, Metric metric);

/// Directed graph over timestamped events.
///
/// Construction enforces unique vertex ids, a shared coordinate dimension,
/// finite times, no self-loops and no duplicate directed pairs. Endpoint
/// existence and the causal ordering are checked by validate_causal().
class CausalGraph {
public:
    CausalGraph() = default;
    CausalGraph(std::vector<Event> events, std::vector<Edge> edges);

    const std::map<VertexId, Event>& events() const { return events_; }
    /// Sorted lexicographically by (source, target).
    const std::vector<Edge>& edges() const { return edges_; }

    const Event& event(VertexId v) const;
    bool has_vertex(VertexId v) const { return events_.contains(v); }
    std::size_t dimension() const { return dimension_; }

    /// Sorted vertex ids.
    std::vector<VertexId> vertices() const;

private:
    std::map<VertexId, Event> events_;
    std::vector<Edge> edges_;
    std::size_t dimension_ = 0;
};

/// Edges violating tau(source) < tau(target). Throws StructuralError when an
/// endpoint has no event.
std::vector<Edge> validate_causal(const CausalGraph& graph);

bool admissible(const Event& u, const Event& v, const AdmissibilityParams& params);

/// Graph whose edge set is exactly the admissible ordered pairs of `events`.
CausalGraph build_causal_graph(std::vector<Event> events, const AdmissibilityParams& params,
                               Execution exec = Execution::parallel);

}  // namespace cera
