#include "cera/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cera/kernels.hpp"

namespace cera {

std::string_view to_string(Metric m)
{
    switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::manhattan: return "manhattan";
    case Metric::chebyshev: return "chebyshev";
    }
    return "euclidean";
}

Metric parse_metric(std::string_view name)
{
    if (name == "euclidean") return Metric::euclidean;
    if (name == "manhattan") return Metric::manhattan;
    if (name == "chebyshev") return Metric::chebyshev;
    throw InputError("unknown metric '" + std::string(name) + "'");
}

void AdmissibilityParams::validate() const
{
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw InputError("delta must be a positive finite number");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InputError("epsilon must be a positive finite number");
}

double distance(std::span<const double> a, std::span<const double> b, Metric metric)
{
    if (a.size() != b.size())
        throw InputError("coordinate dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = std::abs(a[i] - b[i]);
        switch (metric) {
        case Metric::euclidean: acc += diff * diff; break;
        case Metric::manhattan: acc += diff; break;
        case Metric::chebyshev: acc = std::max(acc, diff); break;
        }
    }
    return metric == Metric::euclidean ? std::sqrt(acc) : acc;
}

CausalGraph::CausalGraph(std::vector<Event> events, std::vector<Edge> edges)
    : edges_(std::move(edges))
{
    bool first = true;
    for (auto& ev : events) {
        if (!std::isfinite(ev.tau)) {
            std::ostringstream msg;
            msg << "vertex " << ev.id << " has a non-finite time";
            throw InputError(msg.str());
        }
        if (first) {
            dimension_ = ev.coords.size();
            first = false;
        } else if (ev.coords.size() != dimension_) {
            std::ostringstream msg;
            msg << "vertex " << ev.id << " has coordinate dimension " << ev.coords.size()
                << ", expected " << dimension_;
            throw InputError(msg.str());
        }
        const VertexId id = ev.id;
        if (!events_.emplace(id, std::move(ev)).second) {
            std::ostringstream msg;
            msg << "duplicate vertex id " << id;
            throw InputError(msg.str());
        }
    }

    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.source == e.target) {
            std::ostringstream msg;
            msg << "self-loop at vertex " << e.source;
            throw InputError(msg.str());
        }
        if (i > 0 && edges_[i - 1] == e) {
            std::ostringstream msg;
            msg << "duplicate edge " << e;
            throw InputError(msg.str());
        }
    }
}

const Event& CausalGraph::event(VertexId v) const
{
    auto it = events_.find(v);
    if (it == events_.end()) {
        std::ostringstream msg;
        msg << "vertex " << v << " has no event";
        throw StructuralError(msg.str());
    }
    return it->second;
}

std::vector<VertexId> CausalGraph::vertices() const
{
    std::vector<VertexId> out;
    out.reserve(events_.size());
    for (const auto& [id, ev] : events_)
        out.push_back(id);
    return out;
}

std::vector<Edge> validate_causal(const CausalGraph& graph)
{
    std::vector<Edge> violations;
    for (const Edge& e : graph.edges()) {
        const double tu = graph.event(e.source).tau;
        const double tv = graph.event(e.target).tau;
        if (!(tu < tv))
            violations.push_back(e);
    }
    return violations;
}

bool admissible(const Event& u, const Event& v, const AdmissibilityParams& params)
{
    if (u.coords.size() != v.coords.size())
        throw InputError("coordinate dimension mismatch");
    if (u.id == v.id)
        return false;
    if (!(u.tau < v.tau))
        return false;
    if (v.tau - u.tau > params.delta)
        return false;
    return distance(u.coords, v.coords, params.metric) <= params.epsilon;
}

CausalGraph build_causal_graph(std::vector<Event> events, const AdmissibilityParams& params,
                               Execution exec)
{
    params.validate();
    std::set<VertexId> seen;
    for (const auto& ev : events) {
        if (!seen.insert(ev.id).second) {
            std::ostringstream msg;
            msg << "duplicate vertex id " << ev.id;
            throw InputError(msg.str());
        }
        if (ev.coords.size() != events.front().coords.size())
            throw InputError("events do not share a coordinate dimension");
    }
    auto edges = exec == Execution::serial ? kernels::admissible_pairs_serial(events, params)
                                           : kernels::admissible_pairs_parallel(events, params);
    return CausalGraph(std::move(events), std::move(edges));
}

}  // namespace cera
