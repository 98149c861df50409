#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cera {

using VertexId = std::uint32_t;

/// Arbitrary-precision integer used for Hilbert function values.
using BigInt = boost::multiprecision::cpp_int;

/// Directed causal edge (source happens before target).
struct Edge {
    VertexId source = 0;
    VertexId target = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered vertex pair, stored with lo < hi.
struct UndirectedEdge {
    VertexId lo = 0;
    VertexId hi = 0;

    UndirectedEdge() = default;
    UndirectedEdge(VertexId a, VertexId b) : lo(a < b ? a : b), hi(a < b ? b : a) {}
    explicit UndirectedEdge(const Edge& e) : UndirectedEdge(e.source, e.target) {}

    friend auto operator<=>(const UndirectedEdge&, const UndirectedEdge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e)
{
    return os << '(' << e.source << ',' << e.target << ')';
}

inline std::ostream& operator<<(std::ostream& os, const UndirectedEdge& e)
{
    return os << '{' << e.lo << ',' << e.hi << '}';
}

enum class Execution { serial, parallel };

/// Bad user input: malformed files, inconsistent parameters, structural defects.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Graph structure defect, e.g. an edge endpoint without an event.
class StructuralError : public InputError {
public:
    using InputError::InputError;
};

/// A checked mathematical invariant failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace cera
