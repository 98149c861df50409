#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace cera {

/// Disjoint-set forest over dense indices 0..n-1 with union by size and path
/// halving. Elements may be created lazily (see activate()); inactive
/// elements are not counted as sets.
class UnionFind {
public:
    explicit UnionFind(std::size_t n, bool all_active = true)
        : parent_(n), size_(n, 1), active_(n, all_active), sets_(all_active ? n : 0)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    bool active(std::size_t x) const { return active_[x]; }

    /// Makes x a singleton set if it was inactive. Returns true if it was new.
    bool activate(std::size_t x)
    {
        if (active_[x])
            return false;
        active_[x] = true;
        ++sets_;
        return true;
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Merges the sets containing a and b; returns false if already joined.
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --sets_;
        return true;
    }

    /// Number of disjoint sets among active elements.
    std::size_t set_count() const { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<bool> active_;
    std::size_t sets_;
};

}  // namespace cera
