#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "leibniz/bitset.hpp"
#include "leibniz/field.hpp"

namespace leibniz {

/**
 * A finite lattice as an abstract partial order on node indices 0..n-1.
 *
 * Node indices must form a linear extension of the order (x <= y implies
 * index(x) <= index(y)); under that invariant the join of x and y is the
 * lowest-indexed common upper bound and the meet the highest-indexed common
 * lower bound.
 */
class Lattice {
public:
    Lattice() = default;

    /// Throws std::invalid_argument if `leq` is not a lattice order in linear-extension order.
    static Lattice from_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

    /// 0 < 1 < ... < length.
    static Lattice chain(std::size_t length);
    static Lattice product(const Lattice& a, const Lattice& b);
    /// Product of chains of the given lengths; the empty product is the one-node lattice.
    static Lattice chain_product(std::span<const std::size_t> lengths);
    /// All subspaces of GF(p)^d under inclusion.
    static Lattice subspace_lattice(PrimeField field, std::size_t d);

    std::size_t size() const noexcept { return up_.size(); }
    bool leq(std::size_t x, std::size_t y) const noexcept { return up_[x].test(y); }
    bool less(std::size_t x, std::size_t y) const noexcept { return x != y && up_[x].test(y); }
    bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || leq(y, x); }
    /// Principal filter {y : x <= y}.
    const NodeSet& up(std::size_t x) const noexcept { return up_[x]; }
    /// Principal ideal {y : y <= x}.
    const NodeSet& down(std::size_t x) const noexcept { return down_[x]; }
    const std::vector<std::size_t>& upper_covers(std::size_t x) const noexcept { return upper_covers_[x]; }
    const std::vector<std::size_t>& lower_covers(std::size_t x) const noexcept { return lower_covers_[x]; }
    bool covers(std::size_t lower, std::size_t upper) const;
    /// Hasse diagram edges (lower, upper), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return size() - 1; }
    std::size_t meet(std::size_t x, std::size_t y) const;
    std::size_t join(std::size_t x, std::size_t y) const;

    /// Longest chain from the bottom to x.
    std::size_t height(std::size_t x) const noexcept { return height_[x]; }
    /// Longest chain from x to the top.
    std::size_t depth(std::size_t x) const noexcept { return depth_[x]; }
    std::size_t length() const noexcept { return size() == 0 ? 0 : height_[top()]; }

    /// The sub-poset on `nodes` (kept in the given order), e.g. an interval.
    Lattice induced(std::span<const std::size_t> nodes) const;

private:
    void finish();

    std::vector<NodeSet> up_;
    std::vector<NodeSet> down_;
    std::vector<std::vector<std::size_t>> upper_covers_;
    std::vector<std::vector<std::size_t>> lower_covers_;
    std::vector<std::size_t> height_;
    std::vector<std::size_t> depth_;
};

/// Sorted multiset of (height, up-degree, down-degree); equal for isomorphic lattices.
using LatticeFingerprint = std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>;
LatticeFingerprint fingerprint(const Lattice& lat);

}  // namespace leibniz
