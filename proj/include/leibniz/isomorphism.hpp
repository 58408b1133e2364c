#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "leibniz/order.hpp"

namespace leibniz {

/// A bijection between node indices: image[x] is the node that x maps to.
struct LatticeMap {
    std::vector<std::size_t> image;

    std::size_t operator()(std::size_t x) const { return image.at(x); }
    bool operator==(const LatticeMap&) const = default;
};

struct IsomorphismResult {
    std::vector<LatticeMap> maps;
    /// Set when the search stopped because `limit` maps were found.
    bool limit_reached = false;

    bool empty() const noexcept { return maps.empty(); }
};

struct IsomorphismOptions {
    std::size_t limit = std::numeric_limits<std::size_t>::max();
    /// Pairs (x, y) every returned map must satisfy: x -> y.
    std::vector<std::pair<std::size_t, std::size_t>> pinned;
};

/**
 * Order isomorphisms from `a` to `b`, enumerated by backtracking over the
 * Hasse diagrams. Nodes are first partitioned by order invariants (height,
 * depth, cover degrees, principal filter and ideal sizes, filter sizes of the
 * upper covers) refined along covers; only same-class nodes are ever paired.
 * Enumeration order is deterministic.
 */
IsomorphismResult find_isomorphisms(const Lattice& a, const Lattice& b, const IsomorphismOptions& options);
IsomorphismResult find_isomorphisms(const Lattice& a, const Lattice& b,
                                    std::size_t limit = std::numeric_limits<std::size_t>::max());

bool are_isomorphic(const Lattice& a, const Lattice& b);

/// Checks that `map` is a bijection with x <= y iff map(x) <= map(y).
bool is_order_isomorphism(const Lattice& a, const Lattice& b, const LatticeMap& map);

/**
 * Joint stable coloring of the nodes of a and b (colors comparable across
 * both). Nodes in different classes are never related by an isomorphism.
 */
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refined_colors(const Lattice& a, const Lattice& b);

}  // namespace leibniz
