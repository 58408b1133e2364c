#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/isomorphism.hpp"
#include "leibniz/order.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/**
 * The lattice of subalgebras of an algebra (or an interval of it). Nodes are
 * ordered by dimension, then by RREF image, which is a linear extension of
 * inclusion.
 */
class SubalgebraLattice {
public:
    SubalgebraLattice(std::vector<Subspace> nodes, std::optional<std::size_t> kernel_node);

    const std::vector<Subspace>& nodes() const noexcept { return nodes_; }
    const Subspace& node(std::size_t i) const { return nodes_.at(i); }
    std::size_t size() const noexcept { return nodes_.size(); }
    const Lattice& order() const noexcept { return order_; }
    std::size_t top() const noexcept { return order_.top(); }
    std::size_t bottom() const noexcept { return order_.bottom(); }
    /// Index of the Leibniz kernel, if it lies in this (sub)lattice.
    std::optional<std::size_t> kernel_node() const noexcept { return kernel_node_; }
    std::vector<std::pair<std::size_t, std::size_t>> covers() const { return order_.cover_pairs(); }
    std::optional<std::size_t> index_of(const Subspace& s) const;

private:
    std::vector<Subspace> nodes_;
    Lattice order_;
    std::optional<std::size_t> kernel_node_;
    std::unordered_map<Subspace, std::size_t, SubspaceHash> index_;
};

/// All subalgebras in canonical order. Throws BudgetExceeded past the subspace budget.
std::vector<Subspace> enumerate_subalgebras(const LeibnizAlgebra& L);

SubalgebraLattice build_lattice(const LeibnizAlgebra& L);

/// The interval {C : lower ⊆ C ⊆ upper}. Throws std::invalid_argument for non-nodes or lower ⊄ upper.
SubalgebraLattice interval(const SubalgebraLattice& lat, std::size_t upper, std::size_t lower);
SubalgebraLattice interval(const SubalgebraLattice& lat, const Subspace& upper, const Subspace& lower);

/**
 * Checks on every pair that the lattice meet is the intersection and the
 * lattice join is the generated subalgebra. Returns the first offending pair.
 */
std::optional<std::pair<std::size_t, std::size_t>> check_meet_join(const LeibnizAlgebra& L,
                                                                   const SubalgebraLattice& lat);

bool is_chain_product(const Lattice& lat, std::span<const std::size_t> lengths);

struct VectorSpaceLatticeResult {
    bool is_vector_space_lattice = false;
    std::size_t dim = 0;
};
/// Tests for the lattice of all subspaces of GF(p)^d with d the length of `lat`.
VectorSpaceLatticeResult is_vector_space_lattice(const Lattice& lat, PrimeField field);

/// N5 sublattice: bottom < low < high < top and bottom < side < top, side ∧ high = bottom, side ∨ low = top.
struct Pentagon {
    std::size_t bottom, low, high, side, top;
};
/// A pentagon sublattice, or nothing iff the lattice is modular.
std::optional<Pentagon> find_pentagon(const Lattice& lat);
bool is_pentagon(const Lattice& lat, const Pentagon& p);

/// Nodes covered by the top.
std::vector<std::size_t> maximal_subalgebras(const Lattice& lat);

}  // namespace leibniz
