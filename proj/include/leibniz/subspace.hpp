#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "leibniz/field.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/**
 * A subspace of GF(p)^n held in reduced row echelon form with zero rows
 * removed. Two spans are equal iff their Subspace values are bit-identical,
 * so Subspace doubles as the identity token for lattice nodes.
 *
 * Ordering is by dimension, then lexicographically by the basis rows.
 */
class Subspace {
public:
    /// The zero subspace of GF(p)^n.
    Subspace(PrimeField field, std::size_t ambient_dim);

    static Subspace whole(PrimeField field, std::size_t ambient_dim);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Matrix basis_matrix() const { return Matrix::from_rows(field_, ambient_dim_, basis_); }

    /// Remainder of v after elimination against the basis; zero iff v is in the span.
    Vec reduce(std::span<const Residue> v) const;
    bool contains(std::span<const Residue> v) const;
    bool is_subspace_of(const Subspace& other) const;

    /// Flat row-major image of the RREF basis; equal iff the subspaces are equal.
    std::vector<Residue> key() const;

    bool operator==(const Subspace& o) const noexcept {
        return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
    }
    std::strong_ordering operator<=>(const Subspace& o) const noexcept;

private:
    friend Subspace canonicalize(PrimeField, std::size_t, std::span<const Vec>);

    PrimeField field_;
    std::size_t ambient_dim_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// RREF of the span of `vectors` inside GF(p)^n. Throws DimensionMismatch on ragged input.
Subspace canonicalize(PrimeField field, std::size_t ambient_dim, std::span<const Vec> vectors);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const Residue> v);

/// Image (column span) of a matrix as a subspace of its row-space ambient.
Subspace column_space(const Matrix& m);
/// {v : M v = 0} as a subspace.
Subspace null_space(const Matrix& m);

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept;
};

/// Number of subspaces of GF(p)^n (saturating at UINT64_MAX).
std::uint64_t count_subspaces(std::uint32_t p, std::size_t n);

/// Maximum subspace count an enumeration may visit. LEIBNIZ_BUDGET overrides the default of 10^6.
std::uint64_t subspace_budget();

/**
 * Visits every subspace of GF(p)^n exactly once, already in RREF, grouped by
 * dimension. Throws BudgetExceeded up front if the count exceeds the budget.
 */
void for_each_subspace(PrimeField field, std::size_t n, const std::function<void(const Subspace&)>& visit);
std::vector<Subspace> all_subspaces(PrimeField field, std::size_t n);

}  // namespace leibniz
