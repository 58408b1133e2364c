#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leibniz/field.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/**
 * A finite-dimensional algebra over GF(p) given by structure constants:
 * e_i · e_j = sum_k c(i, j, k) e_k.
 *
 * Construction does not enforce the left Leibniz identity; consumers that
 * need it call check_left_leibniz (or require_left_leibniz) first.
 */
class LeibnizAlgebra {
public:
    /// The abelian algebra (all products zero).
    LeibnizAlgebra(PrimeField field, std::size_t dim);
    /// `table` is indexed (i * dim + j) * dim + k.
    LeibnizAlgebra(PrimeField field, std::size_t dim, std::vector<Residue> table, std::vector<std::string> labels = {});

    const PrimeField& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    /// Coordinates of e_i · e_j.
    std::span<const Residue> product(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, std::span<const Residue> value);
    Residue coefficient(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim_ + j) * dim_ + k]; }

    const std::vector<Residue>& table() const noexcept { return table_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Label of basis element i, defaulting to "e<i>".
    std::string label(std::size_t i) const;
    void set_labels(std::vector<std::string> labels);

    /// Bilinear extension of the structure constants.
    Vec multiply(std::span<const Residue> x, std::span<const Residue> y) const;

    /// Equality of the products table (labels ignored).
    bool operator==(const LeibnizAlgebra& o) const noexcept {
        return field_ == o.field_ && dim_ == o.dim_ && table_ == o.table_;
    }

private:
    PrimeField field_;
    std::size_t dim_;
    std::vector<Residue> table_;
    std::vector<std::string> labels_;
};

struct IdentityCheck {
    bool holds = true;
    /// Lexicographically first basis triple (i, j, k) where e_i(e_j e_k) != (e_i e_j)e_k + e_j(e_i e_k).
    std::optional<std::array<std::size_t, 3>> failing_triple;

    explicit operator bool() const noexcept { return holds; }
};

IdentityCheck check_left_leibniz(const LeibnizAlgebra& L);
/// Throws IdentityFailure naming the first failing triple by label.
void require_left_leibniz(const LeibnizAlgebra& L);

Vec multiply(const LeibnizAlgebra& L, std::span<const Residue> x, std::span<const Residue> y);

/// Span of all squares, computed from {e_i^2} and {e_i e_j + e_j e_i : i < j}.
Subspace leibniz_kernel(const LeibnizAlgebra& L);

/// True iff the subspace is closed under the product.
bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& S);

/// Least subalgebra containing the given vectors.
Subspace generated_subalgebra(const LeibnizAlgebra& L, std::span<const Vec> generators);
/// Least subalgebra containing the given subspace.
Subspace generated_subalgebra(const LeibnizAlgebra& L, const Subspace& S);

/// True iff x^2 = 0 for every x (equivalently the kernel is zero).
bool is_lie(const LeibnizAlgebra& L);

/**
 * L / I for a two-sided ideal I, expressed on the coordinates of L that are
 * not pivot columns of I's echelon basis. Throws std::invalid_argument if I
 * is not a two-sided ideal.
 */
LeibnizAlgebra quotient_algebra(const LeibnizAlgebra& L, const Subspace& ideal);

/// Left-normed power x^k = x · x^{k-1}, with x^1 = x.
Vec left_power(const LeibnizAlgebra& L, std::span<const Residue> x, std::size_t k);

}  // namespace leibniz
