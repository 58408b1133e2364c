#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

/// Dense row-major matrix over GF(p). Acts on column vectors: (M v)_i = sum_j M(i,j) v_j.
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols);
    Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

    static Matrix identity(PrimeField field, std::size_t n);
    static Matrix from_rows(PrimeField field, std::size_t cols, std::span<const Vec> rows);
    static Matrix from_columns(PrimeField field, std::size_t rows, std::span<const Vec> columns);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Residue operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Residue& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const Residue> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    Vec column(std::size_t j) const;
    const std::vector<Residue>& entries() const noexcept { return entries_; }

    Vec apply(std::span<const Residue> v) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix scaled(Residue c) const;
    Matrix transposed() const;
    bool is_zero() const noexcept;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> reduce_to_rref();
    std::size_t rank() const;
    /// Basis of {v : M v = 0}, one vector per free column, in column order.
    std::vector<Vec> kernel() const;

    bool operator==(const Matrix&) const = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> entries_;
};

}  // namespace leibniz
