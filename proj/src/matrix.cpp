#include "leibniz/matrix.hpp"

#include <utility>

namespace leibniz {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw DimensionMismatch("matrix entry count != rows * cols");
    for (Residue& x : entries_) x = field_.reduce(x);
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols, std::span<const Vec> rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.reduce(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(PrimeField field, std::size_t rows, std::span<const Vec> columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = field.reduce(columns[j][i]);
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

Vec Matrix::apply(std::span<const Residue> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += static_cast<std::uint64_t>((*this)(i, j)) * v[j];
            if ((j & 15) == 15) acc %= field_.p();
        }
        out[i] = static_cast<Residue>(acc % field_.p());
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Residue a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out(i, j) = field_.add(out(i, j), field_.mul(a, other(k, j)));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum size mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.add(entries_[i], other.entries_[i]);
    return out;
}

Matrix Matrix::scaled(Residue c) const {
    Matrix out(*this);
    for (Residue& x : out.entries_) x = field_.mul(c, x);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const noexcept { return leibniz::is_zero(entries_); }

std::vector<std::size_t> Matrix::reduce_to_rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
        Residue inv = field_.inv((*this)(r, c));
        for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul(inv, (*this)(r, j));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            Residue f = (*this)(i, c);
            if (f == 0) continue;
            Residue nf = field_.neg(f);
            for (std::size_t j = c; j < cols_; ++j)
                (*this)(i, j) = field_.add((*this)(i, j), field_.mul(nf, (*this)(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy(*this);
    return copy.reduce_to_rref().size();
}

std::vector<Vec> Matrix::kernel() const {
    Matrix red(*this);
    auto pivots = red.reduce_to_rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(red(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace leibniz
