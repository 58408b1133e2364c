#include "leibniz/algebra.hpp"

#include <sstream>

namespace leibniz {

LeibnizAlgebra::LeibnizAlgebra(PrimeField field, std::size_t dim)
    : field_(field), dim_(dim), table_(dim * dim * dim, 0) {}

LeibnizAlgebra::LeibnizAlgebra(PrimeField field, std::size_t dim, std::vector<Residue> table,
                               std::vector<std::string> labels)
    : field_(field), dim_(dim), table_(std::move(table)) {
    if (table_.size() != dim * dim * dim) throw DimensionMismatch("structure table must have dim^3 entries");
    for (auto& c : table_) c = field_.reduce(c);
    set_labels(std::move(labels));
}

std::span<const Residue> LeibnizAlgebra::product(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
    return {table_.data() + (i * dim_ + j) * dim_, dim_};
}

void LeibnizAlgebra::set_product(std::size_t i, std::size_t j, std::span<const Residue> value) {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
    if (value.size() != dim_) throw DimensionMismatch("product vector has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) table_[(i * dim_ + j) * dim_ + k] = field_.reduce(value[k]);
}

std::string LeibnizAlgebra::label(std::size_t i) const {
    if (i < labels_.size()) return labels_[i];
    return "e" + std::to_string(i);
}

void LeibnizAlgebra::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != dim_) throw DimensionMismatch("label count must equal dimension");
    labels_ = std::move(labels);
}

Vec LeibnizAlgebra::multiply(std::span<const Residue> x, std::span<const Residue> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("multiply: vector length != dim");
    Vec out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            axpy(field_, field_.mul(x[i], y[j]), product(i, j), out);
        }
    }
    return out;
}

IdentityCheck check_left_leibniz(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    const PrimeField& F = L.field();
    // Left multiplication by e_i applied to an arbitrary vector.
    auto left = [&](std::size_t i, std::span<const Residue> v) {
        Vec out(n, 0);
        for (std::size_t m = 0; m < n; ++m)
            if (v[m] != 0) axpy(F, v[m], L.product(i, m), out);
        return out;
    };
    auto right = [&](std::span<const Residue> v, std::size_t k) {
        Vec out(n, 0);
        for (std::size_t m = 0; m < n; ++m)
            if (v[m] != 0) axpy(F, v[m], L.product(m, k), out);
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = left(i, L.product(j, k));
                Vec rhs = added(F, right(L.product(i, j), k), left(j, L.product(i, k)));
                if (lhs != rhs) return {false, std::array<std::size_t, 3>{i, j, k}};
            }
    return {true, std::nullopt};
}

void require_left_leibniz(const LeibnizAlgebra& L) {
    auto check = check_left_leibniz(L);
    if (check) return;
    const auto& t = *check.failing_triple;
    std::ostringstream msg;
    msg << "left Leibniz identity fails at (" << L.label(t[0]) << ", " << L.label(t[1]) << ", " << L.label(t[2]) << ")";
    throw IdentityFailure(msg.str());
}

Vec multiply(const LeibnizAlgebra& L, std::span<const Residue> x, std::span<const Residue> y) {
    return L.multiply(x, y);
}

Subspace leibniz_kernel(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        auto sq = L.product(i, i);
        gens.emplace_back(sq.begin(), sq.end());
        for (std::size_t j = i + 1; j < n; ++j) gens.push_back(added(L.field(), L.product(i, j), L.product(j, i)));
    }
    return canonicalize(L.field(), n, gens);
}

bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& S) {
    if (S.ambient_dim() != L.dim()) throw DimensionMismatch("subspace ambient != algebra dimension");
    for (const auto& x : S.basis())
        for (const auto& y : S.basis())
            if (!S.contains(L.multiply(x, y))) return false;
    return true;
}

Subspace generated_subalgebra(const LeibnizAlgebra& L, std::span<const Vec> generators) {
    Subspace current = canonicalize(L.field(), L.dim(), generators);
    while (true) {
        std::vector<Vec> vectors = current.basis();
        for (const auto& x : current.basis())
            for (const auto& y : current.basis()) vectors.push_back(L.multiply(x, y));
        Subspace next = canonicalize(L.field(), L.dim(), vectors);
        if (next.dim() == current.dim()) return next;
        current = std::move(next);
    }
}

Subspace generated_subalgebra(const LeibnizAlgebra& L, const Subspace& S) { return generated_subalgebra(L, S.basis()); }

bool is_lie(const LeibnizAlgebra& L) { return leibniz_kernel(L).dim() == 0; }

LeibnizAlgebra quotient_algebra(const LeibnizAlgebra& L, const Subspace& ideal) {
    const std::size_t n = L.dim();
    if (ideal.ambient_dim() != n) throw DimensionMismatch("ideal ambient != algebra dimension");
    for (const auto& v : ideal.basis())
        for (std::size_t i = 0; i < n; ++i) {
            Vec e = unit_vector(n, i);
            if (!ideal.contains(L.multiply(e, v)) || !ideal.contains(L.multiply(v, e)))
                throw std::invalid_argument("quotient_algebra: subspace is not a two-sided ideal");
        }
    std::vector<bool> is_pivot(n, false);
    for (auto c : ideal.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) keep.push_back(i);
    const std::size_t m = keep.size();
    LeibnizAlgebra Q(L.field(), m);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
        labels.push_back(L.label(keep[a]));
        for (std::size_t b = 0; b < m; ++b) {
            // Reducing modulo the RREF basis zeroes the pivot coordinates, leaving a unique representative.
            Vec r = ideal.reduce(L.product(keep[a], keep[b]));
            Vec coords(m);
            for (std::size_t c = 0; c < m; ++c) coords[c] = r[keep[c]];
            Q.set_product(a, b, coords);
        }
    }
    if (!L.labels().empty()) Q.set_labels(std::move(labels));
    return Q;
}

Vec left_power(const LeibnizAlgebra& L, std::span<const Residue> x, std::size_t k) {
    if (k == 0) throw std::invalid_argument("left_power: exponent must be >= 1");
    Vec acc(x.begin(), x.end());
    for (std::size_t i = 1; i < k; ++i) acc = L.multiply(x, acc);
    return acc;
}

}  // namespace leibniz
