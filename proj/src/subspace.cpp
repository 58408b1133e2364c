#include "leibniz/subspace.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace leibniz {

Subspace::Subspace(PrimeField field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}

Subspace Subspace::whole(PrimeField field, std::size_t ambient_dim) {
    std::vector<Vec> units;
    for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
    return canonicalize(field, ambient_dim, units);
}

Vec Subspace::reduce(std::span<const Residue> v) const {
    if (v.size() != ambient_dim_) throw DimensionMismatch("vector length does not match ambient dimension");
    Vec r(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Residue c = r[pivots_[i]];
        if (c != 0) axpy(field_, field_.neg(c), basis_[i], r);
    }
    return r;
}

bool Subspace::contains(std::span<const Residue> v) const { return leibniz::is_zero(reduce(v)); }

bool Subspace::is_subspace_of(const Subspace& other) const {
    if (ambient_dim_ != other.ambient_dim_) throw DimensionMismatch("subspaces live in different ambients");
    if (dim() > other.dim()) return false;
    for (const auto& b : basis_)
        if (!other.contains(b)) return false;
    return true;
}

std::vector<Residue> Subspace::key() const {
    std::vector<Residue> out;
    out.reserve(basis_.size() * ambient_dim_);
    for (const auto& row : basis_) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const noexcept {
    if (auto c = ambient_dim_ <=> o.ambient_dim_; c != 0) return c;
    if (auto c = basis_.size() <=> o.basis_.size(); c != 0) return c;
    return basis_ <=> o.basis_;
}

Subspace canonicalize(PrimeField field, std::size_t ambient_dim, std::span<const Vec> vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient_dim) throw DimensionMismatch("inconsistent vector lengths in span");
    Subspace out(field, ambient_dim);
    if (vectors.empty() || ambient_dim == 0) return out;
    Matrix m = Matrix::from_rows(field, ambient_dim, vectors);
    out.pivots_ = m.reduce_to_rref();
    for (std::size_t i = 0; i < out.pivots_.size(); ++i) {
        auto row = m.row(i);
        out.basis_.emplace_back(row.begin(), row.end());
    }
    return out;
}

namespace {
void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw DimensionMismatch("subspaces live in different ambients");
}
}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: rows [x | x] for x in A and [y | 0] for y in B; rows of the
    // echelon form whose left half vanishes span A ∩ B in their right half.
    std::vector<Vec> rows;
    for (const auto& x : a.basis()) {
        Vec r(2 * n);
        std::copy(x.begin(), x.end(), r.begin());
        std::copy(x.begin(), x.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
        rows.push_back(std::move(r));
    }
    for (const auto& y : b.basis()) {
        Vec r(2 * n, 0);
        std::copy(y.begin(), y.end(), r.begin());
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return Subspace(a.field(), n);
    Matrix m = Matrix::from_rows(a.field(), 2 * n, rows);
    auto pivots = m.reduce_to_rref();
    std::vector<Vec> inter;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < n) continue;
        auto row = m.row(i);
        inter.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    }
    return canonicalize(a.field(), n, inter);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    std::vector<Vec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return canonicalize(a.field(), a.ambient_dim(), all);
}

bool contains(const Subspace& a, std::span<const Residue> v) { return a.contains(v); }

Subspace column_space(const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return canonicalize(m.field(), m.rows(), cols);
}

Subspace null_space(const Matrix& m) { return canonicalize(m.field(), m.cols(), m.kernel()); }

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(s.ambient_dim() * 1315423911u + s.dim());
    for (const auto& row : s.basis())
        for (Residue x : row) h = h * 1099511628211ull ^ x;
    return h;
}

std::uint64_t count_subspaces(std::uint32_t p, std::size_t n) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    // Gaussian binomials via the recurrence [n,k] = [n-1,k-1] + p^k [n-1,k].
    std::vector<long double> row{1.0L};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<long double> next(m + 1, 0.0L);
        long double pk = 1.0L;
        for (std::size_t k = 0; k <= m; ++k) {
            long double left = k > 0 ? row[k - 1] : 0.0L;
            long double right = k < m ? row[k] : 0.0L;
            next[k] = left + pk * right;
            pk *= p;
        }
        row = std::move(next);
    }
    long double total = 0.0L;
    for (auto v : row) total += v;
    if (total >= static_cast<long double>(kMax)) return kMax;
    return static_cast<std::uint64_t>(total + 0.5L);
}

std::uint64_t subspace_budget() {
    if (const char* env = std::getenv("LEIBNIZ_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

namespace {

// Fills the free entries of an RREF with the chosen pivot columns, in
// lexicographic order of the free coordinates.
void enumerate_with_pivots(const PrimeField& F, std::size_t n, const std::vector<std::size_t>& pivots,
                           const std::function<void(const Subspace&)>& visit) {
    const std::size_t k = pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
            if (!is_pivot[c]) free_slots.emplace_back(r, c);

    std::vector<Vec> rows(k, Vec(n, 0));
    for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
    std::vector<Residue> digits(free_slots.size(), 0);
    while (true) {
        for (std::size_t s = 0; s < free_slots.size(); ++s) rows[free_slots[s].first][free_slots[s].second] = digits[s];
        visit(canonicalize(F, n, rows));
        std::size_t s = free_slots.size();
        while (s > 0) {
            --s;
            if (++digits[s] < F.p()) break;
            digits[s] = 0;
            if (s == 0) return;
        }
        if (free_slots.empty()) return;
    }
}

void enumerate_pivot_sets(const PrimeField& F, std::size_t n, std::size_t k, std::size_t start,
                          std::vector<std::size_t>& chosen, const std::function<void(const Subspace&)>& visit) {
    if (chosen.size() == k) {
        enumerate_with_pivots(F, n, chosen, visit);
        return;
    }
    for (std::size_t c = start; c + (k - chosen.size()) <= n; ++c) {
        chosen.push_back(c);
        enumerate_pivot_sets(F, n, k, c + 1, chosen, visit);
        chosen.pop_back();
    }
}

}  // namespace

void for_each_subspace(PrimeField field, std::size_t n, const std::function<void(const Subspace&)>& visit) {
    const auto total = count_subspaces(field.p(), n);
    const auto budget = subspace_budget();
    if (total > budget)
        throw BudgetExceeded("GF(" + std::to_string(field.p()) + ")^" + std::to_string(n) + " has " +
                             std::to_string(total) + " subspaces, budget is " + std::to_string(budget));
    for (std::size_t k = 0; k <= n; ++k) {
        if (k == 0) {
            visit(Subspace(field, n));
            continue;
        }
        std::vector<std::size_t> chosen;
        enumerate_pivot_sets(field, n, k, 0, chosen, visit);
    }
}

std::vector<Subspace> all_subspaces(PrimeField field, std::size_t n) {
    std::vector<Subspace> out;
    for_each_subspace(field, n, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

}  // namespace leibniz
