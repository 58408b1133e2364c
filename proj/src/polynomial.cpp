#include "leibniz/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace leibniz {

Polynomial::Polynomial(PrimeField field, std::vector<Residue> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = field_.reduce(c);
    strip();
}

Polynomial::Polynomial(PrimeField field, std::initializer_list<std::int64_t> coeffs) : field_(field) {
    for (auto c : coeffs) coeffs_.push_back(field_.reduce(c));
    strip();
}

Polynomial Polynomial::constant(PrimeField field, Residue c) { return Polynomial(field, std::vector<Residue>{c}); }

Polynomial Polynomial::x(PrimeField field) { return monomial(field, 1); }

Polynomial Polynomial::monomial(PrimeField field, std::size_t d, Residue c) {
    std::vector<Residue> coeffs(d + 1, 0);
    coeffs[d] = c;
    return Polynomial(field, std::move(coeffs));
}

void Polynomial::strip() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Residue Polynomial::evaluate(Residue t) const noexcept {
    Residue acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, t), *it);
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
    if (!m.is_square()) throw DimensionMismatch("polynomial evaluation needs a square matrix");
    Matrix acc(m.field(), m.rows(), m.cols());
    const Matrix id = Matrix::identity(m.field(), m.rows());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id.scaled(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Residue> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(field_.mul(field_.reduce(static_cast<std::int64_t>(i)), coeffs_[i]));
    return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Residue> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Residue> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    std::vector<Residue> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = field_.add(c[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::scaled(Residue c) const {
    std::vector<Residue> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.mul(c, coeffs_[i]);
    return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (degree() < divisor.degree()) return {Polynomial(field_), *this};
    std::vector<Residue> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<Residue> quot(rem.size() - dd, 0);
    const Residue lead_inv = field_.inv(divisor.leading());
    for (std::size_t k = rem.size(); k-- > dd;) {
        Residue c = field_.mul(rem[k], lead_inv);
        quot[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] = field_.sub(rem[k - dd + j], field_.mul(c, divisor.coeffs_[j]));
    }
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& o) const noexcept {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    return coeffs_ <=> o.coeffs_;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        Residue c = coeffs_[k];
        if (c == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (c != 1 || k == 0) out << c;
        if (k >= 1) out << 'x';
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
    Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
    Polynomial b = base % modulus;
    while (e > 0) {
        if (e & 1) result = (result * b) % modulus;
        b = (b * b) % modulus;
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const Polynomial& f) {
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const PrimeField& F = f.field();
    const Polynomial x = Polynomial::x(F);
    // f is irreducible iff it shares no factor with x^{p^i} - x for i <= n/2.
    Polynomial h = x % f;
    for (int i = 1; 2 * i <= n; ++i) {
        h = pow_mod(h, F.p(), f);
        if (gcd(f, h - x).degree() > 0) return false;
    }
    return true;
}

std::vector<Polynomial> monic_polynomials(PrimeField field, std::size_t degree) {
    std::vector<Polynomial> out;
    std::vector<Residue> low(degree, 0);
    while (true) {
        std::vector<Residue> c = low;
        c.push_back(1);
        out.emplace_back(field, std::move(c));
        // The constant term is the most significant digit, giving lexicographic coefficient order.
        std::size_t i = degree;
        while (true) {
            if (i == 0) return out;
            --i;
            if (++low[i] < field.p()) break;
            low[i] = 0;
        }
    }
}

Polynomial PrimePowerFactorization::expand(PrimeField field) const {
    Polynomial out = Polynomial::monomial(field, x_power, unit);
    for (const auto& f : factors)
        for (std::size_t i = 0; i < f.multiplicity; ++i) out = out * f.prime;
    return out;
}

namespace {

// Splits a product of distinct monic irreducibles of degree d by
// Cantor-Zassenhaus with a fixed seed; output order is normalized by the caller.
// In characteristic 2 the trace a + a^2 + ... + a^{2^{d-1}} replaces a^{(p^d-1)/2} - 1.
void equal_degree_split(const Polynomial& g, std::size_t d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    const PrimeField& F = g.field();
    std::uniform_int_distribution<Residue> coin(0, F.p() - 1);
    while (true) {
        std::vector<Residue> c(static_cast<std::size_t>(g.degree()));
        for (auto& x : c) x = coin(rng);
        Polynomial a(F, std::move(c));
        if (a.degree() <= 0) continue;
        Polynomial ap = a % g;
        Polynomial c1(F, std::vector<Residue>{});
        if (F.p() == 2) {
            Polynomial t = ap;
            for (std::size_t i = 1; i < d; ++i) {
                ap = (ap * ap) % g;
                t = t + ap;
            }
            c1 = gcd(g, t);
        } else {
            // t = a^{(p^d - 1)/2} = (prod_{i<d} a^{p^i})^{(p-1)/2}
            Polynomial t = Polynomial::constant(F, 1);
            for (std::size_t i = 0; i < d; ++i) {
                t = (t * ap) % g;
                ap = pow_mod(ap, F.p(), g);
            }
            t = pow_mod(t, (F.p() - 1) / 2, g);
            c1 = gcd(g, t - Polynomial::constant(F, 1));
        }
        if (c1.degree() > 0 && c1.degree() < g.degree()) {
            equal_degree_split(c1, d, rng, out);
            equal_degree_split((g / c1).monic(), d, rng, out);
            return;
        }
    }
}

std::vector<Polynomial> split_equal_degree(const Polynomial& g, std::size_t d) {
    std::vector<Polynomial> out;
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g);
        return out;
    }
    const PrimeField& F = g.field();
    long double candidates = 1.0L;
    for (std::size_t i = 0; i < d; ++i) candidates *= F.p();
    if (candidates <= static_cast<long double>(1u << 20)) {
        for (const auto& q : monic_polynomials(F, d))
            if ((g % q).is_zero()) out.push_back(q);
    } else {
        std::mt19937_64 rng(0x1eb1u);
        equal_degree_split(g, d, rng, out);
    }
    return out;
}

}  // namespace

PrimePowerFactorization factor(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    const PrimeField& F = f.field();
    PrimePowerFactorization result;
    result.unit = f.leading();
    std::vector<Residue> c = f.monic().coeffs();
    std::size_t r = 0;
    while (r < c.size() && c[r] == 0) ++r;
    result.x_power = r;
    Polynomial rest(F, std::vector<Residue>(c.begin() + static_cast<std::ptrdiff_t>(r), c.end()));

    const Polynomial x = Polynomial::x(F);
    Polynomial frob = x % rest;  // x^{p^d} mod rest
    for (std::size_t d = 1; rest.degree() > 0; ++d) {
        if (static_cast<std::size_t>(rest.degree()) < 2 * d) {
            result.factors.push_back({rest, 1});
            break;
        }
        frob = pow_mod(frob, F.p(), rest);
        Polynomial g = gcd(rest, frob - x);
        if (g.degree() <= 0) continue;
        for (const auto& q : split_equal_degree(g, d)) {
            std::size_t mult = 0;
            while (true) {
                auto [quot, rem] = rest.divmod(q);
                if (!rem.is_zero()) break;
                rest = std::move(quot);
                ++mult;
            }
            result.factors.push_back({q, mult});
        }
        frob = frob % rest;
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const PrimePowerFactor& a, const PrimePowerFactor& b) { return a.prime < b.prime; });
    return result;
}

Polynomial minimal_polynomial(const Matrix& m, std::span<const Residue> v) {
    if (!m.is_square()) throw DimensionMismatch("minimal polynomial needs a square matrix");
    if (v.size() != m.rows()) throw DimensionMismatch("generator does not lie in the ambient space");
    const PrimeField& F = m.field();
    const std::size_t n = m.rows();
    std::vector<Vec> krylov;
    Vec w(v.begin(), v.end());
    for (std::size_t k = 0; k <= n; ++k) {
        // Solve sum_i c_i krylov[i] = w; on success w = M^k v closes the orbit.
        const std::size_t cols = krylov.size() + 1;
        Matrix aug(F, n, cols);
        for (std::size_t j = 0; j < krylov.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) aug(i, j) = krylov[j][i];
        for (std::size_t i = 0; i < n; ++i) aug(i, cols - 1) = w[i];
        auto pivots = aug.reduce_to_rref();
        if (pivots.empty() || pivots.back() != cols - 1) {
            std::vector<Residue> coeffs(k + 1, 0);
            coeffs[k] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) coeffs[pivots[i]] = F.neg(aug(i, cols - 1));
            return Polynomial(F, std::move(coeffs));
        }
        krylov.push_back(w);
        w = m.apply(w);
    }
    throw std::logic_error("Krylov sequence failed to close");
}

Polynomial minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("minimal polynomial needs a square matrix");
    Polynomial acc = Polynomial::constant(m.field(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) acc = lcm(acc, minimal_polynomial(m, unit_vector(m.rows(), i)));
    return acc;
}

Polynomial characteristic_polynomial(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("characteristic polynomial needs a square matrix");
    const PrimeField& F = m.field();
    const std::size_t n = m.rows();
    Matrix h = m;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
        }
        const Residue inv = F.inv(h(j + 1, j));
        for (std::size_t i = j + 2; i < n; ++i) {
            Residue u = F.mul(h(i, j), inv);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c) h(i, c) = F.sub(h(i, c), F.mul(u, h(j + 1, c)));
            for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = F.add(h(r, j + 1), F.mul(u, h(r, i)));
        }
    }
    // Leading principal minors of the Hessenberg form: p_k in terms of p_{k-1}, ..., p_0.
    std::vector<Polynomial> p;
    p.push_back(Polynomial::constant(F, 1));
    const Polynomial x = Polynomial::x(F);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t kk = k - 1;
        Polynomial pk = (x - Polynomial::constant(F, h(kk, kk))) * p[k - 1];
        Residue sub_prod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            sub_prod = F.mul(sub_prod, h(kk - i + 1, kk - i));
            Residue coef = F.mul(h(kk - i, kk), sub_prod);
            if (coef != 0) pk = pk - p[k - i - 1].scaled(coef);
        }
        p.push_back(std::move(pk));
    }
    return p.back();
}

Matrix companion_matrix(const Polynomial& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
    const PrimeField& F = f.field();
    const std::size_t d = static_cast<std::size_t>(f.degree());
    Matrix c(F, d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = 1;
    for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = F.neg(f.coeff(i));
    return c;
}

}  // namespace leibniz
