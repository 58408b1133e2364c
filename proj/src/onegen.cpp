#include "leibniz/onegen.hpp"

#include <algorithm>
#include <sstream>

namespace leibniz {

Vec OneGeneratorData::embed(std::span<const Residue> v_coords) const {
    if (v_coords.size() != power_basis.size()) throw DimensionMismatch("V coordinate length mismatch");
    Vec out(algebra.dim(), 0);
    for (std::size_t i = 0; i < v_coords.size(); ++i) axpy(algebra.field(), v_coords[i], power_basis[i], out);
    return out;
}

std::string Signature::to_string() const {
    std::ostringstream out;
    out << '[' << r << '|';
    for (std::size_t i = 0; i < chain_lengths.size(); ++i) out << (i ? "," : "") << chain_lengths[i];
    out << '|';
    for (std::size_t i = 0; i < degrees.size(); ++i) out << (i ? "," : "") << degrees[i];
    out << ']';
    return out.str();
}

Signature Signature::canonical() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k(); ++i) pairs.emplace_back(degrees[i], chain_lengths[i]);
    std::sort(pairs.begin(), pairs.end());
    Signature out;
    out.r = r;
    for (auto [d, len] : pairs) {
        out.degrees.push_back(d);
        out.chain_lengths.push_back(len);
    }
    return out;
}

OneGeneratorData one_generator_algebra(PrimeField field, const Polynomial& f) {
    if (!(f.field() == field)) throw std::invalid_argument("polynomial is over a different field");
    if (f.degree() < 1) throw std::invalid_argument("one_generator_algebra: deg f must be >= 1");
    if (!f.is_monic()) throw std::invalid_argument("one_generator_algebra: f must be monic");
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = m + 1;
    const Matrix theta = companion_matrix(f);

    LeibnizAlgebra L(field, n);
    std::vector<std::string> labels{"a"};
    for (std::size_t k = 1; k < n; ++k) labels.push_back("a^" + std::to_string(k + 1));
    L.set_labels(std::move(labels));
    L.set_product(0, 0, unit_vector(n, 1));
    // a · a^{k+1} = theta applied to the k-th basis vector of V; products with a left factor in V vanish.
    for (std::size_t k = 1; k < n; ++k) {
        Vec image = theta.apply(unit_vector(m, k - 1));
        Vec full(n, 0);
        std::copy(image.begin(), image.end(), full.begin() + 1);
        L.set_product(0, k, full);
    }
    return one_generator_data(L, unit_vector(n, 0));
}

OneGeneratorData one_generator_data(const LeibnizAlgebra& L, std::span<const Residue> a) {
    const PrimeField& F = L.field();
    const std::size_t n = L.dim();
    if (a.size() != n) throw DimensionMismatch("generator length != dim");
    if (n < 2) throw std::invalid_argument("one-generator analysis needs dim >= 2");
    Vec gen(a.begin(), a.end());

    std::vector<Vec> powers;  // a^2, ..., a^n
    Vec cur = L.multiply(gen, gen);
    for (std::size_t k = 2; k <= n; ++k) {
        powers.push_back(cur);
        cur = L.multiply(gen, cur);
    }
    const Subspace V = canonicalize(F, n, powers);
    std::vector<Vec> all = powers;
    all.push_back(gen);
    if (V.dim() != n - 1 || canonicalize(F, n, all).dim() != n)
        throw std::invalid_argument("vector does not generate the algebra");

    // theta in the power basis: column k is the image of a^{k+2}.
    const std::size_t m = n - 1;
    const Matrix P = Matrix::from_columns(F, n, powers);
    auto coords_in_V = [&](std::span<const Residue> w) {
        Matrix aug(F, n, m + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) aug(i, j) = P(i, j);
            aug(i, m) = w[i];
        }
        auto piv = aug.reduce_to_rref();
        if (!piv.empty() && piv.back() == m) throw std::logic_error("power of the generator left V");
        Vec c(m, 0);
        for (std::size_t i = 0; i < piv.size(); ++i) c[piv[i]] = aug(i, m);
        return c;
    };
    Matrix theta(F, m, m);
    for (std::size_t k = 0; k < m; ++k) {
        Vec img = coords_in_V(L.multiply(gen, powers[k]));
        for (std::size_t i = 0; i < m; ++i) theta(i, k) = img[i];
    }

    Polynomial f = characteristic_polynomial(theta);
    if (!(minimal_polynomial(theta) == f)) throw std::logic_error("theta is not cyclic on V");
    std::size_t r = 0;
    while (f.coeff(r) == 0) ++r;
    Polynomial g = f / Polynomial::monomial(F, r);

    Matrix theta_r = Polynomial::monomial(F, r).evaluate(theta);
    std::vector<Vec> v1;
    for (std::size_t j = 0; j < m; ++j) {
        Vec c = theta_r.column(j);
        Vec w(n, 0);
        for (std::size_t i = 0; i < m; ++i) axpy(F, c[i], powers[i], w);
        v1.push_back(std::move(w));
    }
    Subspace V1 = canonicalize(F, n, v1);
    auto fact = factor(g);
    return OneGeneratorData{L, std::move(gen), std::move(powers), V, std::move(theta), std::move(f), r,
                            std::move(g), std::move(V1), std::move(fact)};
}

std::optional<Vec> find_generator(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    const std::uint32_t p = L.field().p();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    if (total > static_cast<double>(subspace_budget())) throw BudgetExceeded("find_generator: p^n exceeds the budget");
    if (n == 0) return std::nullopt;
    Vec x(n, 0);
    while (true) {
        std::size_t i = n;
        while (i > 0 && ++x[i - 1] == p) x[--i] = 0;
        if (i == 0) return std::nullopt;
        if (generated_subalgebra(L, std::vector<Vec>{x}).dim() == n) return x;
    }
}

Vec nilpotent_generator(const OneGeneratorData& D) {
    const PrimeField& F = D.algebra.field();
    const Residue g0 = D.g.coeff(0);
    const Residue g0_inv = F.inv(g0);
    // h(x) = (g(x) - g(0)) / (x g(0)): shift the coefficients of g down by one.
    std::vector<Residue> hc;
    for (std::size_t i = 1; i < D.g.coeffs().size(); ++i) hc.push_back(F.mul(D.g.coeffs()[i], g0_inv));
    Polynomial h(F, std::move(hc));
    const std::size_t m = D.power_basis.size();
    Vec h_a2 = h.evaluate(D.theta).apply(unit_vector(m, 0));
    return added(F, D.generator, D.embed(h_a2));
}

Signature signature(const OneGeneratorData& D) {
    Signature s;
    s.r = D.r;
    for (const auto& fac : D.factorization.factors) {
        s.chain_lengths.push_back(fac.multiplicity);
        s.degrees.push_back(static_cast<std::size_t>(fac.prime.degree()));
    }
    return s;
}

namespace {

Subspace embed_column_space(const OneGeneratorData& D, const Matrix& op) {
    std::vector<Vec> vecs;
    for (std::size_t j = 0; j < op.cols(); ++j) vecs.push_back(D.embed(op.column(j)));
    return canonicalize(D.algebra.field(), D.algebra.dim(), vecs);
}

void check_tuple(const OneGeneratorData& D, std::span<const std::size_t> s) {
    if (s.size() != D.factorization.factors.size()) throw std::invalid_argument("exponent tuple has wrong length");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] > D.factorization.factors[i].multiplicity) throw std::invalid_argument("exponent exceeds multiplicity");
}

}  // namespace

Subspace invariant_subspace(const OneGeneratorData& D, std::span<const std::size_t> s) {
    check_tuple(D, s);
    const PrimeField& F = D.algebra.field();
    Polynomial q = Polynomial::monomial(F, D.r);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& fac = D.factorization.factors[i];
        for (std::size_t e = s[i]; e < fac.multiplicity; ++e) q = q * fac.prime;
    }
    return embed_column_space(D, q.evaluate(D.theta));
}

Subspace invariant_subspace_by_kernel(const OneGeneratorData& D, std::span<const std::size_t> s) {
    check_tuple(D, s);
    const PrimeField& F = D.algebra.field();
    Polynomial q = Polynomial::constant(F, 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t e = 0; e < s[i]; ++e) q = q * D.factorization.factors[i].prime;
    std::vector<Vec> kernel;
    for (const auto& v : q.evaluate(D.theta).kernel()) kernel.push_back(D.embed(v));
    return intersect(canonicalize(F, D.algebra.dim(), kernel), D.V1);
}

std::vector<std::vector<std::size_t>> exponent_tuples(const Signature& sig) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(sig.k(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = sig.k();
        while (true) {
            if (i == 0) return out;
            --i;
            if (++cur[i] <= sig.chain_lengths[i]) break;
            cur[i] = 0;
        }
    }
}

std::vector<Subspace> classify_subalgebras_onegen(const OneGeneratorData& D) {
    const Vec b = nilpotent_generator(D);
    const Subspace B = generated_subalgebra(D.algebra, std::vector<Vec>{b});
    std::vector<Subspace> out;
    for (const auto& s : exponent_tuples(signature(D))) out.push_back(sum(B, invariant_subspace(D, s)));
    return out;
}

std::optional<DiamondWitness> diamond_witness(const LeibnizAlgebra& L) {
    if (L.dim() != 2) return std::nullopt;
    const PrimeField& F = L.field();
    const Subspace kernel = leibniz_kernel(L);
    if (kernel.dim() != 1) return std::nullopt;
    std::vector<Subspace> lines;
    for_each_subspace(F, 2, [&](const Subspace& s) {
        if (s.dim() == 1 && is_subalgebra(L, s)) lines.push_back(s);
    });
    if (lines.size() != 2) return std::nullopt;
    const Subspace& B = lines[0] == kernel ? lines[1] : lines[0];
    if (B == kernel || !(lines[0] == kernel || lines[1] == kernel)) return std::nullopt;
    Vec b = B.basis()[0];
    const Vec v = kernel.basis()[0];
    const Vec bv = L.multiply(b, v);
    const Residue lambda = bv[kernel.pivots()[0]];
    if (lambda == 0) return std::nullopt;
    b = scaled(F, F.inv(lambda), b);
    const Vec zero(2, 0);
    if (L.multiply(b, b) != zero || L.multiply(v, v) != zero || L.multiply(v, b) != zero || L.multiply(b, v) != v)
        return std::nullopt;
    return DiamondWitness{std::move(b), v};
}

LeibnizAlgebra diamond_algebra(PrimeField field) {
    LeibnizAlgebra L(field, 2);
    L.set_labels({"b", "v"});
    L.set_product(0, 1, Vec{0, 1});
    return L;
}

LeibnizAlgebra single_chain_example(PrimeField field) {
    LeibnizAlgebra L(field, 3);
    L.set_labels({"b", "v1", "v2"});
    L.set_product(0, 1, Vec{0, 1, 1});
    L.set_product(0, 2, Vec{0, 0, 1});
    return L;
}

}  // namespace leibniz
