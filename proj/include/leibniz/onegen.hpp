#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/polynomial.hpp"

namespace leibniz {

/**
 * Structure of a one-generator algebra L = alg<a> = <a, a^2, ..., a^n>.
 *
 * V = <a^2, ..., a^n> carries theta = left multiplication by a, written in
 * the basis a^2, ..., a^n (so a^2 is the first coordinate vector). f is both
 * the characteristic and the minimal polynomial of theta, f = x^r g with
 * g(0) != 0, and V1 = theta^r V.
 */
struct OneGeneratorData {
    LeibnizAlgebra algebra;
    Vec generator;
    /// a^2, ..., a^n as vectors of L; the coordinate basis for theta.
    std::vector<Vec> power_basis;
    Subspace V;
    Matrix theta;
    Polynomial f;
    std::size_t r = 0;
    Polynomial g;
    Subspace V1;
    PrimePowerFactorization factorization;

    /// Maps coordinates with respect to power_basis into L.
    Vec embed(std::span<const Residue> v_coords) const;
};

/// [r | r_1..r_k | d_1..d_k], paired entries ordered by (d_i, p_i).
struct Signature {
    std::size_t r = 0;
    std::vector<std::size_t> chain_lengths;
    std::vector<std::size_t> degrees;

    std::size_t k() const noexcept { return chain_lengths.size(); }
    std::string to_string() const;
    /// Entry-wise equality, including the order of the pairs.
    bool operator==(const Signature&) const = default;
    /// Pairs reordered by (d_i, r_i); independent of which primes p_i occur.
    Signature canonical() const;
    /// Equality up to reordering the (r_i, d_i) pairs.
    bool equivalent(const Signature& o) const { return canonical() == o.canonical(); }
};

/// b, v with b^2 = v^2 = vb = 0 and bv = v.
struct DiamondWitness {
    Vec b;
    Vec v;
};

/**
 * The one-generator algebra with basis a, a^2, ..., a^{m+1} (m = deg f)
 * where theta is the companion matrix of the monic f. Basis index 0 is a,
 * index k is a^{k+1}. Throws std::invalid_argument if f is not monic of degree >= 1.
 */
OneGeneratorData one_generator_algebra(PrimeField field, const Polynomial& f);

/// Analyzes L as generated by `a`. Throws std::invalid_argument if alg<a> != L.
OneGeneratorData one_generator_data(const LeibnizAlgebra& L, std::span<const Residue> a);

/**
 * Some x with alg<x> = L, found by exhaustion over F^n in lexicographic order;
 * nothing if L is not one-generator. Throws BudgetExceeded when p^n exceeds
 * the subspace budget.
 */
std::optional<Vec> find_generator(const LeibnizAlgebra& L);

/// b = a + h(theta) a^2 with h(x) = (g(x) - g(0)) / (x g(0)); b^{r+2} = 0.
Vec nilpotent_generator(const OneGeneratorData& D);

Signature signature(const OneGeneratorData& D);

/// V_s = theta^r prod p_i^{r_i - s_i}(theta) V, as a subspace of L.
Subspace invariant_subspace(const OneGeneratorData& D, std::span<const std::size_t> s);
/// The same subspace computed as ker(prod p_i^{s_i}(theta)) ∩ V1.
Subspace invariant_subspace_by_kernel(const OneGeneratorData& D, std::span<const std::size_t> s);

/// All tuples (s_1..s_k) with 0 <= s_i <= r_i, last index fastest.
std::vector<std::vector<std::size_t>> exponent_tuples(const Signature& sig);

/// U_s = B + V_s for every exponent tuple, in exponent_tuples order.
std::vector<Subspace> classify_subalgebras_onegen(const OneGeneratorData& D);

/// For a 2-dimensional diamond algebra returns (b, v), rescaling b so that bv = v; otherwise nothing.
std::optional<DiamondWitness> diamond_witness(const LeibnizAlgebra& L);

/// The diamond algebra on basis (b, v): bv = v, all other products zero.
LeibnizAlgebra diamond_algebra(PrimeField field);
/// The three-dimensional single-chain algebra on (b, v1, v2): b v1 = v1 + v2, b v2 = v2.
LeibnizAlgebra single_chain_example(PrimeField field);

}  // namespace leibniz
