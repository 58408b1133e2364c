#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/field.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// Univariate polynomial over GF(p); coefficients lowest degree first, trailing zeros stripped.
class Polynomial {
public:
    explicit Polynomial(PrimeField field) : field_(field) {}
    Polynomial(PrimeField field, std::vector<Residue> coeffs);
    Polynomial(PrimeField field, std::initializer_list<std::int64_t> coeffs);

    static Polynomial constant(PrimeField field, Residue c);
    static Polynomial x(PrimeField field);
    /// x^d
    static Polynomial monomial(PrimeField field, std::size_t d, Residue c = 1);

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    Polynomial monic() const;

    Residue evaluate(Residue t) const noexcept;
    /// f(M) for a square matrix M.
    Matrix evaluate(const Matrix& m) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
    Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }
    Polynomial scaled(Residue c) const;
    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    bool operator==(const Polynomial& o) const noexcept { return field_ == o.field_ && coeffs_ == o.coeffs_; }
    /// Degree first, then coefficients from the constant term upward.
    std::strong_ordering operator<=>(const Polynomial& o) const noexcept;

    /// Human form, e.g. "x^3 + 2x + 1".
    std::string to_string() const;

private:
    void strip() noexcept;

    PrimeField field_;
    std::vector<Residue> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
/// base^e mod modulus
Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);
bool is_irreducible(const Polynomial& f);

/// Monic polynomials of exact degree d in lexicographic order of the lower coefficients.
std::vector<Polynomial> monic_polynomials(PrimeField field, std::size_t degree);

struct PrimePowerFactor {
    Polynomial prime;
    std::size_t multiplicity;
    bool operator==(const PrimePowerFactor&) const = default;
};

/// f = unit * x^x_power * prod prime_i^multiplicity_i, primes monic, irreducible, distinct, != x.
struct PrimePowerFactorization {
    std::size_t x_power = 0;
    std::vector<PrimePowerFactor> factors;
    Residue unit = 1;

    Polynomial expand(PrimeField field) const;
};

/**
 * Factors a nonzero polynomial. Distinct-degree splitting by
 * gcd(f, x^{p^d} - x), then trial division by enumerated monic candidates of
 * that degree. Factors come out sorted by degree, then by coefficients.
 */
PrimePowerFactorization factor(const Polynomial& f);

/// Monic generator of {q : q(M) = 0}.
Polynomial minimal_polynomial(const Matrix& m);
/// Monic generator of {q : q(M) v = 0}.
Polynomial minimal_polynomial(const Matrix& m, std::span<const Residue> v);
/// det(xI - M), via reduction to Hessenberg form.
Polynomial characteristic_polynomial(const Matrix& m);
/// Companion matrix acting on the basis 1, x, ..., x^{d-1}: e_i -> e_{i+1}, e_{d-1} -> -sum c_i e_i.
Matrix companion_matrix(const Polynomial& f);

}  // namespace leibniz
