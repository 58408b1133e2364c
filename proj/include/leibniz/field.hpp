#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "leibniz/errors.hpp"

namespace leibniz {

/// A residue in [0, p). The modulus travels separately in a PrimeField.
using Residue = std::uint32_t;

/// Coordinate vector over GF(p), indexed by basis position.
using Vec = std::vector<Residue>;

/**
 * The prime field GF(p) for 2 <= p <= 2^16.
 *
 * Arithmetic works on bare residues so that vectors and matrices can be
 * plain containers of Residue; primality is checked once at construction.
 */
class PrimeField {
public:
    static constexpr std::uint32_t kMaxPrime = 1u << 16;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    Residue reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const noexcept;
    /// Throws DivisionByZero for a == 0.
    Residue inv(Residue a) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

/// A field element bundled with its field; used where scalars are handled one at a time.
class FieldElement {
public:
    FieldElement(PrimeField field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

    Residue value() const noexcept { return value_; }
    const PrimeField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement inverse() const { return {field_, field_.inv(value_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }

    bool operator==(const FieldElement& o) const noexcept {
        return field_ == o.field_ && value_ == o.value_;
    }

private:
    PrimeField field_;
    Residue value_;
};

FieldElement inverse(const FieldElement& a);

// Vector helpers. All vectors passed together must share a length.

bool is_zero(std::span<const Residue> v) noexcept;
Vec zero_vector(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t i);
/// y += c * x
void axpy(const PrimeField& F, Residue c, std::span<const Residue> x, std::span<Residue> y);
Vec scaled(const PrimeField& F, Residue c, std::span<const Residue> x);
Vec added(const PrimeField& F, std::span<const Residue> x, std::span<const Residue> y);

}  // namespace leibniz
