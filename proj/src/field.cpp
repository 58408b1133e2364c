#include "leibniz/field.hpp"

#include <string>

namespace leibniz {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p > kMaxPrime || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime in [2, 65536]");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
    Residue result = 1 % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("field elements from different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_))};
}

FieldElement inverse(const FieldElement& a) { return a.inverse(); }

bool is_zero(std::span<const Residue> v) noexcept {
    for (Residue x : v)
        if (x != 0) return false;
    return true;
}

Vec zero_vector(std::size_t n) { return Vec(n, 0); }

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v.at(i) = 1;
    return v;
}

void axpy(const PrimeField& F, Residue c, std::span<const Residue> x, std::span<Residue> y) {
    if (x.size() != y.size()) throw DimensionMismatch("axpy: vector lengths differ");
    if (c == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) y[i] = F.add(y[i], F.mul(c, x[i]));
}

Vec scaled(const PrimeField& F, Residue c, std::span<const Residue> x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.mul(c, x[i]);
    return out;
}

Vec added(const PrimeField& F, std::span<const Residue> x, std::span<const Residue> y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector lengths differ");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.add(x[i], y[i]);
    return out;
}

}  // namespace leibniz
