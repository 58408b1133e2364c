#include <doctest.h>

#include "leibniz/errors.hpp"
#include "leibniz/field.hpp"

using namespace leibniz;

TEST_CASE("field axioms hold exhaustively for small primes") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField F(p);
        for (Residue a = 0; a < p; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (Residue b = 0; b < p; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
                for (Residue c = 0; c < p; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("inverse examples") {
    const PrimeField F3(3), F5(5);
    CHECK(F3.inv(2) == 2);
    CHECK(F5.inv(2) == 3);
    CHECK(F5.inv(4) == 4);
    CHECK_THROWS_AS(F3.inv(0), DivisionByZero);
    const FieldElement two(F5, 2);
    CHECK(inverse(two).value() == 3);
    CHECK((two / two).value() == 1);
    CHECK_THROWS_AS(two / FieldElement(F5, 0), DivisionByZero);
}

TEST_CASE("field element arithmetic") {
    const PrimeField F(7);
    const FieldElement a(F, 3), b(F, 5);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((-a).value() == 4);
    CHECK(F.pow(3, 6) == 1);
    CHECK(F.reduce(-1) == 6);
}

TEST_CASE("non-primes are rejected") {
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(65535));
}

TEST_CASE("vector helpers") {
    const PrimeField F(3);
    Vec y{1, 2, 0};
    axpy(F, 2, Vec{1, 1, 1}, y);
    CHECK(y == Vec{0, 1, 2});
    CHECK(scaled(F, 2, Vec{1, 2, 0}) == Vec{2, 1, 0});
    CHECK(added(F, Vec{2, 2}, Vec{1, 2}) == Vec{0, 1});
    CHECK(is_zero(zero_vector(4)));
    CHECK(unit_vector(3, 1) == Vec{0, 1, 0});
}
