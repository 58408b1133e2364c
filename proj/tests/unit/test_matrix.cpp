#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/matrix.hpp"

using namespace leibniz;

TEST_CASE("rref and rank") {
    const PrimeField F(3);
    Matrix m(F, 2, 3, {1, 2, 0, 2, 1, 0});
    CHECK(m.rank() == 1);
    auto piv = m.reduce_to_rref();
    CHECK(piv == std::vector<std::size_t>{0});
    CHECK(m == Matrix(F, 2, 3, {1, 2, 0, 0, 0, 0}));
}

TEST_CASE("kernel vectors are annihilated and count is nullity") {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
            std::vector<Residue> e(r * c);
            for (auto& x : e) x = static_cast<Residue>(rng() % p);
            const Matrix m(F, r, c, e);
            const auto ker = m.kernel();
            CHECK(ker.size() + m.rank() == c);
            for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
        }
    }
}

TEST_CASE("products, identity and transpose") {
    const PrimeField F(5);
    const Matrix a(F, 2, 2, {1, 2, 3, 4});
    CHECK(a * Matrix::identity(F, 2) == a);
    CHECK((a * a) == Matrix(F, 2, 2, {2, 0, 0, 2}));
    CHECK(a.transposed() == Matrix(F, 2, 2, {1, 3, 2, 4}));
    CHECK((a + a.scaled(4)).is_zero());
    CHECK(a.apply(Vec{1, 1}) == Vec{3, 2});
    CHECK(a.column(1) == Vec{2, 4});
    CHECK_THROWS_AS(a * Matrix(F, 3, 1), DimensionMismatch);
}

TEST_CASE("from rows and columns agree under transpose") {
    const PrimeField F(2);
    const std::vector<Vec> vs{{1, 0, 1}, {0, 1, 1}};
    CHECK(Matrix::from_rows(F, 3, vs).transposed() == Matrix::from_columns(F, 3, vs));
}
