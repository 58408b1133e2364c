#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "leibniz/errors.hpp"

using namespace leibniz;
using testing::irreducible_by_trial;
using testing::random_monic;

TEST_CASE("basic arithmetic and formatting") {
    const PrimeField F(3);
    const Polynomial f(F, {1, 0, 2, 1});  // x^3 + 2x^2 + 1
    CHECK(f.degree() == 3);
    CHECK(f.is_monic());
    CHECK(f.to_string() == "x^3 + 2x^2 + 1");
    CHECK(Polynomial(F).degree() == -1);
    CHECK(Polynomial(F, {0, 1}).to_string() == "x");
    const Polynomial g(F, {2, 1});  // x + 2
    const auto [q, r] = f.divmod(g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK(f.evaluate(1) == 1);
    CHECK(f.derivative() == Polynomial(F, {0, 1, 0}));
    CHECK_THROWS_AS(f.divmod(Polynomial(F)), DivisionByZero);
}

TEST_CASE("gcd and lcm") {
    const PrimeField F(2);
    const Polynomial a(F, {1, 1});        // x + 1
    const Polynomial b(F, {1, 1, 1});     // x^2 + x + 1
    CHECK(gcd(a * a * b, a * b * b) == a * b);
    CHECK(lcm(a, b) == a * b);
    CHECK(gcd(a, b) == Polynomial::constant(F, 1));
}

TEST_CASE("factor examples") {
    const PrimeField F2(2), F3(3);
    auto f1 = factor(Polynomial(F2, {1, 0, 1}));
    CHECK(f1.x_power == 0);
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0].prime == Polynomial(F2, {1, 1}));
    CHECK(f1.factors[0].multiplicity == 2);

    auto f2 = factor(Polynomial(F2, {0, 0, 1, 1}));
    CHECK(f2.x_power == 2);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].prime == Polynomial(F2, {1, 1}));

    auto f3 = factor(Polynomial(F3, {2, 0, 1}));
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0].prime == Polynomial(F3, {1, 1}));
    CHECK(f3.factors[1].prime == Polynomial(F3, {2, 1}));

    CHECK_THROWS(factor(Polynomial(F2)));
}

TEST_CASE("factor round-trips on random polynomials") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 500; ++trial) {
            const std::size_t deg = 1 + rng() % 8;
            Polynomial f = random_monic(F, deg, rng);
            if (trial % 5 == 0) f = f.scaled(static_cast<Residue>(1 + rng() % (p - 1)));
            const auto fac = factor(f);
            CHECK(fac.expand(F) == f);
            for (const auto& pp : fac.factors) {
                CHECK(pp.prime.is_monic());
                CHECK(pp.multiplicity >= 1);
                CHECK(irreducible_by_trial(pp.prime));
                CHECK(pp.prime.coeff(0) != 0);
            }
            for (std::size_t i = 1; i < fac.factors.size(); ++i) CHECK(fac.factors[i - 1].prime < fac.factors[i].prime);
        }
    }
}

TEST_CASE("factor splits equal-degree products too large for trial division") {
    std::mt19937_64 rng(4);
    for (auto [p, d] : {std::pair{2u, 21u}, std::pair{3u, 13u}, std::pair{2u, 22u}}) {
        const PrimeField F(p);
        std::vector<Polynomial> primes;
        while (primes.size() < 3) {
            auto q = random_monic(F, d, rng);
            if (q.coeff(0) != 0 && is_irreducible(q) && std::find(primes.begin(), primes.end(), q) == primes.end())
                primes.push_back(q);
        }
        std::sort(primes.begin(), primes.end());
        const Polynomial f = primes[0] * primes[1] * primes[1] * primes[2];
        const auto fac = factor(f);
        REQUIRE(fac.factors.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(fac.factors[i].prime == primes[i]);
        CHECK(fac.factors[1].multiplicity == 2);
        CHECK(fac.expand(F) == f);
    }
}

TEST_CASE("is_irreducible agrees with trial division") {
    for (std::uint32_t p : {2u, 3u}) {
        const PrimeField F(p);
        for (std::size_t d = 1; d <= 5; ++d)
            for (const auto& f : monic_polynomials(F, d)) CHECK(is_irreducible(f) == irreducible_by_trial(f));
    }
}

TEST_CASE("monic polynomial enumeration") {
    const PrimeField F(3);
    auto all = monic_polynomials(F, 2);
    CHECK(all.size() == 9);
    std::set<Polynomial> distinct(all.begin(), all.end());
    CHECK(distinct.size() == 9);
    for (const auto& f : all) CHECK((f.is_monic() && f.degree() == 2));
}

TEST_CASE("minimal polynomial examples") {
    for (std::uint32_t p : {2u, 3u}) {
        const PrimeField F(p);
        for (std::size_t n = 1; n <= 3; ++n) {
            CHECK(minimal_polynomial(Matrix::identity(F, n)) == Polynomial(F, {F.neg(1), 1}));
            CHECK(minimal_polynomial(Matrix(F, n, n)) == Polynomial::x(F));
        }
    }
    const PrimeField F2(2);
    const Polynomial f(F2, {1, 1, 1});
    CHECK(minimal_polynomial(companion_matrix(f)) == f);
}

TEST_CASE("minimal polynomial annihilates and divides the characteristic polynomial") {
    std::mt19937_64 rng(4);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t n = 1 + rng() % 5;
            std::vector<Residue> e(n * n);
            // sparse matrices make repeated eigenvalues and small minimal polynomials likely
            for (auto& x : e) x = rng() % 3 == 0 ? static_cast<Residue>(rng() % p) : 0;
            const Matrix m(F, n, n, e);
            const auto mu = minimal_polynomial(m);
            const auto chi = characteristic_polynomial(m);
            CHECK(mu.is_monic());
            CHECK(mu.evaluate(m).is_zero());
            CHECK(chi.degree() == static_cast<int>(n));
            CHECK(chi.evaluate(m).is_zero());
            CHECK((chi % mu).is_zero());
            const Vec v = testing::random_vector(F, n, rng);
            const auto mv = minimal_polynomial(m, v);
            CHECK(is_zero(mv.evaluate(m).apply(v)));
            CHECK((mu % mv).is_zero());
        }
    }
}

TEST_CASE("companion matrices realize their polynomial") {
    std::mt19937_64 rng(6);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField F(p);
        for (int trial = 0; trial < 50; ++trial) {
            const auto f = random_monic(F, 1 + rng() % 6, rng);
            const auto c = companion_matrix(f);
            CHECK(characteristic_polynomial(c) == f);
            CHECK(minimal_polynomial(c) == f);
        }
    }
}
