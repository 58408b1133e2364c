#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "leibniz/lattice.hpp"
#include "leibniz/onegen.hpp"

using namespace leibniz;
using testing::random_monic;

namespace {

std::vector<OneGeneratorData> family() {
    std::vector<OneGeneratorData> out;
    for (auto [p, max_deg] : {std::pair{2u, 5u}, std::pair{3u, 3u}}) {
        const PrimeField F(p);
        for (std::size_t d = 1; d <= max_deg; ++d)
            for (const auto& f : monic_polynomials(F, d)) out.push_back(one_generator_algebra(F, f));
    }
    return out;
}

Subspace span(PrimeField F, std::size_t n, std::vector<Vec> vs) { return canonicalize(F, n, vs); }

}  // namespace

TEST_CASE("one-generator constructor examples") {
    const PrimeField F(2);
    const auto D = one_generator_algebra(F, Polynomial(F, {1, 1}));  // x - 1
    CHECK(D.algebra.multiply(unit_vector(2, 0), unit_vector(2, 0)) == unit_vector(2, 1));
    CHECK(D.algebra.multiply(unit_vector(2, 0), unit_vector(2, 1)) == unit_vector(2, 1));
    CHECK(D.r == 0);
    auto w = diamond_witness(D.algebra);
    REQUIRE(w);
    CHECK(w->b == Vec{1, 1});  // a - a^2
    CHECK(w->v == Vec{0, 1});  // a^2

    const auto N = one_generator_algebra(F, Polynomial::x(F));
    CHECK(is_zero(left_power(N.algebra, N.generator, 3)));
    CHECK(N.r == 1);

    CHECK_THROWS_AS(one_generator_algebra(F, Polynomial::constant(F, 1)), std::invalid_argument);
    const PrimeField F3(3);
    CHECK_THROWS_AS(one_generator_algebra(F3, Polynomial(F3, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(one_generator_data(diamond_algebra(F), Vec{0, 1}), std::invalid_argument);
}

TEST_CASE("signature examples") {
    const PrimeField F2(2), F3(3);
    CHECK(signature(one_generator_algebra(F2, Polynomial(F2, {1, 0, 1}))).to_string() == "[0|2|1]");
    CHECK(signature(one_generator_algebra(F3, Polynomial(F3, {1, 1, 1}))).to_string() == "[0|2|1]");
    CHECK(signature(one_generator_algebra(F2, Polynomial::monomial(F2, 3))).to_string() == "[3||]");
    const Polynomial f = Polynomial(F2, {1, 1}) * Polynomial(F2, {1, 1, 1});
    const auto sig = signature(one_generator_algebra(F2, f));
    CHECK(sig.to_string() == "[0|1,1|1,2]");
    CHECK(sig.k() == 2);
}

TEST_CASE("nilpotent generator examples") {
    const PrimeField F3(3);
    const auto D = one_generator_algebra(F3, Polynomial(F3, {2, 1}));  // x - 1
    const Vec b = nilpotent_generator(D);
    CHECK(b == Vec{1, 2});  // a - a^2
    CHECK(is_zero(D.algebra.multiply(b, b)));
}

TEST_CASE("classification examples") {
    const PrimeField F(2);
    const auto D = one_generator_algebra(F, Polynomial(F, {1, 1}));
    const auto off = classify_subalgebras_onegen(D);
    REQUIRE(off.size() == 2);
    CHECK(off[0] == span(F, 2, {nilpotent_generator(D)}));
    CHECK(off[1] == Subspace::whole(F, 2));

    const auto N = one_generator_algebra(F, Polynomial::x(F));
    CHECK(classify_subalgebras_onegen(N) == std::vector<Subspace>{Subspace::whole(F, 2)});

    const auto S = one_generator_algebra(F, Polynomial(F, {1, 0, 1}));
    CHECK(classify_subalgebras_onegen(S).size() == 3);
}

TEST_CASE("diamond witness examples") {
    const PrimeField F2(2), F3(3);
    CHECK_FALSE(diamond_witness(LeibnizAlgebra(F2, 2)));
    CHECK_FALSE(diamond_witness(single_chain_example(F2)));
    LeibnizAlgebra L(F3, 2);
    L.set_product(0, 1, Vec{0, 2});  // bv = 2v
    auto w = diamond_witness(L);
    REQUIRE(w);
    CHECK(w->b == Vec{2, 0});
    CHECK(L.multiply(w->b, w->v) == w->v);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto Dm = diamond_algebra(PrimeField(p));
        auto dw = diamond_witness(Dm);
        REQUIRE(dw);
        CHECK(is_zero(Dm.multiply(dw->b, dw->b)));
        CHECK(is_zero(Dm.multiply(dw->v, dw->v)));
        CHECK(is_zero(Dm.multiply(dw->v, dw->b)));
        CHECK(Dm.multiply(dw->b, dw->v) == dw->v);
    }
}

TEST_CASE("one-generator algebras satisfy the identity for random f") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const PrimeField F(trial % 2 ? 3 : 2);
        const auto f = random_monic(F, 1 + rng() % 5, rng);
        const auto D = one_generator_algebra(F, f);
        CHECK(check_left_leibniz(D.algebra));
        CHECK(D.f == f);
        CHECK(leibniz_kernel(D.algebra) == D.V);
    }
}

TEST_CASE("structure invariants of the one-generator data") {
    for (const auto& D : family()) {
        const PrimeField& F = D.algebra.field();
        const std::size_t m = D.power_basis.size();
        // V is cyclic, generated by a^2
        CHECK(minimal_polynomial(D.theta, unit_vector(m, 0)) == D.f);
        CHECK(minimal_polynomial(D.theta) == D.f);
        CHECK(characteristic_polynomial(D.theta) == D.f);
        CHECK(D.f == Polynomial::monomial(F, D.r) * D.g);
        // theta is invertible on V1
        std::vector<Vec> images;
        for (const auto& v : D.V1.basis()) images.push_back(D.algebra.multiply(D.generator, v));
        CHECK(canonicalize(F, D.algebra.dim(), images) == D.V1);
    }
}

TEST_CASE("nilpotent generator: b^(r+2) = 0 and b^(r+1) != 0 for r >= 1") {
    for (const auto& D : family()) {
        const Vec b = nilpotent_generator(D);
        CHECK(is_zero(left_power(D.algebra, b, D.r + 2)));
        if (D.r >= 1) CHECK_FALSE(is_zero(left_power(D.algebra, b, D.r + 1)));
        // b generates a nilpotent subalgebra complementing V1
        const auto B = generated_subalgebra(D.algebra, std::vector<Vec>{b});
        CHECK(B.dim() == D.r + 1);
        CHECK(intersect(B, D.V1).dim() == 0);
    }
}

TEST_CASE("classification: closed, distinct, counted, containing B") {
    for (const auto& D : family()) {
        const auto sig = signature(D);
        const auto off = classify_subalgebras_onegen(D);
        std::size_t expected = 1;
        for (auto len : sig.chain_lengths) expected *= len + 1;
        CHECK(off.size() == expected);
        CHECK(std::set<Subspace>(off.begin(), off.end()).size() == off.size());
        const auto B = generated_subalgebra(D.algebra, std::vector<Vec>{nilpotent_generator(D)});
        for (const auto& U : off) {
            CHECK(is_subalgebra(D.algebra, U));
            CHECK(B.is_subspace_of(U));
            CHECK_FALSE(U.is_subspace_of(D.V));
        }
        for (auto d : sig.degrees) CHECK(d >= 1);
        for (auto len : sig.chain_lengths) CHECK(len >= 1);
    }
}

TEST_CASE("image and kernel descriptions of V_s agree") {
    for (const auto& D : family()) {
        const auto sig = signature(D);
        for (const auto& s : exponent_tuples(sig)) {
            const auto Vs = invariant_subspace(D, s);
            CHECK(Vs == invariant_subspace_by_kernel(D, s));
            CHECK(Vs.is_subspace_of(D.V1));
            std::size_t dim = 0;
            for (std::size_t i = 0; i < s.size(); ++i) dim += s[i] * sig.degrees[i];
            CHECK(Vs.dim() == dim);
        }
    }
}

TEST_CASE("signature is invariant under change of generator") {
    std::mt19937_64 rng(22);
    std::size_t changed = 0;
    for (const auto& D : family()) {
        const PrimeField& F = D.algebra.field();
        const auto sig = signature(D);
        for (int t = 0; t < 3; ++t) {
            const auto lambda = static_cast<Residue>(1 + rng() % (F.p() - 1));
            Vec a2 = scaled(F, lambda, D.generator);
            for (const auto& v : D.power_basis) axpy(F, static_cast<Residue>(rng() % F.p()), v, a2);
            if (generated_subalgebra(D.algebra, std::vector<Vec>{a2}).dim() != D.algebra.dim()) continue;
            CHECK(signature(one_generator_data(D.algebra, a2)).equivalent(sig));
            ++changed;
        }
    }
    CHECK(changed > 100);
}

TEST_CASE("signature equivalence ignores the order of the pairs") {
    Signature a{0, {2, 1}, {1, 1}}, b{0, {1, 2}, {1, 1}}, c{0, {1, 2}, {1, 2}};
    CHECK_FALSE(a == b);
    CHECK(a.equivalent(b));
    CHECK_FALSE(a.equivalent(c));
    CHECK(b.canonical().to_string() == "[0|1,2|1,1]");
    // over GF(3), f = (x+1)^2 (x+2) and (x+1)(x+2)^2 differ only in which prime carries the square
    const PrimeField F(3);
    const Polynomial p1(F, {1, 1}), p2(F, {2, 1});
    const auto s1 = signature(one_generator_algebra(F, p1 * p1 * p2));
    const auto s2 = signature(one_generator_algebra(F, p1 * p2 * p2));
    CHECK(s1.equivalent(s2));
}

TEST_CASE("find_generator") {
    const PrimeField F(2);
    auto x = find_generator(diamond_algebra(F));
    REQUIRE(x);
    CHECK(generated_subalgebra(diamond_algebra(F), std::vector<Vec>{*x}).dim() == 2);
    CHECK_FALSE(find_generator(LeibnizAlgebra(F, 2)));
    CHECK(find_generator(single_chain_example(F)));
}
