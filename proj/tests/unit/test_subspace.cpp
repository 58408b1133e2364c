#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "helpers.hpp"
#include "leibniz/errors.hpp"

using namespace leibniz;
using testing::all_vectors;
using testing::random_vector;

namespace {

Subspace span(PrimeField F, std::size_t n, std::vector<Vec> vs) { return canonicalize(F, n, vs); }

Subspace random_subspace(PrimeField F, std::size_t n, std::mt19937_64& rng) {
    std::vector<Vec> vs;
    const std::size_t k = rng() % (n + 2);
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(F, n, rng));
    return canonicalize(F, n, vs);
}

}  // namespace

TEST_CASE("canonicalize examples") {
    const PrimeField F2(2), F3(3);
    auto s = span(F2, 3, {{1, 1, 0}, {0, 1, 0}});
    CHECK(s.dim() == 2);
    CHECK(s.basis() == std::vector<Vec>{{1, 0, 0}, {0, 1, 0}});
    CHECK(span(F3, 2, {{2, 0}}).basis() == std::vector<Vec>{{1, 0}});
    CHECK(span(F2, 3, {}).dim() == 0);
    CHECK(span(F2, 0, {}).dim() == 0);
    CHECK_THROWS_AS(span(F2, 3, {{1, 0}}), DimensionMismatch);
}

TEST_CASE("intersect and sum examples") {
    const PrimeField F2(2), F3(3), F5(5);
    const auto a = span(F2, 2, {{1, 0}});
    const auto b = span(F2, 2, {{0, 1}});
    CHECK(intersect(a, a) == a);
    CHECK(intersect(a, b).dim() == 0);
    CHECK(sum(a, b) == Subspace::whole(F2, 2));
    CHECK(sum(a, Subspace(F2, 2)) == a);
    const auto c = span(F2, 3, {{1, 0, 0}, {0, 1, 0}});
    const auto d = span(F2, 3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(intersect(c, d) == span(F2, 3, {{0, 1, 0}}));
    CHECK(sum(span(F3, 3, {{1, 0, 0}}), span(F3, 3, {{1, 1, 0}})) == span(F3, 3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(intersect(a, c), DimensionMismatch);
    CHECK(contains(span(F5, 2, {{1, 2}}), Vec{2, 4}));
    CHECK_FALSE(contains(span(F2, 2, {{1, 1}}), Vec{1, 0}));
    CHECK(contains(c, Vec{0, 0, 0}));
}

TEST_CASE("intersect agrees with pointwise intersection") {
    std::mt19937_64 rng(11);
    const PrimeField F(3);
    const auto vs = all_vectors(F, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_subspace(F, 3, rng);
        const auto b = random_subspace(F, 3, rng);
        std::vector<Vec> common;
        for (const auto& v : vs)
            if (a.contains(v) && b.contains(v)) common.push_back(v);
        CHECK(intersect(a, b) == canonicalize(F, 3, common));
    }
}

TEST_CASE("canonicalize is idempotent and order-insensitive on random spans") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const PrimeField F(trial % 2 ? 3 : 2);
        const std::size_t n = 1 + rng() % 5;
        std::vector<Vec> vs;
        const std::size_t k = rng() % 6;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(F, n, rng));
        const auto s = canonicalize(F, n, vs);
        CHECK(canonicalize(F, n, s.basis()) == s);
        std::shuffle(vs.begin(), vs.end(), rng);
        CHECK(canonicalize(F, n, vs) == s);
        for (const auto& v : vs) CHECK(s.contains(v));
    }
}

TEST_CASE("modular law of dimensions on GF(2)^5") {
    std::mt19937_64 rng(2);
    const PrimeField F(2);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_subspace(F, 5, rng);
        const auto b = random_subspace(F, 5, rng);
        CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("subspace enumeration matches Gaussian binomial counts") {
    for (std::uint32_t p : {2u, 3u}) {
        const PrimeField F(p);
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto all = all_subspaces(F, n);
            CHECK(all.size() == count_subspaces(p, n));
            std::set<Subspace> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
            CHECK(std::is_sorted(all.begin(), all.end(),
                                 [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); }));
        }
    }
    CHECK(count_subspaces(2, 3) == 16);
    CHECK(count_subspaces(3, 2) == 6);
}

TEST_CASE("enumeration respects the budget") {
    CHECK(count_subspaces(2, 9) > 1'000'000);
    CHECK_THROWS_AS(all_subspaces(PrimeField(2), 9), BudgetExceeded);
    setenv("LEIBNIZ_BUDGET", "10", 1);
    CHECK(subspace_budget() == 10);
    CHECK_THROWS_AS(all_subspaces(PrimeField(2), 3), BudgetExceeded);
    unsetenv("LEIBNIZ_BUDGET");
    CHECK(subspace_budget() == 1'000'000);
}

TEST_CASE("null and column spaces") {
    const PrimeField F(2);
    const Matrix m(F, 2, 3, {1, 1, 0, 0, 1, 1});
    CHECK(null_space(m) == span(F, 3, {{1, 1, 1}}));
    CHECK(column_space(m) == Subspace::whole(F, 2));
}

TEST_CASE("ordering is by dimension then basis") {
    const PrimeField F(2);
    const auto z = Subspace(F, 2);
    const auto l = span(F, 2, {{0, 1}});
    const auto w = Subspace::whole(F, 2);
    CHECK(z < l);
    CHECK(l < w);
    CHECK(span(F, 2, {{0, 1}}) < span(F, 2, {{1, 0}}));
    CHECK(SubspaceHash{}(l) == SubspaceHash{}(span(F, 2, {{0, 1}})));
}
