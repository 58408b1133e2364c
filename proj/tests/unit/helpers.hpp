#pragma once

#include <random>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/polynomial.hpp"
#include "leibniz/subspace.hpp"

namespace testing {

using namespace leibniz;

inline std::vector<Vec> all_vectors(PrimeField F, std::size_t n) {
    std::vector<Vec> out;
    Vec v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = n;
        while (i > 0 && ++v[i - 1] == F.p()) v[--i] = 0;
        if (i == 0) return out;
    }
}

inline Vec random_vector(PrimeField F, std::size_t n, std::mt19937_64& rng) {
    Vec v(n);
    for (auto& x : v) x = static_cast<Residue>(rng() % F.p());
    return v;
}

inline Polynomial random_monic(PrimeField F, std::size_t deg, std::mt19937_64& rng) {
    std::vector<Residue> c(deg + 1);
    for (auto& x : c) x = static_cast<Residue>(rng() % F.p());
    c[deg] = 1;
    return Polynomial(F, c);
}

/// Irreducibility by trial division over every monic of degree 1..deg/2.
inline bool irreducible_by_trial(const Polynomial& f) {
    if (f.degree() < 1) return false;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(f.degree()); ++d)
        for (const auto& q : monic_polynomials(f.field(), d))
            if ((f % q).is_zero()) return false;
    return true;
}

/// Span of {x^2 : x in L}, by enumerating every element.
inline Subspace kernel_by_squares(const LeibnizAlgebra& L) {
    std::vector<Vec> squares;
    for (const auto& x : all_vectors(L.field(), L.dim())) squares.push_back(L.multiply(x, x));
    return canonicalize(L.field(), L.dim(), squares);
}

}  // namespace testing
