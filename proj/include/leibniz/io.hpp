#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/lattice.hpp"
#include "leibniz/polynomial.hpp"
#include "leibniz/verify.hpp"

namespace leibniz {

/**
 * Reads an algebra file:
 *   {"field": {"p": 2}, "dim": 2, "labels": ["b", "v"], "products": [[0, 1, [0, 1]]]}
 * Omitted products are zero. Throws ParseError (with the line for malformed
 * JSON) and IdentityFailure if the table breaks the left Leibniz identity.
 */
LeibnizAlgebra parse_algebra(std::string_view text);
/// As parse_algebra but skips the identity check.
LeibnizAlgebra parse_algebra_unchecked(std::string_view text);
LeibnizAlgebra load_algebra(const std::filesystem::path& path);
/// Inverse of parse_algebra; nonzero products only, in (i, j) order.
std::string serialize_algebra(const LeibnizAlgebra& L);

/// "x^3+2x+1", "x - 1", "2*x^2 + x". Coefficients are integers reduced mod p.
Polynomial parse_polynomial(PrimeField field, std::string_view text);

/// "2b + v1" using the algebra's labels; "0" for the zero vector.
std::string format_vector(const LeibnizAlgebra& L, std::span<const Residue> v);
/// "<b, v1 + v2>" on the RREF basis; "0" for the zero subspace.
std::string format_subspace(const LeibnizAlgebra& L, const Subspace& S);

std::string lattice_json(const LeibnizAlgebra& L, const SubalgebraLattice& lat);
/// Hasse diagram in DOT; the kernel node is drawn as a filled double circle.
std::string lattice_dot(const LeibnizAlgebra& L, const SubalgebraLattice& lat);

struct VerificationSpecFile {
    std::vector<CatalogSpec> catalogs;
    VerificationOptions options;
};
/**
 *   {"catalogs": [{"mode": "exhaustive", "p": 2, "dim": 2},
 *                 {"mode": "sampled", "p": 2, "dim": 3, "count": 500, "seed": 42},
 *                 {"mode": "one_generator", "p": 2, "max_deg": 5}],
 *    "isomorphism_cap": 10000}
 */
VerificationSpecFile parse_spec_file(std::string_view text);
/// Wall-clock time is left out unless asked for, so equal inputs give byte-identical reports.
std::string report_json(const VerificationReport& report, bool include_runtime = false);

}  // namespace leibniz
