#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/lattice.hpp"
#include "leibniz/onegen.hpp"

namespace leibniz {

enum class CatalogMode { Exhaustive, Sampled, OneGenerator };

struct CatalogSpec {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    CatalogMode mode = CatalogMode::Exhaustive;
    std::size_t count = 0;     // Sampled
    std::uint64_t seed = 0;    // Sampled
    std::size_t max_deg = 0;   // OneGenerator
    /// Opt-in for exhaustive sweeps with dim >= 3.
    bool allow_full_sweep = false;

    static CatalogSpec exhaustive(std::uint32_t p, std::size_t dim, bool allow_full_sweep = false);
    static CatalogSpec sampled(std::uint32_t p, std::size_t dim, std::size_t count, std::uint64_t seed);
    static CatalogSpec one_generator(std::uint32_t p, std::size_t max_deg);

    /// Throws std::invalid_argument or BudgetExceeded when the spec may not run.
    void validate() const;
    std::string to_string() const;
};

struct CatalogEntry {
    std::string id;
    LeibnizAlgebra algebra;
    /// Set for one-generator entries: the polynomial the algebra was built from.
    std::optional<Polynomial> polynomial;
};

/**
 * Exhaustive: every table passing the left Leibniz identity, enumerated
 * depth-first over the products with a partial table abandoned as soon as a
 * fully determined basis triple fails. Sampled: randomized depth-first
 * search with the same pruning, seeded, until `count` distinct tables are
 * found. OneGenerator: one algebra per monic f with 1 <= deg f <= max_deg.
 * Entries are deduplicated by their products table.
 */
std::vector<CatalogEntry> generate_catalog(const CatalogSpec& spec);

/// Every table over GF(p)^n, filtered by check_left_leibniz afterwards. Reference for the pruned search.
std::vector<LeibnizAlgebra> exhaustive_by_post_filter(PrimeField field, std::size_t dim);

struct ClassificationReport {
    bool ok = false;
    std::size_t off_v_found = 0;     ///< subalgebras not contained in V, by enumeration
    std::size_t off_v_predicted = 0; ///< prod (r_i + 1)
    bool sets_match = false;
    bool interval_is_chain_product = false;
    bool all_contain_b = false;
};

/// Compares enumerated subalgebras off V against B + V_s, and L ÷ B against the chain product.
ClassificationReport verify_onegen_classification(const OneGeneratorData& D);

struct KernelCheckReport {
    bool ok = true;
    bool isomorphic = true;
    std::size_t isomorphisms_seen = 0;
    bool cap_hit = false;
    std::size_t targeted_searches = 0;
    /// A map sending the kernel elsewhere, when one exists.
    std::optional<LatticeMap> witness;
    std::size_t expected_node = 0;
    std::size_t mapped_node = 0;
};

/**
 * Checks that every automorphism of the lattice fixes the kernel node.
 * Enumerates up to `cap` automorphisms; beyond that the decision is made
 * exactly by searching, for every node t in the kernel's refined class, for
 * an automorphism pinned to kernel -> t.
 */
KernelCheckReport verify_kernel_fixed(const SubalgebraLattice& lat, std::size_t cap = 10'000);
/// Requires dim L >= 3.
KernelCheckReport verify_kernel_fixed(const LeibnizAlgebra& L, std::size_t cap = 10'000);

struct KernelPairReport : KernelCheckReport {
    /// Present when both sides are one-generator and the lattices are isomorphic.
    std::optional<bool> signatures_equal;
};

KernelPairReport verify_kernel_pair(const SubalgebraLattice& a, const SubalgebraLattice& b, std::size_t cap = 10'000);
/// Requires dim >= 3 on both sides. When one-generator data is supplied for both, also compares signatures.
KernelPairReport verify_kernel_pair(const LeibnizAlgebra& a, const LeibnizAlgebra& b, std::size_t cap = 10'000,
                                    const OneGeneratorData* onegen_a = nullptr,
                                    const OneGeneratorData* onegen_b = nullptr);

enum class DiamondStatus { KernelMoved, KernelFixed, Inapplicable };

struct DiamondExceptionReport {
    DiamondStatus status = DiamondStatus::Inapplicable;
    std::optional<LatticeMap> moving_automorphism;
    std::optional<DiamondWitness> witness;
};

/// For dim-2 algebras with nonzero proper kernel: does some lattice automorphism move the kernel?
DiamondExceptionReport verify_diamond_exception(const LeibnizAlgebra& L);
/// Builds the diamond algebra over `field` and confirms its kernel is moved.
bool verify_diamond_exception(PrimeField field = PrimeField(2));

struct Violation {
    std::string kind;  ///< "kernel_fixed" or "kernel_pair"
    std::vector<std::string> algebra_ids;
    std::vector<LeibnizAlgebra> algebras;
    LatticeMap map;
    std::size_t expected_node = 0;
    std::size_t mapped_node = 0;
};

struct CatalogSummary {
    CatalogSpec spec;
    std::size_t size = 0;
};

struct VerificationReport {
    std::vector<CatalogSummary> catalogs;
    std::size_t algebras_checked = 0;
    std::size_t lattices_built = 0;
    std::size_t isomorphisms_checked = 0;
    std::size_t kernel_fixed_checked = 0;
    std::size_t pairs_checked = 0;
    std::size_t isomorphic_pairs = 0;
    std::size_t cap_hits = 0;
    std::size_t classifications_checked = 0;
    std::size_t classification_failures = 0;
    std::size_t signature_checks = 0;
    std::size_t signature_mismatches = 0;
    /// Isomorphic pairs with one side one-generator: the other side (dim <= 4, p <= 3) must be too.
    std::size_t onegen_recognition_checks = 0;
    std::size_t onegen_recognition_failures = 0;
    std::vector<Violation> violations;
    std::size_t diamond_exceptions = 0;
    /// Dim-2 algebras whose kernel moved but which have no diamond witness (expected 0).
    std::size_t non_diamond_kernel_moves = 0;
    bool diamond_exception_confirmed = false;
    std::vector<std::string> errors;
    double runtime_seconds = 0.0;

    bool passed() const noexcept {
        return violations.empty() && classification_failures == 0 && signature_mismatches == 0 &&
               onegen_recognition_failures == 0 &&
               non_diamond_kernel_moves == 0 && errors.empty() && diamond_exception_confirmed;
    }
};

struct VerificationOptions {
    std::size_t isomorphism_cap = 10'000;
};

/**
 * Runs the classification check on one-generator entries, the kernel check on
 * every entry of dim >= 3, pair checks within buckets of equal (field,
 * lattice fingerprint), and the diamond exception. Per-item errors are
 * collected rather than aborting; results are independent of item order.
 */
VerificationReport run_verification(const std::vector<CatalogSpec>& specs, const VerificationOptions& options = {});

}  // namespace leibniz
