#include "leibniz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace leibniz {

// ---------------------------------------------------------------- catalogs

CatalogSpec CatalogSpec::exhaustive(std::uint32_t p, std::size_t dim, bool allow_full_sweep) {
    CatalogSpec s;
    s.p = p;
    s.dim = dim;
    s.mode = CatalogMode::Exhaustive;
    s.allow_full_sweep = allow_full_sweep;
    return s;
}

CatalogSpec CatalogSpec::sampled(std::uint32_t p, std::size_t dim, std::size_t count, std::uint64_t seed) {
    CatalogSpec s;
    s.p = p;
    s.dim = dim;
    s.mode = CatalogMode::Sampled;
    s.count = count;
    s.seed = seed;
    return s;
}

CatalogSpec CatalogSpec::one_generator(std::uint32_t p, std::size_t max_deg) {
    CatalogSpec s;
    s.p = p;
    s.mode = CatalogMode::OneGenerator;
    s.max_deg = max_deg;
    return s;
}

void CatalogSpec::validate() const {
    PrimeField{p};
    switch (mode) {
    case CatalogMode::Exhaustive: {
        if (dim == 0) throw std::invalid_argument("exhaustive catalog needs dim >= 1");
        const double log2_tables = std::pow(static_cast<double>(dim), 3) * std::log2(static_cast<double>(p));
        if (dim > 2 && log2_tables > 28.0)
            throw BudgetExceeded("exhaustive catalog " + to_string() + " exceeds 2^28 tables");
        if (dim > 2 && !allow_full_sweep)
            throw std::invalid_argument("exhaustive catalog with dim >= 3 requires the full-sweep opt-in");
        break;
    }
    case CatalogMode::Sampled:
        if (dim == 0) throw std::invalid_argument("sampled catalog needs dim >= 1");
        if (count == 0) throw std::invalid_argument("sampled catalog needs count >= 1");
        break;
    case CatalogMode::OneGenerator:
        if (max_deg == 0) throw std::invalid_argument("one-generator catalog needs max_deg >= 1");
        break;
    }
}

std::string CatalogSpec::to_string() const {
    std::ostringstream out;
    switch (mode) {
    case CatalogMode::Exhaustive: out << "EXHAUSTIVE(p=" << p << ", n=" << dim << ")"; break;
    case CatalogMode::Sampled:
        out << "SAMPLED(p=" << p << ", n=" << dim << ", count=" << count << ", seed=" << seed << ")";
        break;
    case CatalogMode::OneGenerator: out << "ONE_GENERATOR(p=" << p << ", max_deg=" << max_deg << ")"; break;
    }
    return out.str();
}

namespace {

// Partial structure table with per-pair assignment flags; pairs are indexed i * n + j.
class PartialTable {
public:
    PartialTable(PrimeField field, std::size_t n)
        : F_(field), n_(n), table_(n * n * n, 0), assigned_(n * n, false) {
        values_ = 1;
        for (std::size_t i = 0; i < n; ++i) values_ *= field.p();
    }

    std::size_t pairs() const noexcept { return n_ * n_; }
    std::size_t value_count() const noexcept { return values_; }

    void assign(std::size_t pair, std::size_t value) {
        for (std::size_t k = 0; k < n_; ++k) {
            table_[pair * n_ + k] = static_cast<Residue>(value % F_.p());
            value /= F_.p();
        }
        assigned_[pair] = true;
    }
    void unassign(std::size_t pair) {
        std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(pair * n_), n_, 0);
        assigned_[pair] = false;
    }

    /// False iff some basis triple is fully determined and violates the identity.
    bool consistent() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (!triple_ok_or_open(i, j, k)) return false;
        return true;
    }

    LeibnizAlgebra algebra() const { return LeibnizAlgebra(F_, n_, table_); }
    const std::vector<Residue>& table() const noexcept { return table_; }

private:
    const Residue* prod(std::size_t i, std::size_t j) const { return table_.data() + (i * n_ + j) * n_; }

    // left: e_i · w (sum over w's support of e_i e_m); right: w · e_k.
    bool apply_left(std::size_t i, const Residue* w, Vec& out) const {
        for (std::size_t m = 0; m < n_; ++m) {
            if (w[m] == 0) continue;
            if (!assigned_[i * n_ + m]) return false;
            axpy(F_, w[m], std::span<const Residue>(prod(i, m), n_), out);
        }
        return true;
    }
    bool apply_right(const Residue* w, std::size_t k, Vec& out) const {
        for (std::size_t m = 0; m < n_; ++m) {
            if (w[m] == 0) continue;
            if (!assigned_[m * n_ + k]) return false;
            axpy(F_, w[m], std::span<const Residue>(prod(m, k), n_), out);
        }
        return true;
    }

    bool triple_ok_or_open(std::size_t i, std::size_t j, std::size_t k) const {
        if (!assigned_[j * n_ + k] || !assigned_[i * n_ + j] || !assigned_[i * n_ + k]) return true;
        Vec lhs(n_, 0), rhs(n_, 0);
        if (!apply_left(i, prod(j, k), lhs)) return true;
        if (!apply_right(prod(i, j), k, rhs)) return true;
        if (!apply_left(j, prod(i, k), rhs)) return true;
        return lhs == rhs;
    }

    PrimeField F_;
    std::size_t n_;
    std::vector<Residue> table_;
    std::vector<bool> assigned_;
    std::size_t values_;
};

void exhaustive_dfs(PartialTable& t, std::size_t pair, std::vector<LeibnizAlgebra>& out) {
    if (pair == t.pairs()) {
        out.push_back(t.algebra());
        return;
    }
    for (std::size_t v = 0; v < t.value_count(); ++v) {
        t.assign(pair, v);
        if (t.consistent()) exhaustive_dfs(t, pair + 1, out);
    }
    t.unassign(pair);
}

// Randomized depth-first search for one complete table; gives up after `budget` nodes.
bool random_dfs(PartialTable& t, std::size_t pair, std::mt19937_64& rng, std::size_t& budget) {
    if (pair == t.pairs()) return true;
    std::vector<std::size_t> order(t.value_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    // Favour the zero product half of the time so that sparse tables are well represented.
    if (rng() & 1) std::iter_swap(order.begin(), std::find(order.begin(), order.end(), 0));
    for (auto v : order) {
        if (budget == 0) break;
        --budget;
        t.assign(pair, v);
        if (t.consistent() && random_dfs(t, pair + 1, rng, budget)) return true;
    }
    t.unassign(pair);
    return false;
}

std::string table_id(const std::string& prefix, std::size_t index) {
    return prefix + "#" + std::to_string(index);
}

}  // namespace

std::vector<CatalogEntry> generate_catalog(const CatalogSpec& spec) {
    spec.validate();
    const PrimeField F(spec.p);
    std::vector<CatalogEntry> out;
    std::set<std::vector<Residue>> seen;
    auto add = [&](std::string id, LeibnizAlgebra L, std::optional<Polynomial> f) {
        if (!seen.insert(L.table()).second) return;
        out.push_back(CatalogEntry{std::move(id), std::move(L), std::move(f)});
    };
    const std::string prefix = spec.to_string();
    switch (spec.mode) {
    case CatalogMode::Exhaustive: {
        PartialTable t(F, spec.dim);
        std::vector<LeibnizAlgebra> found;
        exhaustive_dfs(t, 0, found);
        for (auto& L : found) add(table_id(prefix, out.size()), std::move(L), std::nullopt);
        break;
    }
    case CatalogMode::Sampled: {
        std::mt19937_64 rng(spec.seed);
        const std::size_t max_attempts = spec.count * 100;
        for (std::size_t attempt = 0; attempt < max_attempts && out.size() < spec.count; ++attempt) {
            PartialTable t(F, spec.dim);
            std::size_t budget = 200'000;
            if (!random_dfs(t, 0, rng, budget)) continue;
            add(table_id(prefix, out.size()), t.algebra(), std::nullopt);
        }
        break;
    }
    case CatalogMode::OneGenerator:
        for (std::size_t d = 1; d <= spec.max_deg; ++d)
            for (const auto& f : monic_polynomials(F, d)) {
                auto D = one_generator_algebra(F, f);
                add(prefix + " f=" + f.to_string(), std::move(D.algebra), f);
            }
        break;
    }
    return out;
}

std::vector<LeibnizAlgebra> exhaustive_by_post_filter(PrimeField field, std::size_t dim) {
    const std::size_t entries = dim * dim * dim;
    std::vector<LeibnizAlgebra> out;
    std::vector<Residue> table(entries, 0);
    while (true) {
        LeibnizAlgebra L(field, dim, table);
        if (check_left_leibniz(L)) out.push_back(std::move(L));
        // Mixed-radix increment with the last product varying fastest (coordinate 0 lowest),
        // matching the depth-first order of the pruned search.
        std::size_t i = 0;
        while (true) {
            if (i == entries) return out;
            const std::size_t pair = entries / dim - 1 - i / dim;
            const std::size_t coord = i % dim;
            Residue& c = table[pair * dim + coord];
            if (++c < field.p()) break;
            c = 0;
            ++i;
        }
    }
}

// ----------------------------------------------------------  kernel checks

ClassificationReport verify_onegen_classification(const OneGeneratorData& D) {
    ClassificationReport rep;
    const SubalgebraLattice lat = build_lattice(D.algebra);
    std::vector<Subspace> off_v;
    for (const auto& s : lat.nodes())
        if (!s.is_subspace_of(D.V)) off_v.push_back(s);
    auto predicted = classify_subalgebras_onegen(D);
    std::sort(predicted.begin(), predicted.end());
    const bool distinct = std::adjacent_find(predicted.begin(), predicted.end()) == predicted.end();
    rep.off_v_found = off_v.size();
    const Signature sig = signature(D);
    rep.off_v_predicted = 1;
    for (auto len : sig.chain_lengths) rep.off_v_predicted *= len + 1;
    rep.sets_match = distinct && predicted == off_v && predicted.size() == rep.off_v_predicted;

    const Subspace B = generated_subalgebra(D.algebra, std::vector<Vec>{nilpotent_generator(D)});
    rep.all_contain_b = std::all_of(off_v.begin(), off_v.end(), [&](const Subspace& s) { return B.is_subspace_of(s); });
    if (auto b_node = lat.index_of(B)) {
        const auto upper = interval(lat, lat.top(), *b_node);
        rep.interval_is_chain_product = is_chain_product(upper.order(), sig.chain_lengths);
    }
    rep.ok = rep.sets_match && rep.all_contain_b && rep.interval_is_chain_product;
    return rep;
}

namespace {

// For each t in `targets`, looks for a map with from -> t.
void targeted_search(const Lattice& a, const Lattice& b, std::size_t from, std::size_t expected,
                     const std::vector<std::size_t>& targets, KernelCheckReport& rep) {
    for (auto t : targets) {
        if (t == expected) continue;
        IsomorphismOptions opts;
        opts.limit = 1;
        opts.pinned = {{from, t}};
        ++rep.targeted_searches;
        auto found = find_isomorphisms(a, b, opts);
        if (!found.empty()) {
            rep.ok = false;
            rep.witness = found.maps.front();
            rep.mapped_node = t;
            return;
        }
    }
}

KernelCheckReport kernel_check(const Lattice& a, std::size_t ka, const Lattice& b, std::size_t kb, std::size_t cap) {
    KernelCheckReport rep;
    rep.expected_node = kb;
    if (a.size() != b.size() || fingerprint(a) != fingerprint(b)) {
        rep.isomorphic = false;
        return rep;
    }
    auto found = find_isomorphisms(a, b, cap);
    rep.isomorphisms_seen = found.maps.size();
    rep.cap_hit = found.limit_reached;
    if (found.empty()) {
        rep.isomorphic = false;
        return rep;
    }
    for (const auto& m : found.maps)
        if (m(ka) != kb) {
            rep.ok = false;
            rep.witness = m;
            rep.mapped_node = m(ka);
            return rep;
        }
    if (rep.cap_hit) {
        auto [ca, cb] = refined_colors(a, b);
        std::vector<std::size_t> targets;
        for (std::size_t t = 0; t < b.size(); ++t)
            if (cb[t] == ca[ka]) targets.push_back(t);
        targeted_search(a, b, ka, kb, targets, rep);
    }
    if (rep.ok) rep.mapped_node = kb;
    return rep;
}

std::size_t require_kernel(const SubalgebraLattice& lat) {
    if (!lat.kernel_node()) throw std::invalid_argument("lattice has no kernel node");
    return *lat.kernel_node();
}

}  // namespace

KernelCheckReport verify_kernel_fixed(const SubalgebraLattice& lat, std::size_t cap) {
    const std::size_t k = require_kernel(lat);
    return kernel_check(lat.order(), k, lat.order(), k, cap);
}

KernelCheckReport verify_kernel_fixed(const LeibnizAlgebra& L, std::size_t cap) {
    if (L.dim() < 3) throw std::invalid_argument("verify_kernel_fixed requires dim >= 3; use verify_diamond_exception");
    return verify_kernel_fixed(build_lattice(L), cap);
}

KernelPairReport verify_kernel_pair(const SubalgebraLattice& a, const SubalgebraLattice& b, std::size_t cap) {
    KernelPairReport rep;
    static_cast<KernelCheckReport&>(rep) = kernel_check(a.order(), require_kernel(a), b.order(), require_kernel(b), cap);
    return rep;
}

KernelPairReport verify_kernel_pair(const LeibnizAlgebra& a, const LeibnizAlgebra& b, std::size_t cap,
                                    const OneGeneratorData* onegen_a, const OneGeneratorData* onegen_b) {
    if (a.dim() < 3 || b.dim() < 3) throw std::invalid_argument("verify_kernel_pair requires dim >= 3 on both sides");
    auto rep = verify_kernel_pair(build_lattice(a), build_lattice(b), cap);
    if (rep.isomorphic && onegen_a && onegen_b) {
        rep.signatures_equal = signature(*onegen_a).equivalent(signature(*onegen_b));
        rep.ok = rep.ok && *rep.signatures_equal;
    }
    return rep;
}

DiamondExceptionReport verify_diamond_exception(const LeibnizAlgebra& L) {
    DiamondExceptionReport rep;
    if (L.dim() != 2) return rep;
    const auto lat = build_lattice(L);
    const std::size_t k = *lat.kernel_node();
    if (k == lat.bottom() || k == lat.top()) return rep;
    rep.status = DiamondStatus::KernelFixed;
    for (const auto& m : find_isomorphisms(lat.order(), lat.order()).maps)
        if (m(k) != k) {
            rep.status = DiamondStatus::KernelMoved;
            rep.moving_automorphism = m;
            rep.witness = diamond_witness(L);
            break;
        }
    return rep;
}

bool verify_diamond_exception(PrimeField field) {
    const auto rep = verify_diamond_exception(diamond_algebra(field));
    return rep.status == DiamondStatus::KernelMoved && rep.witness.has_value();
}

// ---------------------------------------------------------------- harness

namespace {

struct Item {
    CatalogEntry entry;
    std::optional<SubalgebraLattice> lattice;
    std::optional<OneGeneratorData> onegen;
    LatticeFingerprint fp;
};

}  // namespace

VerificationReport run_verification(const std::vector<CatalogSpec>& specs, const VerificationOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    std::vector<Item> items;
    for (const auto& spec : specs) {
        try {
            auto catalog = generate_catalog(spec);
            rep.catalogs.push_back({spec, catalog.size()});
            for (auto& e : catalog) items.push_back(Item{std::move(e), std::nullopt, std::nullopt, {}});
        } catch (const std::exception& ex) {
            rep.catalogs.push_back({spec, 0});
            rep.errors.push_back(spec.to_string() + ": " + ex.what());
        }
    }

    rep.diamond_exception_confirmed = verify_diamond_exception(PrimeField(2));

    for (auto& item : items) {
        const auto& L = item.entry.algebra;
        ++rep.algebras_checked;
        try {
            item.lattice = build_lattice(L);
            ++rep.lattices_built;
            item.fp = fingerprint(item.lattice->order());
            if (item.entry.polynomial) {
                item.onegen = one_generator_algebra(L.field(), *item.entry.polynomial);
                ++rep.classifications_checked;
                if (!verify_onegen_classification(*item.onegen).ok) {
                    ++rep.classification_failures;
                    rep.errors.push_back(item.entry.id + ": one-generator classification failed");
                }
            }
            if (L.dim() >= 3) {
                auto kr = verify_kernel_fixed(*item.lattice, options.isomorphism_cap);
                ++rep.kernel_fixed_checked;
                rep.isomorphisms_checked += kr.isomorphisms_seen + kr.targeted_searches;
                rep.cap_hits += kr.cap_hit;
                if (!kr.ok)
                    rep.violations.push_back(
                        {"kernel_fixed", {item.entry.id}, {L}, *kr.witness, kr.expected_node, kr.mapped_node});
            } else if (L.dim() == 2) {
                auto dr = verify_diamond_exception(L);
                if (dr.status == DiamondStatus::KernelMoved) {
                    ++rep.diamond_exceptions;
                    if (!dr.witness) ++rep.non_diamond_kernel_moves;
                }
            }
        } catch (const std::exception& ex) {
            item.lattice.reset();
            rep.errors.push_back(item.entry.id + ": " + ex.what());
        }
    }

    std::map<std::pair<std::uint32_t, LatticeFingerprint>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].lattice && items[i].entry.algebra.dim() >= 3)
            buckets[{items[i].entry.algebra.field().p(), items[i].fp}].push_back(i);
    for (const auto& [key, members] : buckets)
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                const Item& a = items[members[x]];
                const Item& b = items[members[y]];
                auto pr = verify_kernel_pair(*a.lattice, *b.lattice, options.isomorphism_cap);
                ++rep.pairs_checked;
                rep.isomorphisms_checked += pr.isomorphisms_seen + pr.targeted_searches;
                rep.cap_hits += pr.cap_hit;
                if (pr.isomorphic) ++rep.isomorphic_pairs;
                if (!pr.ok)
                    rep.violations.push_back({"kernel_pair",
                                              {a.entry.id, b.entry.id},
                                              {a.entry.algebra, b.entry.algebra},
                                              *pr.witness,
                                              pr.expected_node,
                                              pr.mapped_node});
                if (!pr.isomorphic || (!a.onegen && !b.onegen)) continue;
                const Item& known = a.onegen ? a : b;
                const Item& other = a.onegen ? b : a;
                std::optional<Signature> other_sig;
                if (other.onegen) {
                    other_sig = signature(*other.onegen);
                } else {
                    const auto& L = other.entry.algebra;
                    if (L.dim() > 4 || L.field().p() > 3) continue;
                    ++rep.onegen_recognition_checks;
                    try {
                        if (auto x = find_generator(L)) {
                            other_sig = signature(one_generator_data(L, *x));
                        } else {
                            ++rep.onegen_recognition_failures;
                            rep.errors.push_back(other.entry.id + ": lattice-isomorphic to " + known.entry.id +
                                                 " but not one-generator");
                            continue;
                        }
                    } catch (const std::exception& ex) {
                        rep.errors.push_back(other.entry.id + ": " + ex.what());
                        continue;
                    }
                }
                ++rep.signature_checks;
                if (!signature(*known.onegen).equivalent(*other_sig)) {
                    ++rep.signature_mismatches;
                    rep.errors.push_back(a.entry.id + " / " + b.entry.id + ": isomorphic lattices, different signatures");
                }
            }

    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& x, const Violation& y) { return x.algebra_ids < y.algebra_ids; });
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace leibniz
