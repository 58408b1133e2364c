#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "leibniz/lattice.hpp"
#include "leibniz/onegen.hpp"
#include "leibniz/verify.hpp"

using namespace leibniz;

namespace {

Subspace span(PrimeField F, std::size_t n, std::vector<Vec> vs) { return canonicalize(F, n, vs); }

std::size_t node(const SubalgebraLattice& lat, const Subspace& s) {
    auto i = lat.index_of(s);
    REQUIRE(i);
    return *i;
}

std::vector<LeibnizAlgebra> catalog() {
    std::vector<LeibnizAlgebra> out;
    for (auto spec : {CatalogSpec::exhaustive(2, 2), CatalogSpec::exhaustive(3, 2), CatalogSpec::exhaustive(2, 3, true),
                      CatalogSpec::sampled(3, 3, 100, 5), CatalogSpec::one_generator(2, 4),
                      CatalogSpec::one_generator(3, 3)})
        for (auto& e : generate_catalog(spec)) out.push_back(std::move(e.algebra));
    return out;
}

bool preserves_meet_join(const Lattice& a, const Lattice& b, const LatticeMap& m) {
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (m(a.meet(x, y)) != b.meet(m(x), m(y)) || m(a.join(x, y)) != b.join(m(x), m(y))) return false;
    return true;
}

}  // namespace

TEST_CASE("abstract lattices") {
    CHECK(Lattice::chain(3).size() == 4);
    CHECK(Lattice::chain(3).length() == 3);
    const std::vector<std::size_t> ones{1, 1};
    const auto sq = Lattice::chain_product(ones);
    CHECK(sq.size() == 4);
    CHECK(sq.meet(1, 2) == 0);
    CHECK(sq.join(1, 2) == 3);
    CHECK(Lattice::chain_product(std::vector<std::size_t>{}).size() == 1);
    CHECK(Lattice::subspace_lattice(PrimeField(2), 2).size() == 5);
    CHECK(Lattice::subspace_lattice(PrimeField(3), 3).size() == 28);
    // two maximal elements, no top
    CHECK_THROWS_AS(Lattice::from_order(3, [](std::size_t x, std::size_t y) { return x == y || x == 0; }),
                    std::invalid_argument);
    // not a linear extension
    CHECK_THROWS_AS(Lattice::from_order(2, [](std::size_t x, std::size_t y) { return x == y || x == 1; }),
                    std::invalid_argument);
    // bowtie: 0 < 1,2 < 3,4 < 5 with 1,2 both below 3 and 4 has no join of 1 and 2
    auto bowtie = [](std::size_t x, std::size_t y) {
        if (x == y || x == 0 || y == 5) return true;
        return (x == 1 || x == 2) && (y == 3 || y == 4);
    };
    CHECK_THROWS_AS(Lattice::from_order(6, bowtie), std::invalid_argument);
}

TEST_CASE("enumeration examples") {
    const PrimeField F(2);
    const auto D = diamond_algebra(F);
    const auto nodes = enumerate_subalgebras(D);
    CHECK(nodes == std::vector<Subspace>{Subspace(F, 2), span(F, 2, {{0, 1}}), span(F, 2, {{1, 0}}),
                                         Subspace::whole(F, 2)});
    CHECK(enumerate_subalgebras(LeibnizAlgebra(F, 2)).size() == 5);
    const auto S = single_chain_example(F);
    const auto sn = enumerate_subalgebras(S);
    CHECK(sn.size() == 8);
    for (const auto& s : {span(F, 3, {{0, 1, 0}}), span(F, 3, {{0, 0, 1}}), span(F, 3, {{0, 1, 1}}),
                          span(F, 3, {{0, 1, 0}, {0, 0, 1}}), span(F, 3, {{1, 0, 0}}), span(F, 3, {{1, 0, 0}, {0, 0, 1}})})
        CHECK(std::find(sn.begin(), sn.end(), s) != sn.end());
}

TEST_CASE("lattice examples") {
    const PrimeField F(2);
    const auto D = diamond_algebra(F);
    const auto lat = build_lattice(D);
    CHECK(lat.order().length() == 2);
    const auto b = node(lat, span(F, 2, {{1, 0}}));
    const auto v = node(lat, span(F, 2, {{0, 1}}));
    CHECK(lat.kernel_node() == v);
    CHECK(lat.covers() == std::vector<std::pair<std::size_t, std::size_t>>{{0, v}, {0, b}, {v, 3}, {b, 3}});

    const auto one = build_lattice(LeibnizAlgebra(F, 1));
    CHECK(one.size() == 2);
    CHECK(one.order().length() == 1);

    const auto S = single_chain_example(F);
    const auto sl = build_lattice(S);
    CHECK(sl.size() == 8);
    const auto V = node(sl, span(F, 3, {{0, 1, 0}, {0, 0, 1}}));
    const auto Bv2 = node(sl, span(F, 3, {{1, 0, 0}, {0, 0, 1}}));
    CHECK(sl.kernel_node() == V);
    for (const auto& line : {span(F, 3, {{0, 1, 0}}), span(F, 3, {{0, 0, 1}}), span(F, 3, {{0, 1, 1}})})
        CHECK(sl.order().covers(node(sl, line), V));
    CHECK(sl.order().covers(V, sl.top()));
    CHECK(sl.order().covers(Bv2, sl.top()));
}

TEST_CASE("interval examples") {
    const PrimeField F(2);
    const auto S = single_chain_example(F);
    const auto lat = build_lattice(S);
    CHECK(interval(lat, lat.top(), lat.bottom()).size() == lat.size());
    const auto up = interval(lat, Subspace::whole(F, 3), span(F, 3, {{1, 0, 0}}));
    CHECK(up.size() == 3);
    CHECK(is_chain_product(up.order(), std::vector<std::size_t>{2}));
    CHECK_FALSE(up.kernel_node());
    const auto dl = build_lattice(diamond_algebra(F));
    CHECK(is_chain_product(interval(dl, dl.top(), dl.bottom()).order(), std::vector<std::size_t>{1, 1}));
    const auto b = node(lat, span(F, 3, {{1, 0, 0}}));
    const auto v1 = node(lat, span(F, 3, {{0, 1, 0}}));
    CHECK_THROWS_AS(interval(lat, b, v1), std::invalid_argument);
    CHECK_THROWS_AS(interval(lat, Subspace::whole(F, 3), span(F, 3, {{1, 1, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(interval(lat, 99, 0), std::invalid_argument);
}

TEST_CASE("isomorphism examples") {
    const PrimeField F(2);
    const auto dl = build_lattice(diamond_algebra(F));
    const auto autos = find_isomorphisms(dl.order(), dl.order());
    CHECK(autos.maps.size() == 2);
    const auto k = *dl.kernel_node();
    CHECK(std::count_if(autos.maps.begin(), autos.maps.end(), [&](const LatticeMap& m) { return m(k) != k; }) == 1);
    const auto c4 = Lattice::chain(3);
    CHECK(find_isomorphisms(c4, c4).maps.size() == 1);
    CHECK(find_isomorphisms(c4, dl.order()).empty());
    CHECK(find_isomorphisms(Lattice::subspace_lattice(F, 3), Lattice::subspace_lattice(F, 3)).maps.size() == 168);
    const auto capped = find_isomorphisms(Lattice::subspace_lattice(F, 3), Lattice::subspace_lattice(F, 3), 10);
    CHECK(capped.maps.size() == 10);
    CHECK(capped.limit_reached);
    IsomorphismOptions pin;
    pin.pinned = {{1, 2}};
    for (const auto& m : find_isomorphisms(dl.order(), dl.order(), pin).maps) CHECK(m(1) == 2);
}

TEST_CASE("chain products and vector space lattices") {
    const PrimeField F(2);
    CHECK(is_chain_product(build_lattice(diamond_algebra(F)).order(), std::vector<std::size_t>{1, 1}));
    for (std::size_t n = 0; n < 5; ++n) CHECK(is_chain_product(Lattice::chain(n), std::vector<std::size_t>{n}));
    CHECK_FALSE(is_chain_product(Lattice::chain(3), std::vector<std::size_t>{1, 1}));

    auto ab = is_vector_space_lattice(build_lattice(LeibnizAlgebra(F, 2)).order(), F);
    CHECK(ab.is_vector_space_lattice);
    CHECK(ab.dim == 2);
    CHECK_FALSE(is_vector_space_lattice(build_lattice(diamond_algebra(F)).order(), F).is_vector_space_lattice);
    const auto sl = build_lattice(single_chain_example(F));
    const auto lv = interval(sl, span(F, 3, {{0, 1, 0}, {0, 0, 1}}), Subspace(F, 3));
    auto vr = is_vector_space_lattice(lv.order(), F);
    CHECK(vr.is_vector_space_lattice);
    CHECK(vr.dim == 2);
}

TEST_CASE("pentagons and modularity") {
    const PrimeField F(2);
    const auto sl = build_lattice(single_chain_example(F));
    const auto& ord = sl.order();
    const auto zero = sl.bottom(), top = sl.top();
    const auto b = node(sl, span(F, 3, {{1, 0, 0}}));
    const auto bv2 = node(sl, span(F, 3, {{1, 0, 0}, {0, 0, 1}}));
    const auto v1 = node(sl, span(F, 3, {{0, 1, 0}}));
    const auto V = node(sl, span(F, 3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(is_pentagon(ord, Pentagon{zero, b, bv2, v1, top}));
    CHECK(is_pentagon(ord, Pentagon{zero, v1, V, b, top}));
    CHECK_FALSE(is_pentagon(ord, Pentagon{zero, b, V, v1, top}));
    const auto p = find_pentagon(ord);
    REQUIRE(p);
    CHECK(is_pentagon(ord, *p));
    CHECK(p->bottom == zero);
    CHECK(p->top == top);
    CHECK_FALSE(find_pentagon(Lattice::chain(4)));
    CHECK_FALSE(find_pentagon(build_lattice(diamond_algebra(F)).order()));
    CHECK_FALSE(find_pentagon(Lattice::subspace_lattice(F, 3)));
}

TEST_CASE("maximal subalgebras") {
    const PrimeField F(2);
    const auto sl = build_lattice(single_chain_example(F));
    auto mx = maximal_subalgebras(sl.order());
    std::vector<Subspace> got;
    for (auto i : mx) got.push_back(sl.node(i));
    std::sort(got.begin(), got.end());
    std::vector<Subspace> want{span(F, 3, {{1, 0, 0}, {0, 0, 1}}), span(F, 3, {{0, 1, 0}, {0, 0, 1}})};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(maximal_subalgebras(build_lattice(diamond_algebra(F)).order()).size() == 2);
    CHECK(maximal_subalgebras(Lattice::chain(3)).size() == 1);
}

TEST_CASE("meet is intersection, join is generated subalgebra, covers are the transitive reduction") {
    std::size_t built = 0;
    for (const auto& L : catalog()) {
        const auto lat = build_lattice(L);
        ++built;
        CHECK_FALSE(check_meet_join(L, lat));
        const auto& ord = lat.order();
        for (auto [lo, hi] : lat.covers()) {
            CHECK(ord.less(lo, hi));
            for (std::size_t z = 0; z < lat.size(); ++z) CHECK_FALSE((ord.less(lo, z) && ord.less(z, hi)));
        }
        for (std::size_t x = 0; x < lat.size(); ++x)
            for (std::size_t y = 0; y < lat.size(); ++y) {
                if (!ord.less(x, y)) continue;
                bool chain = ord.covers(x, y);
                for (std::size_t z = 0; z < lat.size() && !chain; ++z) chain = ord.less(x, z) && ord.less(z, y);
                CHECK(chain);
            }
    }
    CHECK(built > 900);
}

TEST_CASE("isomorphisms preserve meet and join (lattices up to 64 nodes)") {
    std::map<LatticeFingerprint, std::vector<SubalgebraLattice>> buckets;
    std::size_t maps = 0;
    for (const auto& L : catalog()) {
        auto lat = build_lattice(L);
        if (lat.size() > 64) continue;
        for (const auto& m : find_isomorphisms(lat.order(), lat.order(), 10).maps) {
            CHECK(is_order_isomorphism(lat.order(), lat.order(), m));
            CHECK(preserves_meet_join(lat.order(), lat.order(), m));
            ++maps;
        }
        auto& bucket = buckets[fingerprint(lat.order())];
        if (bucket.size() < 3) bucket.push_back(std::move(lat));
    }
    for (const auto& [fp, lats] : buckets)
        for (std::size_t i = 0; i + 1 < lats.size(); ++i)
            for (const auto& m : find_isomorphisms(lats[i].order(), lats[i + 1].order(), 20).maps) {
                CHECK(is_order_isomorphism(lats[i].order(), lats[i + 1].order(), m));
                CHECK(preserves_meet_join(lats[i].order(), lats[i + 1].order(), m));
                ++maps;
            }
    CHECK(maps > 900);
}

TEST_CASE("nilpotent one-generator lattices are {L} plus all subspaces of B^2") {
    for (std::uint32_t p : {2u, 3u}) {
        const PrimeField F(p);
        for (std::size_t r = 1; r <= 3; ++r) {
            const auto D = one_generator_algebra(F, Polynomial::monomial(F, r));
            const auto lat = build_lattice(D.algebra);
            CHECK(lat.size() == 1 + count_subspaces(p, r));
            for (std::size_t i = 0; i + 1 < lat.size(); ++i) CHECK(lat.node(i).is_subspace_of(D.V));
        }
    }
}

TEST_CASE("one-generator algebras with equal signature have isomorphic lattices") {
    for (std::uint32_t p : {2u, 3u}) {
        const PrimeField F(p);
        std::map<std::string, std::vector<SubalgebraLattice>> by_sig;
        for (std::size_t d = 1; d <= (p == 2 ? 5u : 3u); ++d)
            for (const auto& f : monic_polynomials(F, d)) {
                const auto D = one_generator_algebra(F, f);
                by_sig[signature(D).to_string()].push_back(build_lattice(D.algebra));
            }
        std::size_t pairs = 0;
        for (const auto& [sig, lats] : by_sig)
            for (std::size_t i = 1; i < lats.size(); ++i) {
                CHECK_MESSAGE(are_isomorphic(lats[0].order(), lats[i].order()), sig);
                ++pairs;
            }
        CHECK(pairs > 0);
    }
}
