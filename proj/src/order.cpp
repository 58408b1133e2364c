#include "leibniz/order.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "leibniz/subspace.hpp"

namespace leibniz {

Lattice Lattice::from_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
    if (n == 0) throw std::invalid_argument("a lattice needs at least one node");
    Lattice lat;
    lat.up_.assign(n, NodeSet(n));
    lat.down_.assign(n, NodeSet(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && !leq(x, y)) continue;
            if (y < x) throw std::invalid_argument("node order is not a linear extension");
            lat.up_[x].set(y);
            lat.down_[y].set(x);
        }
    lat.finish();
    if (lat.up_[0].count() != n || lat.down_[n - 1].count() != n)
        throw std::invalid_argument("order has no bottom or no top");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            if (lat.comparable(x, y)) continue;
            auto ub = lat.up_[x] & lat.up_[y];
            auto lb = lat.down_[x] & lat.down_[y];
            if (!ub.is_subset_of(lat.up_[*ub.first()]) || !lb.is_subset_of(lat.down_[*lb.last()]))
                throw std::invalid_argument("order is not a lattice");
        }
    return lat;
}

void Lattice::finish() {
    const std::size_t n = up_.size();
    upper_covers_.assign(n, {});
    lower_covers_.assign(n, {});
    for (std::size_t y = 0; y < n; ++y) {
        // Maximal elements of the strict down-set, found from the highest index down.
        NodeSet shadowed(n);
        for (std::size_t x = y; x-- > 0;) {
            if (!down_[y].test(x) || shadowed.test(x)) continue;
            lower_covers_[y].push_back(x);
            shadowed |= down_[x];
        }
        std::reverse(lower_covers_[y].begin(), lower_covers_[y].end());
        for (auto x : lower_covers_[y]) upper_covers_[x].push_back(y);
    }
    height_.assign(n, 0);
    for (std::size_t y = 0; y < n; ++y)
        for (auto x : lower_covers_[y]) height_[y] = std::max(height_[y], height_[x] + 1);
    depth_.assign(n, 0);
    for (std::size_t x = n; x-- > 0;)
        for (auto y : upper_covers_[x]) depth_[x] = std::max(depth_[x], depth_[y] + 1);
}

Lattice Lattice::chain(std::size_t length) {
    return from_order(length + 1, [](std::size_t x, std::size_t y) { return x <= y; });
}

Lattice Lattice::product(const Lattice& a, const Lattice& b) {
    const std::size_t nb = b.size();
    // Index a_i * |b| + b_j is a linear extension of the product order.
    return from_order(a.size() * nb, [&](std::size_t x, std::size_t y) {
        return a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb);
    });
}

Lattice Lattice::chain_product(std::span<const std::size_t> lengths) {
    Lattice out = chain(0);
    for (auto len : lengths) out = product(out, chain(len));
    return out;
}

Lattice Lattice::subspace_lattice(PrimeField field, std::size_t d) {
    auto subspaces = all_subspaces(field, d);
    std::sort(subspaces.begin(), subspaces.end());
    return from_order(subspaces.size(),
                      [&](std::size_t x, std::size_t y) { return subspaces[x].is_subspace_of(subspaces[y]); });
}

bool Lattice::covers(std::size_t lower, std::size_t upper) const {
    const auto& c = upper_covers_[lower];
    return std::find(c.begin(), c.end(), upper) != c.end();
}

std::vector<std::pair<std::size_t, std::size_t>> Lattice::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
        for (auto y : upper_covers_[x]) out.emplace_back(x, y);
    return out;
}

std::size_t Lattice::meet(std::size_t x, std::size_t y) const { return *(down_[x] & down_[y]).last(); }

std::size_t Lattice::join(std::size_t x, std::size_t y) const { return *(up_[x] & up_[y]).first(); }

Lattice Lattice::induced(std::span<const std::size_t> nodes) const {
    return from_order(nodes.size(), [&](std::size_t x, std::size_t y) { return leq(nodes[x], nodes[y]); });
}

LatticeFingerprint fingerprint(const Lattice& lat) {
    LatticeFingerprint fp;
    fp.reserve(lat.size());
    for (std::size_t x = 0; x < lat.size(); ++x)
        fp.emplace_back(lat.height(x), lat.upper_covers(x).size(), lat.lower_covers(x).size());
    std::sort(fp.begin(), fp.end());
    return fp;
}

}  // namespace leibniz
