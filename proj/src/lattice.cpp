#include "leibniz/lattice.hpp"

#include <algorithm>

namespace leibniz {

SubalgebraLattice::SubalgebraLattice(std::vector<Subspace> nodes, std::optional<std::size_t> kernel_node)
    : nodes_(std::move(nodes)), kernel_node_(kernel_node) {
    if (nodes_.empty()) throw std::invalid_argument("a subalgebra lattice needs at least one node");
    if (!std::is_sorted(nodes_.begin(), nodes_.end())) throw std::invalid_argument("nodes must be in canonical order");
    order_ = Lattice::from_order(nodes_.size(),
                                 [&](std::size_t x, std::size_t y) { return nodes_[x].is_subspace_of(nodes_[y]); });
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
}

std::optional<std::size_t> SubalgebraLattice::index_of(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Subspace> enumerate_subalgebras(const LeibnizAlgebra& L) {
    require_left_leibniz(L);
    std::vector<Subspace> out;
    for_each_subspace(L.field(), L.dim(), [&](const Subspace& s) {
        if (is_subalgebra(L, s)) out.push_back(s);
    });
    std::sort(out.begin(), out.end());
    return out;
}

SubalgebraLattice build_lattice(const LeibnizAlgebra& L) {
    auto nodes = enumerate_subalgebras(L);
    const Subspace kernel = leibniz_kernel(L);
    auto it = std::lower_bound(nodes.begin(), nodes.end(), kernel);
    if (it == nodes.end() || !(*it == kernel)) throw std::logic_error("Leibniz kernel is not a subalgebra");
    const auto k = static_cast<std::size_t>(it - nodes.begin());
    return SubalgebraLattice(std::move(nodes), k);
}

SubalgebraLattice interval(const SubalgebraLattice& lat, std::size_t upper, std::size_t lower) {
    if (upper >= lat.size() || lower >= lat.size()) throw std::invalid_argument("interval endpoint is not a node");
    if (!lat.order().leq(lower, upper)) throw std::invalid_argument("interval endpoints are not nested");
    std::vector<Subspace> nodes;
    std::optional<std::size_t> kernel;
    (lat.order().up(lower) & lat.order().down(upper)).for_each([&](std::size_t i) {
        if (lat.kernel_node() == i) kernel = nodes.size();
        nodes.push_back(lat.node(i));
    });
    return SubalgebraLattice(std::move(nodes), kernel);
}

SubalgebraLattice interval(const SubalgebraLattice& lat, const Subspace& upper, const Subspace& lower) {
    auto u = lat.index_of(upper);
    auto l = lat.index_of(lower);
    if (!u || !l) throw std::invalid_argument("interval endpoint is not a node");
    return interval(lat, *u, *l);
}

std::optional<std::pair<std::size_t, std::size_t>> check_meet_join(const LeibnizAlgebra& L,
                                                                   const SubalgebraLattice& lat) {
    const auto& ord = lat.order();
    for (std::size_t x = 0; x < lat.size(); ++x)
        for (std::size_t y = x + 1; y < lat.size(); ++y) {
            if (ord.comparable(x, y)) continue;
            const Subspace meet = intersect(lat.node(x), lat.node(y));
            const Subspace join = generated_subalgebra(L, sum(lat.node(x), lat.node(y)));
            if (!is_subalgebra(L, meet) || lat.index_of(meet) != ord.meet(x, y) || lat.index_of(join) != ord.join(x, y))
                return std::pair{x, y};
        }
    return std::nullopt;
}

bool is_chain_product(const Lattice& lat, std::span<const std::size_t> lengths) {
    std::size_t expected = 1;
    for (auto len : lengths) expected *= len + 1;
    if (expected != lat.size()) return false;
    return are_isomorphic(lat, Lattice::chain_product(lengths));
}

VectorSpaceLatticeResult is_vector_space_lattice(const Lattice& lat, PrimeField field) {
    const std::size_t d = lat.length();
    if (count_subspaces(field.p(), d) != lat.size()) return {false, d};
    return {are_isomorphic(lat, Lattice::subspace_lattice(field, d)), d};
}

bool is_pentagon(const Lattice& lat, const Pentagon& p) {
    return lat.less(p.bottom, p.low) && lat.less(p.low, p.high) && lat.less(p.high, p.top) &&
           lat.less(p.bottom, p.side) && lat.less(p.side, p.top) && !lat.comparable(p.side, p.high) &&
           !lat.comparable(p.side, p.low) && lat.meet(p.side, p.high) == p.bottom && lat.meet(p.side, p.low) == p.bottom &&
           lat.join(p.side, p.low) == p.top && lat.join(p.side, p.high) == p.top;
}

std::optional<Pentagon> find_pentagon(const Lattice& lat) {
    const std::size_t n = lat.size();
    for (std::size_t low = 0; low < n; ++low)
        for (std::size_t high = low + 1; high < n; ++high) {
            if (!lat.leq(low, high)) continue;
            for (std::size_t side = 0; side < n; ++side) {
                if (lat.comparable(side, high) || lat.comparable(side, low)) continue;
                const std::size_t m = lat.meet(side, high);
                const std::size_t j = lat.join(side, low);
                if (m == lat.meet(side, low) && j == lat.join(side, high)) return Pentagon{m, low, high, side, j};
            }
        }
    return std::nullopt;
}

std::vector<std::size_t> maximal_subalgebras(const Lattice& lat) { return lat.lower_covers(lat.top()); }

}  // namespace leibniz
