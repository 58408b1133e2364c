#include "leibniz/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace leibniz {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

using Key = std::vector<std::size_t>;

// Relabels keys of both lattices by rank in sorted key order.
std::size_t assign_colors(const std::vector<Key>& ka, const std::vector<Key>& kb, std::vector<std::size_t>& ca,
                          std::vector<std::size_t>& cb) {
    std::map<Key, std::size_t> ids;
    for (const auto& k : ka) ids.emplace(k, 0);
    for (const auto& k : kb) ids.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    ca.resize(ka.size());
    cb.resize(kb.size());
    for (std::size_t i = 0; i < ka.size(); ++i) ca[i] = ids[ka[i]];
    for (std::size_t i = 0; i < kb.size(); ++i) cb[i] = ids[kb[i]];
    return ids.size();
}

Key initial_key(const Lattice& lat, std::size_t x) {
    Key k{lat.height(x),          lat.depth(x),        lat.upper_covers(x).size(),
          lat.lower_covers(x).size(), lat.up(x).count(), lat.down(x).count()};
    std::vector<std::size_t> filters;
    for (auto c : lat.upper_covers(x)) filters.push_back(lat.up(c).count());
    std::sort(filters.begin(), filters.end());
    k.insert(k.end(), filters.begin(), filters.end());
    return k;
}

Key refine_key(const Lattice& lat, const std::vector<std::size_t>& colors, std::size_t x) {
    Key k{colors[x]};
    std::vector<std::size_t> up, down;
    for (auto c : lat.upper_covers(x)) up.push_back(colors[c]);
    for (auto c : lat.lower_covers(x)) down.push_back(colors[c]);
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    k.insert(k.end(), up.begin(), up.end());
    k.push_back(kUnset);
    k.insert(k.end(), down.begin(), down.end());
    return k;
}

class Search {
public:
    Search(const Lattice& a, const Lattice& b, const IsomorphismOptions& opts) : a_(a), b_(b), opts_(opts) {}

    IsomorphismResult run() {
        IsomorphismResult result;
        if (a_.size() != b_.size() || opts_.limit == 0) return result;
        std::tie(ca_, cb_) = refined_colors(a_, b_);
        auto hist_a = ca_, hist_b = cb_;
        std::sort(hist_a.begin(), hist_a.end());
        std::sort(hist_b.begin(), hist_b.end());
        if (hist_a != hist_b) return result;
        for (const auto& [x, y] : opts_.pinned)
            if (x >= a_.size() || y >= b_.size() || ca_[x] != cb_[y]) return result;

        const std::size_t n = a_.size();
        std::size_t ncolors = 0;
        for (auto c : cb_) ncolors = std::max(ncolors, c + 1);
        members_.assign(ncolors, {});
        for (std::size_t y = 0; y < n; ++y) members_[cb_[y]].push_back(y);
        plan();
        fwd_.assign(n, kUnset);
        inv_.assign(n, kUnset);
        result_ = &result;
        dfs(0);
        return result;
    }

private:
    // Static placement order: pinned nodes first, then greedily the node with the
    // most already-placed cover neighbours (ties: smaller class, lower index).
    void plan() {
        const std::size_t n = a_.size();
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> placed_neighbours(n, 0);
        auto place = [&](std::size_t x) {
            placed[x] = true;
            order_.push_back(x);
            for (auto c : a_.upper_covers(x)) ++placed_neighbours[c];
            for (auto c : a_.lower_covers(x)) ++placed_neighbours[c];
        };
        for (const auto& [x, y] : opts_.pinned) {
            if (placed[x]) continue;
            pin_.emplace(order_.size(), y);
            place(x);
        }
        while (order_.size() < n) {
            std::size_t best = kUnset;
            for (std::size_t x = 0; x < n; ++x) {
                if (placed[x]) continue;
                if (best == kUnset) {
                    best = x;
                    continue;
                }
                if (placed_neighbours[x] != placed_neighbours[best]) {
                    if (placed_neighbours[x] > placed_neighbours[best]) best = x;
                    continue;
                }
                if (members_[ca_[x]].size() < members_[ca_[best]].size()) best = x;
            }
            place(best);
        }
        std::vector<bool> seen(n, false);
        anchor_.assign(n, {kUnset, false});
        for (std::size_t pos = 0; pos < n; ++pos) {
            const std::size_t x = order_[pos];
            for (auto c : a_.lower_covers(x))
                if (seen[c]) {
                    anchor_[pos] = {c, true};
                    break;
                }
            if (anchor_[pos].first == kUnset)
                for (auto c : a_.upper_covers(x))
                    if (seen[c]) {
                        anchor_[pos] = {c, false};
                        break;
                    }
            seen[x] = true;
        }
    }

    static bool contains(const std::vector<std::size_t>& v, std::size_t x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    }

    bool feasible(std::size_t x, std::size_t y) const {
        if (ca_[x] != cb_[y] || inv_[y] != kUnset) return false;
        std::size_t low = 0, up = 0;
        for (auto u : a_.lower_covers(x)) {
            if (fwd_[u] == kUnset) continue;
            if (!contains(b_.lower_covers(y), fwd_[u])) return false;
            ++low;
        }
        for (auto u : a_.upper_covers(x)) {
            if (fwd_[u] == kUnset) continue;
            if (!contains(b_.upper_covers(y), fwd_[u])) return false;
            ++up;
        }
        std::size_t low_b = 0, up_b = 0;
        for (auto w : b_.lower_covers(y)) low_b += inv_[w] != kUnset;
        for (auto w : b_.upper_covers(y)) up_b += inv_[w] != kUnset;
        return low == low_b && up == up_b;
    }

    // Returns true when the search should stop.
    bool dfs(std::size_t pos) {
        if (pos == order_.size()) {
            result_->maps.push_back(LatticeMap{fwd_});
            if (result_->maps.size() >= opts_.limit) {
                result_->limit_reached = true;
                return true;
            }
            return false;
        }
        const std::size_t x = order_[pos];
        auto try_candidate = [&](std::size_t y) {
            if (!feasible(x, y)) return false;
            fwd_[x] = y;
            inv_[y] = x;
            bool stop = dfs(pos + 1);
            fwd_[x] = kUnset;
            inv_[y] = kUnset;
            return stop;
        };
        if (auto it = pin_.find(pos); it != pin_.end()) return try_candidate(it->second);
        const auto [anchor, from_below] = anchor_[pos];
        const auto& candidates = anchor == kUnset ? members_[ca_[x]]
                                 : from_below     ? b_.upper_covers(fwd_[anchor])
                                                  : b_.lower_covers(fwd_[anchor]);
        for (auto y : candidates)
            if (try_candidate(y)) return true;
        return false;
    }

    const Lattice& a_;
    const Lattice& b_;
    const IsomorphismOptions& opts_;
    std::vector<std::size_t> ca_, cb_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::size_t> order_;
    std::map<std::size_t, std::size_t> pin_;
    std::vector<std::pair<std::size_t, bool>> anchor_;
    std::vector<std::size_t> fwd_, inv_;
    IsomorphismResult* result_ = nullptr;
};

}  // namespace

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refined_colors(const Lattice& a, const Lattice& b) {
    std::vector<Key> ka, kb;
    for (std::size_t x = 0; x < a.size(); ++x) ka.push_back(initial_key(a, x));
    for (std::size_t x = 0; x < b.size(); ++x) kb.push_back(initial_key(b, x));
    std::vector<std::size_t> ca, cb;
    std::size_t classes = assign_colors(ka, kb, ca, cb);
    while (true) {
        ka.clear();
        kb.clear();
        for (std::size_t x = 0; x < a.size(); ++x) ka.push_back(refine_key(a, ca, x));
        for (std::size_t x = 0; x < b.size(); ++x) kb.push_back(refine_key(b, cb, x));
        std::vector<std::size_t> na, nb;
        std::size_t next = assign_colors(ka, kb, na, nb);
        ca = std::move(na);
        cb = std::move(nb);
        if (next == classes) break;
        classes = next;
    }
    return {ca, cb};
}

IsomorphismResult find_isomorphisms(const Lattice& a, const Lattice& b, const IsomorphismOptions& options) {
    return Search(a, b, options).run();
}

IsomorphismResult find_isomorphisms(const Lattice& a, const Lattice& b, std::size_t limit) {
    IsomorphismOptions opts;
    opts.limit = limit;
    return find_isomorphisms(a, b, opts);
}

bool are_isomorphic(const Lattice& a, const Lattice& b) { return !find_isomorphisms(a, b, 1).empty(); }

bool is_order_isomorphism(const Lattice& a, const Lattice& b, const LatticeMap& map) {
    const std::size_t n = a.size();
    if (b.size() != n || map.image.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto y : map.image) {
        if (y >= n || hit[y]) return false;
        hit[y] = true;
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (a.leq(x, y) != b.leq(map.image[x], map.image[y])) return false;
    return true;
}

}  // namespace leibniz
