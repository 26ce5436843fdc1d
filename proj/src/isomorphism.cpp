#include <algorithm>
#include <map>
#include <tuple>

#include "logenr/dual_graph.hpp"

namespace logenr {
namespace {

// Index-based view of a graph for the search.
struct Compact {
    std::vector<std::vector<int>> mult;  // dense multiplicity table
    std::vector<std::vector<std::size_t>> adj;
};

Compact compact(const DualGraph& g) {
    const std::size_t n = g.size();
    Compact c{std::vector<std::vector<int>>(n, std::vector<int>(n, 0)), std::vector<std::vector<std::size_t>>(n)};
    for (const auto& [k, m] : g.edges()) {
        const auto a = g.index_of(k.first), b = g.index_of(k.second);
        c.mult[a][b] = c.mult[b][a] = m;
        c.adj[a].push_back(b);
        c.adj[b].push_back(a);
    }
    return c;
}

using Attr = std::tuple<Rational, Rational, int, int>;

Attr attributes(const CurveVertex& v) {
    return {v.self_int, v.coeff, static_cast<int>(v.kind), v.nodes};
}

// Joint colour refinement of both graphs: vertices of equal colour have equal
// attributes and equal multisets of (neighbour colour, multiplicity).
std::pair<std::vector<int>, std::vector<int>> refine(const DualGraph& g1, const Compact& c1, const DualGraph& g2,
                                                     const Compact& c2) {
    std::map<Attr, int> initial;
    for (const auto* g : {&g1, &g2})
        for (const auto& v : g->vertices()) initial.emplace(attributes(v), 0);
    int next = 0;
    for (auto& [a, id] : initial) id = next++;
    std::vector<int> col1, col2;
    for (const auto& v : g1.vertices()) col1.push_back(initial.at(attributes(v)));
    for (const auto& v : g2.vertices()) col2.push_back(initial.at(attributes(v)));

    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    auto signature = [](const Compact& c, const std::vector<int>& col, std::size_t v) {
        Signature s{col[v], {}};
        for (auto w : c.adj[v]) s.second.emplace_back(col[w], c.mult[v][w]);
        std::sort(s.second.begin(), s.second.end());
        return s;
    };
    std::size_t classes = initial.size();
    while (true) {
        std::map<Signature, int> ids;
        std::vector<Signature> s1, s2;
        for (std::size_t v = 0; v < col1.size(); ++v) s1.push_back(signature(c1, col1, v));
        for (std::size_t v = 0; v < col2.size(); ++v) s2.push_back(signature(c2, col2, v));
        for (const auto& s : s1) ids.emplace(s, 0);
        for (const auto& s : s2) ids.emplace(s, 0);
        int k = 0;
        for (auto& [s, id] : ids) id = k++;
        for (std::size_t v = 0; v < col1.size(); ++v) col1[v] = ids.at(s1[v]);
        for (std::size_t v = 0; v < col2.size(); ++v) col2[v] = ids.at(s2[v]);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {col1, col2};
}

class Search {
public:
    Search(const Compact& c1, const Compact& c2, std::vector<int> col1, std::vector<int> col2, std::size_t limit)
        : c1_(c1), c2_(c2), col1_(std::move(col1)), col2_(std::move(col2)), limit_(limit) {
        const std::size_t n = col1_.size();
        map_.assign(n, kUnset);
        used_.assign(n, false);
        order_ = search_order();
    }

    std::vector<std::vector<std::size_t>> run() {
        extend(0);
        return found_;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    // Rarest colour first, then breadth-first so that each vertex after the
    // first in a component has an already-mapped neighbour.
    std::vector<std::size_t> search_order() const {
        const std::size_t n = col1_.size();
        std::map<int, int> freq;
        for (int c : col1_) ++freq[c];
        std::vector<std::size_t> by_rarity(n);
        for (std::size_t i = 0; i < n; ++i) by_rarity[i] = i;
        std::stable_sort(by_rarity.begin(), by_rarity.end(),
                         [&](auto a, auto b) { return freq[col1_[a]] < freq[col1_[b]]; });
        std::vector<bool> queued(n, false);
        std::vector<std::size_t> order;
        for (auto root : by_rarity) {
            if (queued[root]) continue;
            std::vector<std::size_t> queue{root};
            queued[root] = true;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                order.push_back(queue[h]);
                for (auto w : c1_.adj[queue[h]])
                    if (!queued[w]) {
                        queued[w] = true;
                        queue.push_back(w);
                    }
            }
        }
        return order;
    }

    bool consistent(std::size_t u, std::size_t image) const {
        for (std::size_t w = 0; w < map_.size(); ++w) {
            if (map_[w] == kUnset) continue;
            if (c1_.mult[u][w] != c2_.mult[image][map_[w]]) return false;
        }
        return true;
    }

    void extend(std::size_t depth) {
        if (found_.size() >= limit_) return;
        if (depth == order_.size()) {
            found_.push_back(map_);
            return;
        }
        const std::size_t u = order_[depth];
        // If u has a mapped neighbour, only that neighbour's neighbours are candidates.
        std::vector<std::size_t> candidates;
        std::size_t anchor = kUnset;
        for (auto w : c1_.adj[u])
            if (map_[w] != kUnset) {
                anchor = w;
                break;
            }
        if (anchor != kUnset)
            candidates = c2_.adj[map_[anchor]];
        else
            for (std::size_t x = 0; x < col2_.size(); ++x) candidates.push_back(x);
        std::sort(candidates.begin(), candidates.end());
        for (auto x : candidates) {
            if (used_[x] || col2_[x] != col1_[u] || !consistent(u, x)) continue;
            map_[u] = x;
            used_[x] = true;
            extend(depth + 1);
            map_[u] = kUnset;
            used_[x] = false;
            if (found_.size() >= limit_) return;
        }
    }

    const Compact& c1_;
    const Compact& c2_;
    std::vector<int> col1_, col2_;
    std::size_t limit_;
    std::vector<std::size_t> map_;
    std::vector<bool> used_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<std::vector<std::size_t>> isomorphisms(const DualGraph& g1, const DualGraph& g2, std::size_t limit) {
    if (g1.size() != g2.size() || g1.edges().size() != g2.edges().size() || limit == 0) return {};
    const Compact c1 = compact(g1), c2 = compact(g2);
    auto [col1, col2] = refine(g1, c1, g2, c2);
    auto h1 = col1, h2 = col2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return {};
    return Search(c1, c2, std::move(col1), std::move(col2), limit).run();
}

bool is_isomorphic(const DualGraph& g1, const DualGraph& g2) { return !isomorphisms(g1, g2, 1).empty(); }

}  // namespace logenr
