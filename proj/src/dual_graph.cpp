#include "logenr/dual_graph.hpp"

#include <algorithm>
#include <set>

#include "logenr/error.hpp"

namespace logenr {

std::string_view to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::Exceptional: return "exceptional";
        case CurveKind::Circle: return "circle";
        case CurveKind::Boundary: return "boundary";
    }
    return "exceptional";
}

std::optional<CurveKind> parse_curve_kind(std::string_view text) {
    if (text == "exceptional") return CurveKind::Exceptional;
    if (text == "circle") return CurveKind::Circle;
    if (text == "boundary") return CurveKind::Boundary;
    return std::nullopt;
}

DualGraph::EdgeKey DualGraph::key(std::string_view a, std::string_view b) {
    if (b < a) std::swap(a, b);
    return {std::string(a), std::string(b)};
}

DualGraph& DualGraph::add_vertex(CurveVertex v) {
    if (contains(v.id)) throw Error(Errc::InvalidArgument, "duplicate vertex id '" + v.id + "'");
    index_.emplace(v.id, vertices_.size());
    vertices_.push_back(std::move(v));
    return *this;
}

DualGraph& DualGraph::add_edge(std::string_view a, std::string_view b, int mult) {
    index_of(a);
    index_of(b);
    if (a == b) throw Error(Errc::InvalidArgument, "self-loops are recorded as nodes, not edges");
    if (mult < 1) throw Error(Errc::InvalidArgument, "edge multiplicity must be positive");
    edges_[key(a, b)] += mult;
    return *this;
}

void DualGraph::set_multiplicity(std::string_view a, std::string_view b, int mult) {
    index_of(a);
    index_of(b);
    if (a == b) throw Error(Errc::InvalidArgument, "self-loops are recorded as nodes, not edges");
    if (mult < 0) throw Error(Errc::InvalidArgument, "negative edge multiplicity");
    if (mult == 0)
        edges_.erase(key(a, b));
    else
        edges_[key(a, b)] = mult;
}

void DualGraph::remove_vertex(std::string_view id) {
    const std::size_t pos = index_of(id);
    const std::string name(id);
    std::erase_if(edges_, [&](const auto& e) { return e.first.first == name || e.first.second == name; });
    vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(pos));
    index_.clear();
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i].id, i);
}

std::size_t DualGraph::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) throw Error(Errc::UnknownVertex, "no vertex '" + std::string(id) + "'");
    return it->second;
}

int DualGraph::multiplicity(std::string_view a, std::string_view b) const {
    if (a == b) return 0;
    const auto it = edges_.find(key(a, b));
    return it == edges_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, int>> DualGraph::neighbors(std::string_view id) const {
    index_of(id);
    std::vector<std::pair<std::string, int>> out;
    for (const auto& [k, m] : edges_) {
        if (k.first == id) out.emplace_back(k.second, m);
        else if (k.second == id) out.emplace_back(k.first, m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int DualGraph::degree(std::string_view id) const {
    int d = 0;
    for (const auto& [n, m] : neighbors(id)) d += m;
    return d;
}

bool DualGraph::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const auto& [k, m] : edges_) {
        const auto a = index_of(k.first), b = index_of(k.second);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == vertices_.size();
}

std::string DualGraph::fresh_id(std::string_view prefix) const {
    for (std::size_t k = 1;; ++k) {
        std::string candidate = std::string(prefix) + std::to_string(k);
        if (!contains(candidate)) return candidate;
    }
}

std::optional<std::string> DualGraph::find_label(std::string_view label) const {
    for (const auto& v : vertices_)
        if (v.label && *v.label == label) return v.id;
    return std::nullopt;
}

std::vector<std::string> DualGraph::ids() const {
    std::vector<std::string> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) out.push_back(v.id);
    return out;
}

std::vector<std::string> DualGraph::ids_of_kind(CurveKind kind) const {
    std::vector<std::string> out;
    for (const auto& v : vertices_)
        if (v.kind == kind) out.push_back(v.id);
    return out;
}

namespace {

std::vector<std::size_t> checked_indices(const DualGraph& g, const std::vector<std::string>& subset) {
    std::vector<std::size_t> idx;
    idx.reserve(subset.size());
    std::set<std::string_view> seen;
    for (const auto& id : subset) {
        idx.push_back(g.index_of(id));
        if (!seen.insert(id).second) throw Error(Errc::InvalidArgument, "repeated vertex '" + id + "'");
    }
    return idx;
}

}  // namespace

SymMatrix intersection_matrix(const DualGraph& g, const std::vector<std::string>& subset) {
    checked_indices(g, subset);
    SymMatrix m(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        m.set(i, i, g.vertex(subset[i]).self_int);
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            m.set(i, j, Rational(g.multiplicity(subset[i], subset[j])));
    }
    return m;
}

IntMatrix integer_intersection_matrix(const DualGraph& g, const std::vector<std::string>& subset) {
    checked_indices(g, subset);
    IntMatrix m(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        m.at(i, i) = g.vertex(subset[i]).self_int.to_int64();
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            const int mult = g.multiplicity(subset[i], subset[j]);
            m.at(i, j) = mult;
            m.at(j, i) = mult;
        }
    }
    return m;
}

}  // namespace logenr
