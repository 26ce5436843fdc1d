#include "logenr/log_pair.hpp"

#include <algorithm>
#include <set>

#include "logenr/error.hpp"

namespace logenr {

LogPair LogPair::from_graph(DualGraph g) {
    LogPair p{std::move(g), {}};
    p.boundary_ids = p.graph.ids_of_kind(CurveKind::Boundary);
    return p;
}

namespace {

std::vector<std::string> unknown_ids(const DualGraph& g) {
    std::vector<std::string> out;
    for (const auto& v : g.vertices())
        if (v.kind != CurveKind::Boundary) out.push_back(v.id);
    return out;
}

CurveKind kind_for(const Rational& coeff) { return coeff.is_zero() ? CurveKind::Circle : CurveKind::Exceptional; }

}  // namespace

LogPair solve_coefficients(LogPair p) {
    DualGraph& g = p.graph;
    const auto unknowns = unknown_ids(g);
    for (const auto& id : unknowns)
        if (g.vertex(id).nodes > 0) throw Error(Errc::NodalExceptional, "curve '" + id + "' has a node");
    const SymMatrix m = intersection_matrix(g, unknowns);
    std::vector<Rational> rhs;
    rhs.reserve(unknowns.size());
    for (const auto& id : unknowns) {
        Rational b = g.vertex(id).self_int + Rational(2);
        for (const auto& [n, mult] : g.neighbors(id)) {
            const auto& nv = g.vertex(n);
            if (nv.kind == CurveKind::Boundary) b -= Rational(mult) * nv.coeff;
        }
        rhs.push_back(std::move(b));
    }
    std::vector<Rational> d;
    try {
        d = solve_exact(m, rhs);
    } catch (const Error& e) {
        if (e.code() != Errc::SingularMatrix) throw;
        throw Error(Errc::SingularConfiguration, "intersection matrix of the exceptional curves is singular");
    }
    for (std::size_t i = 0; i < unknowns.size(); ++i) g.vertex(unknowns[i]).coeff = d[i];
    return p;
}

Rational crepancy_residual(const DualGraph& g, std::string_view id) {
    const auto& v = g.vertex(id);
    Rational r = -v.self_int - Rational(2) + v.coeff * v.self_int;
    for (const auto& [n, mult] : g.neighbors(id)) r += Rational(mult) * g.vertex(n).coeff;
    return r;
}

LogPair blow_up_edge_point(LogPair p, std::string_view a, std::string_view b) {
    DualGraph& g = p.graph;
    const int mult = g.multiplicity(a, b);
    if (mult == 0) throw Error(Errc::NoSuchEdge, "no intersection point of '" + std::string(a) + "' and '" +
                                                     std::string(b) + "'");
    const Rational coeff = g.vertex(a).coeff + g.vertex(b).coeff - Rational(1);
    const std::string id = g.fresh_id("x");
    g.vertex(a).self_int -= Rational(1);
    g.vertex(b).self_int -= Rational(1);
    g.set_multiplicity(a, b, mult - 1);
    g.add_vertex({id, Rational(-1), coeff, kind_for(coeff), std::nullopt, 0});
    g.add_edge(id, a, 1);
    g.add_edge(id, b, 1);
    return p;
}

LogPair blow_up_node(LogPair p, std::string_view v) {
    DualGraph& g = p.graph;
    CurveVertex& curve = g.vertex(v);
    if (curve.nodes < 1) throw Error(Errc::NoNode, "curve '" + std::string(v) + "' has no node");
    curve.self_int -= Rational(4);
    curve.nodes -= 1;
    const Rational coeff = Rational(2) * curve.coeff - Rational(1);
    const std::string id = g.fresh_id("x");
    g.add_vertex({id, Rational(-1), coeff, kind_for(coeff), std::nullopt, 0});
    g.add_edge(id, v, 2);
    return p;
}

std::vector<BlowUpSite> blow_up_sites(const LogPair& p) {
    const DualGraph& g = p.graph;
    std::vector<BlowUpSite> sites;
    for (const auto& v : g.vertices()) {
        const Rational w = Rational(2) * v.coeff;
        if (v.nodes > 0 && w >= Rational(1)) sites.push_back({v.id, v.id, w});
    }
    for (const auto& [k, m] : g.edges()) {
        const Rational w = g.vertex(k.first).coeff + g.vertex(k.second).coeff;
        if (w >= Rational(1)) sites.push_back({k.first, k.second, w});
    }
    std::sort(sites.begin(), sites.end(), [](const BlowUpSite& x, const BlowUpSite& y) {
        if (x.weight != y.weight) return x.weight > y.weight;
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return sites;
}

namespace {

void require_klt(const LogPair& p) {
    for (const auto& v : p.graph.vertices())
        if (v.coeff >= Rational(1))
            throw Error(Errc::NotKlt, "curve '" + v.id + "' has coefficient " + v.coeff.str());
}

LogPair apply(LogPair p, const BlowUpSite& s) {
    return s.is_node() ? blow_up_node(std::move(p), s.a) : blow_up_edge_point(std::move(p), s.a, s.b);
}

}  // namespace

LogPair extract_zero_discrepancy(LogPair p) {
    require_klt(p);
    for (auto sites = blow_up_sites(p); !sites.empty(); sites = blow_up_sites(p)) p = apply(std::move(p), sites.front());
    return p;
}

LogPair extract_zero_discrepancy(LogPair p, std::mt19937_64& rng) {
    require_klt(p);
    for (auto sites = blow_up_sites(p); !sites.empty(); sites = blow_up_sites(p)) {
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        p = apply(std::move(p), sites[pick(rng)]);
    }
    return p;
}

LogPair contract_minus_one(LogPair p, std::string_view v) {
    DualGraph& g = p.graph;
    const CurveVertex& curve = g.vertex(v);
    if (curve.kind == CurveKind::Boundary)
        throw Error(Errc::BoundaryContraction, "refusing to contract boundary curve '" + std::string(v) + "'");
    if (curve.self_int != Rational(-1))
        throw Error(Errc::NotMinusOne, "curve '" + std::string(v) + "' has self-intersection " + curve.self_int.str());
    const auto nbrs = g.neighbors(v);
    for (const auto& [u, m] : nbrs)
        if (m > 2)
            throw Error(Errc::UnsupportedSingularPoint,
                        "contracting '" + std::string(v) + "' would create a point of multiplicity " +
                            std::to_string(m) + " on '" + u + "'");
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const auto& [u, m] = nbrs[i];
        CurveVertex& cu = g.vertex(u);
        cu.self_int += Rational(m * m);
        if (m == 2) cu.nodes += 1;
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) g.add_edge(u, nbrs[j].first, m * nbrs[j].second);
    }
    g.remove_vertex(v);
    return p;
}

Rational pushforward_intersection(const DualGraph& g, const std::vector<std::string>& contracted, std::string_view c,
                                  std::string_view d) {
    const std::set<std::string_view> set(contracted.begin(), contracted.end());
    if (set.contains(c) || set.contains(d))
        throw Error(Errc::InvalidArgument, "curve is itself in the contracted set");
    const Rational direct = c == d ? g.vertex(c).self_int : Rational(g.multiplicity(c, d));
    if (contracted.empty()) return direct;
    const SymMatrix m = intersection_matrix(g, contracted);
    std::vector<Rational> wc, wd;
    for (const auto& e : contracted) {
        wc.emplace_back(g.multiplicity(c, e));
        wd.emplace_back(g.multiplicity(d, e));
    }
    const auto x = solve_exact(m, wd);
    Rational correction;
    for (std::size_t i = 0; i < x.size(); ++i) correction += wc[i] * x[i];
    return direct - correction;
}

Rational pushforward_self_intersection(const DualGraph& g, const std::vector<std::string>& contracted,
                                       std::string_view c) {
    return pushforward_intersection(g, contracted, c, c);
}

Rational boundary_drop(const LogPair& p, std::string_view boundary_id) {
    const auto rest = unknown_ids(p.graph);
    return pushforward_self_intersection(p.graph, rest, boundary_id) - p.graph.vertex(boundary_id).self_int;
}

}  // namespace logenr
