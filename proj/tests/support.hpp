#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "logenr/enumeration.hpp"
#include "logenr/error.hpp"
#include "logenr/models.hpp"

namespace testing_support {

using namespace logenr;

inline Rational Q(const char* text) { return Rational::parse(text); }

inline CurveVertex curve(std::string id, Rational self_int, Rational coeff = 0,
                         CurveKind kind = CurveKind::Exceptional, int nodes = 0) {
    return CurveVertex{std::move(id), std::move(self_int), std::move(coeff), kind, std::nullopt, nodes};
}

inline CurveVertex boundary(std::string id, Rational self_int = 0, Rational coeff = Rational(6, 7), int nodes = 0) {
    return curve(std::move(id), std::move(self_int), std::move(coeff), CurveKind::Boundary, nodes);
}

// Random symmetric matrix with entries p/q, |p| <= span, q in 1..max_den.
inline SymMatrix random_sym(std::mt19937_64& rng, std::size_t n, int span, int max_den = 1) {
    std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, Rational(num(rng), den(rng)));
    return m;
}

// Negative definite by strict diagonal dominance.
inline SymMatrix random_negative_definite(std::mt19937_64& rng, std::size_t n) {
    SymMatrix m = random_sym(rng, n, 3, 2);
    for (std::size_t i = 0; i < n; ++i) {
        Rational row = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) row += m(i, j).sign() < 0 ? -m(i, j) : m(i, j);
        m.set(i, i, -row);
    }
    return m;
}

// Connected random multigraph on n vertices with ids "v0".."v{n-1}".
inline DualGraph random_graph(std::mt19937_64& rng, std::size_t n) {
    DualGraph g;
    std::uniform_int_distribution<int> self(-5, 1), kind(0, 2), coeff(0, 6), mult(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const int k = kind(rng);
        const auto ck = k == 0 ? CurveKind::Exceptional : k == 1 ? CurveKind::Circle : CurveKind::Boundary;
        g.add_vertex(curve("v" + std::to_string(i), self(rng), ck == CurveKind::Circle ? Rational(0) : Rational(coeff(rng), 7),
                           ck));
    }
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> parent(0, i - 1);
        g.add_edge("v" + std::to_string(parent(rng)), "v" + std::to_string(i), mult(rng));
    }
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    for (std::size_t e = 0; e < n / 3; ++e) {
        const auto a = any(rng), b = any(rng);
        if (a != b) g.add_edge("v" + std::to_string(a), "v" + std::to_string(b), 1);
    }
    return g;
}

// Same graph with ids renamed through a random permutation and vertices
// inserted in shuffled order.
inline DualGraph relabel(const DualGraph& g, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto name = [&](const std::string& id) { return "w" + std::to_string(perm[g.index_of(id)]); };
    std::vector<CurveVertex> vs = g.vertices();
    std::shuffle(vs.begin(), vs.end(), rng);
    DualGraph out;
    for (auto v : vs) {
        v.id = name(v.id);
        out.add_vertex(v);
    }
    for (const auto& [k, m] : g.edges()) out.add_edge(name(k.first), name(k.second), m);
    return out;
}

template <class F>
Errc error_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected an error");
}

}  // namespace testing_support
