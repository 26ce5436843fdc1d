#include "logenr/models.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "golden_data.hpp"
#include "logenr/error.hpp"

namespace logenr {

std::string_view to_string(ModelCase c) { return c == ModelCase::A26 ? "a26" : "i22"; }

std::optional<ModelCase> parse_model_case(std::string_view text) {
    if (text == "a26") return ModelCase::A26;
    if (text == "i22") return ModelCase::I22;
    return std::nullopt;
}

std::string_view to_string(LocalModel m) {
    switch (m) {
        case LocalModel::Z2: return "z2";
        case LocalModel::Z3: return "z3";
        case LocalModel::NodeReducible: return "nc-red";
        case LocalModel::NodeIrreducible: return "nc-irr";
    }
    return "z2";
}

namespace {

const Rational kSixSevenths(6, 7);

CurveVertex exceptional(std::string id, long self_int) {
    return {std::move(id), Rational(self_int), Rational(0), CurveKind::Exceptional, std::nullopt, 0};
}

CurveVertex boundary(std::string id, Rational self_int, std::optional<std::string> label, int nodes = 0) {
    return {std::move(id), std::move(self_int), kSixSevenths, CurveKind::Boundary, std::move(label), nodes};
}

}  // namespace

LogPair local_model(LocalModel m) {
    DualGraph g;
    switch (m) {
        case LocalModel::Z2:
            g.add_vertex(exceptional("E1", -2)).add_vertex(boundary("C", 0, std::nullopt));
            g.add_edge("E1", "C");
            break;
        case LocalModel::Z3:
            g.add_vertex(exceptional("E1", -2)).add_vertex(exceptional("E2", -2));
            g.add_vertex(boundary("C", 0, std::nullopt));
            g.add_edge("E1", "E2").add_edge("E2", "C");
            break;
        case LocalModel::NodeReducible:
            g.add_vertex(boundary("C1", 0, "C1")).add_vertex(boundary("C2", 0, "C2"));
            g.add_edge("C1", "C2");
            break;
        case LocalModel::NodeIrreducible:
            g.add_vertex(boundary("C", 0, std::nullopt, 1));
            break;
    }
    return solve_coefficients(LogPair::from_graph(std::move(g)));
}

LogPair minimal_resolution_graph(ModelCase c) {
    DualGraph g;
    g.add_vertex(exceptional("Ea", -2)).add_vertex(exceptional("Eb1", -2)).add_vertex(exceptional("Eb2", -2));
    g.add_edge("Eb1", "Eb2");
    if (c == ModelCase::A26) {
        // C1 = {x1 = 0}: 1/6 - 1/2 - 2/3 = -1 after resolving both points on it.
        // C2 in |-K| misses both singular points and has one node.
        g.add_vertex(boundary("C1", -1, "C1")).add_vertex(boundary("C2", 6, "C2", 1));
        g.add_edge("C1", "Ea").add_edge("C1", "Eb2").add_edge("C1", "C2", 1);
    } else {
        // C1 = {x3 = 0} through the A1 point: 3/2 - 1/2 = 1.
        // C2 the quartic through the A2 point: 8/3 - 2/3 = 2; C1.C2 = 2.
        g.add_vertex(boundary("C1", 1, "C1")).add_vertex(boundary("C2", 2, "C2"));
        g.add_edge("C1", "Ea").add_edge("C2", "Eb2").add_edge("C1", "C2", 2);
    }
    return solve_coefficients(LogPair::from_graph(std::move(g)));
}

LogPair golden_graph(ModelCase c) {
    const auto table = golden::table(c == ModelCase::A26);
    DualGraph g;
    for (const auto& row : table.vertices) {
        const CurveKind kind = row.kind == 'B' ? CurveKind::Boundary
                             : row.kind == 'O' ? CurveKind::Circle
                                               : CurveKind::Exceptional;
        g.add_vertex({row.id, Rational(row.self_int), Rational::parse(row.coeff), kind,
                      row.label ? std::optional<std::string>(row.label) : std::nullopt, 0});
    }
    for (const char* path : table.paths) {
        std::istringstream in(path);
        std::string prev, cur;
        in >> prev;
        while (in >> cur) {
            g.add_edge(prev, cur);
            prev = cur;
        }
    }
    return LogPair::from_graph(std::move(g));
}

namespace {

// Orders labels as: none < 1 < 2 < ... < 15 < C1 < C2.
int label_rank(const std::optional<std::string>& label) {
    if (!label) return 0;
    if (*label == "C1") return 100;
    if (*label == "C2") return 101;
    return std::stoi(*label);
}

}  // namespace

LogPair maximal_extraction(ModelCase c) {
    LogPair ext = extract_zero_discrepancy(minimal_resolution_graph(c));
    const LogPair gold = golden_graph(c);
    const auto isos = isomorphisms(ext.graph, gold.graph);
    if (isos.empty())
        throw Error(Errc::GoldenMismatch, "extraction of " + std::string(to_string(c)) +
                                              " is not isomorphic to the transcribed graph");
    std::vector<std::vector<int>> label_maps;
    for (const auto& iso : isos) {
        std::vector<int> ranks;
        for (auto j : iso) ranks.push_back(label_rank(gold.graph.vertices()[j].label));
        label_maps.push_back(std::move(ranks));
    }
    const auto best = std::min_element(label_maps.begin(), label_maps.end()) - label_maps.begin();
    DualGraph labelled;
    const auto& iso = isos[static_cast<std::size_t>(best)];
    for (std::size_t i = 0; i < ext.graph.size(); ++i) {
        CurveVertex v = ext.graph.vertices()[i];
        v.label = gold.graph.vertices()[iso[i]].label;
        labelled.add_vertex(std::move(v));
    }
    for (const auto& [k, m] : ext.graph.edges()) labelled.add_edge(k.first, k.second, m);
    return LogPair::from_graph(std::move(labelled));
}

int circle_involution(ModelCase c, int label) {
    if (c == ModelCase::A26) {
        if (label >= 10 && label <= 15) return 25 - label;
        return label;
    }
    if (label >= 4 && label <= 9) return label + 6;
    if (label >= 10 && label <= 15) return label - 6;
    return label;
}

bool ValidationReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
}

std::string ValidationReport::text() const {
    std::ostringstream os;
    for (const auto& item : items) {
        os << (item.passed ? "PASS " : "FAIL ") << to_string(model) << ": " << item.check;
        for (const auto& f : item.failures) os << " [" << f << "]";
        os << "\n";
    }
    return os.str();
}

LogPair blow_down_all(LogPair p) {
    while (true) {
        const DualGraph& g = p.graph;
        // distance from the boundary, by breadth-first search
        std::map<std::string, int> dist;
        std::deque<std::string> queue;
        for (const auto& id : p.boundary_ids) {
            dist[id] = 0;
            queue.push_back(id);
        }
        while (!queue.empty()) {
            const std::string v = queue.front();
            queue.pop_front();
            for (const auto& [w, m] : g.neighbors(v))
                if (!dist.contains(w)) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        std::optional<std::string> pick;
        int best = -1;
        for (const auto& v : g.vertices()) {
            if (v.kind == CurveKind::Boundary || v.self_int != Rational(-1)) continue;
            const int d = dist.contains(v.id) ? dist[v.id] : 1 << 20;
            if (d > best) {
                best = d;
                pick = v.id;
            }
        }
        if (!pick) return p;
        p = contract_minus_one(std::move(p), *pick);
    }
}

ValidationReport validate_extraction(ModelCase c, const LogPair& candidate) {
    const DualGraph& g = candidate.graph;
    ValidationReport report{c, {}};

    ValidationItem crepancy{"crepancy equation at every non-boundary curve", true, {}};
    for (const auto& v : g.vertices()) {
        if (v.kind == CurveKind::Boundary) continue;
        const Rational r = crepancy_residual(g, v.id);
        if (!r.is_zero()) crepancy.failures.push_back(v.id + " residual " + r.str());
    }

    ValidationItem circles{"15 circles labelled 1..15, each (-1, 0)", true, {}};
    std::vector<int> seen(16, 0);
    int circle_count = 0;
    for (const auto& v : g.vertices()) {
        if (v.kind != CurveKind::Circle) continue;
        ++circle_count;
        if (v.self_int != Rational(-1) || !v.coeff.is_zero()) circles.failures.push_back(v.id);
        const int rank = label_rank(v.label);
        if (rank >= 1 && rank <= 15) ++seen[static_cast<std::size_t>(rank)];
        else circles.failures.push_back(v.id + " unlabelled");
    }
    for (int k = 1; k <= 15; ++k)
        if (seen[static_cast<std::size_t>(k)] != 1) circles.failures.push_back("label " + std::to_string(k));
    if (circle_count != 15) circles.failures.push_back(std::to_string(circle_count) + " circles");

    ValidationItem boundary_sq{"boundary self-intersections equal -14", true, {}};
    for (const auto& id : candidate.boundary_ids)
        if (g.vertex(id).self_int != Rational(-14)) boundary_sq.failures.push_back(id + " " + g.vertex(id).self_int.str());
    if (candidate.boundary_ids.size() != 2) boundary_sq.failures.push_back("expected two boundary curves");

    ValidationItem blow_down{"blow-down reaches the minimal resolution", true, {}};
    try {
        if (!is_isomorphic(blow_down_all(candidate).graph, minimal_resolution_graph(c).graph))
            blow_down.failures.push_back("not isomorphic");
    } catch (const Error& e) {
        blow_down.failures.push_back(e.what());
    }

    ValidationItem index{"7 * coeff is integral", true, {}};
    for (const auto& v : g.vertices())
        if (!(Rational(7) * v.coeff).is_integer()) index.failures.push_back(v.id);

    for (auto* item : {&crepancy, &circles, &boundary_sq, &blow_down, &index}) {
        item->passed = item->failures.empty();
        report.items.push_back(std::move(*item));
    }
    return report;
}

ValidationReport validate_golden(ModelCase c) { return validate_extraction(c, golden_graph(c)); }

}  // namespace logenr
