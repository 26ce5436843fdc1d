#include <set>
#include <sstream>

#include <json.hpp>

#include "logenr/dual_graph.hpp"
#include "logenr/error.hpp"

namespace logenr {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedDocument, what); }

bool allowed_label(const std::string& label) {
    if (label == "C1" || label == "C2") return true;
    for (int k = 1; k <= 15; ++k)
        if (label == std::to_string(k)) return true;
    return false;
}

Rational fraction_field(const std::string& text, const std::string& where) {
    try {
        return Rational::parse_canonical(text);
    } catch (const Error& e) {
        malformed(where + ": " + e.what());
    }
}

}  // namespace

GraphDoc serialize(const DualGraph& g) {
    GraphDoc doc;
    for (const auto& v : g.vertices())
        doc.vertices.push_back({v.id, v.self_int.str(), v.coeff.str(), std::string(to_string(v.kind)), v.label, v.nodes});
    for (const auto& [k, m] : g.edges()) doc.edges.push_back({k.first, k.second, m});
    return doc;
}

DualGraph deserialize(const GraphDoc& doc) {
    DualGraph g;
    for (const auto& v : doc.vertices) {
        if (v.id.empty()) malformed("empty vertex id");
        if (g.contains(v.id)) malformed("duplicate vertex id '" + v.id + "'");
        const auto kind = parse_curve_kind(v.kind);
        if (!kind) malformed("vertex '" + v.id + "': unknown kind '" + v.kind + "'");
        if (v.nodes < 0) malformed("vertex '" + v.id + "': negative node count");
        if (v.label && !allowed_label(*v.label)) malformed("vertex '" + v.id + "': invalid label '" + *v.label + "'");
        CurveVertex cv{v.id, fraction_field(v.self_int, "vertex '" + v.id + "' self_int"),
                       fraction_field(v.coeff, "vertex '" + v.id + "' coeff"), *kind, v.label, v.nodes};
        if (cv.kind == CurveKind::Circle && !cv.coeff.is_zero())
            malformed("vertex '" + v.id + "': circle with nonzero coefficient");
        g.add_vertex(std::move(cv));
    }
    std::set<DualGraph::EdgeKey> seen;
    for (const auto& e : doc.edges) {
        if (!g.contains(e.a) || !g.contains(e.b)) malformed("edge '" + e.a + "'-'" + e.b + "' has a dangling endpoint");
        if (e.a == e.b) malformed("edge '" + e.a + "'-'" + e.b + "' is a self-loop");
        if (e.mult < 1) malformed("edge '" + e.a + "'-'" + e.b + "' has multiplicity < 1");
        if (!seen.insert(DualGraph::key(e.a, e.b)).second) malformed("edge '" + e.a + "'-'" + e.b + "' listed twice");
        g.add_edge(e.a, e.b, e.mult);
    }
    return g;
}

std::string to_json_text(const GraphDoc& doc) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& v : doc.vertices) {
        ordered_json jv;
        jv["id"] = v.id;
        jv["self_int"] = v.self_int;
        jv["coeff"] = v.coeff;
        jv["kind"] = v.kind;
        jv["label"] = v.label ? ordered_json(*v.label) : ordered_json(nullptr);
        jv["nodes"] = v.nodes;
        j["vertices"].push_back(std::move(jv));
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : doc.edges) j["edges"].push_back(ordered_json{{"a", e.a}, {"b", e.b}, {"mult", e.mult}});
    return j.dump(1) + "\n";
}

GraphDoc graph_doc_from_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) malformed("not a JSON object");
    auto field = [](const nlohmann::json& obj, const char* name) -> const nlohmann::json& {
        if (!obj.is_object() || !obj.contains(name)) malformed(std::string("missing field '") + name + "'");
        return obj.at(name);
    };
    auto string_field = [&](const nlohmann::json& obj, const char* name) {
        const auto& f = field(obj, name);
        if (!f.is_string()) malformed(std::string("field '") + name + "' must be a string");
        return f.get<std::string>();
    };
    auto int_field = [&](const nlohmann::json& obj, const char* name) {
        const auto& f = field(obj, name);
        if (!f.is_number_integer()) malformed(std::string("field '") + name + "' must be an integer");
        return f.get<int>();
    };
    GraphDoc doc;
    const auto& vs = field(j, "vertices");
    const auto& es = field(j, "edges");
    if (!vs.is_array() || !es.is_array()) malformed("'vertices' and 'edges' must be arrays");
    for (const auto& jv : vs) {
        GraphDoc::Vertex v;
        v.id = string_field(jv, "id");
        v.self_int = string_field(jv, "self_int");
        v.coeff = string_field(jv, "coeff");
        v.kind = string_field(jv, "kind");
        const auto& label = field(jv, "label");
        if (label.is_string())
            v.label = label.get<std::string>();
        else if (!label.is_null())
            malformed("field 'label' must be a string or null");
        v.nodes = int_field(jv, "nodes");
        doc.vertices.push_back(std::move(v));
    }
    for (const auto& je : es) doc.edges.push_back({string_field(je, "a"), string_field(je, "b"), int_field(je, "mult")});
    return doc;
}

std::string to_dot(const DualGraph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (const auto& v : g.vertices()) {
        std::string text = v.label ? *v.label + "\\n" : std::string();
        text += v.self_int.str() + " | " + v.coeff.str();
        if (v.nodes > 0) text += "\\nnodes=" + std::to_string(v.nodes);
        os << "  \"" << v.id << "\" [label=\"" << text << "\"";
        switch (v.kind) {
            case CurveKind::Circle: os << ", shape=circle, style=solid"; break;
            case CurveKind::Boundary: os << ", shape=box"; break;
            case CurveKind::Exceptional: os << ", shape=circle, style=filled, fillcolor=gray"; break;
        }
        os << "];\n";
    }
    for (const auto& [k, m] : g.edges())
        for (int i = 0; i < m; ++i) os << "  \"" << k.first << "\" -- \"" << k.second << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace logenr
