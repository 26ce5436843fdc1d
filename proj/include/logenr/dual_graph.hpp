#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "logenr/exact_linalg.hpp"
#include "logenr/rational.hpp"

namespace logenr {

enum class CurveKind { Exceptional, Circle, Boundary };

std::string_view to_string(CurveKind kind);
std::optional<CurveKind> parse_curve_kind(std::string_view text);

/// One curve of a configuration. `coeff` is the coefficient d of the curve in
/// the crepant pullback (the discrepancy with opposite sign); for boundary
/// curves it is the boundary coefficient. `nodes` counts ordinary double
/// points of the curve itself and never enters the intersection matrix.
struct CurveVertex {
    std::string id;
    Rational self_int;
    Rational coeff;
    CurveKind kind = CurveKind::Exceptional;
    std::optional<std::string> label;
    int nodes = 0;

    friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

/// Weighted dual graph: vertices are curves, an edge of multiplicity m records
/// m distinct transversal intersection points.
class DualGraph {
public:
    using EdgeKey = std::pair<std::string, std::string>;  // first < second

    /// Throws InvalidArgument on a duplicate id.
    DualGraph& add_vertex(CurveVertex v);
    /// Adds `mult` intersection points between a and b (accumulating).
    DualGraph& add_edge(std::string_view a, std::string_view b, int mult = 1);
    /// Sets the multiplicity; 0 removes the edge.
    void set_multiplicity(std::string_view a, std::string_view b, int mult);
    void remove_vertex(std::string_view id);

    bool contains(std::string_view id) const { return index_.contains(std::string(id)); }
    /// Position of `id` in vertices(); throws UnknownVertex.
    std::size_t index_of(std::string_view id) const;
    const CurveVertex& vertex(std::string_view id) const { return vertices_[index_of(id)]; }
    CurveVertex& vertex(std::string_view id) { return vertices_[index_of(id)]; }

    const std::vector<CurveVertex>& vertices() const { return vertices_; }
    const std::map<EdgeKey, int>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size(); }

    int multiplicity(std::string_view a, std::string_view b) const;
    /// (neighbor id, multiplicity), ordered by neighbor id.
    std::vector<std::pair<std::string, int>> neighbors(std::string_view id) const;
    /// Sum of multiplicities of edges at `id`.
    int degree(std::string_view id) const;
    bool is_connected() const;

    /// First id of the form prefix + k (k = 1, 2, ...) that is unused.
    std::string fresh_id(std::string_view prefix) const;
    /// Id of the vertex carrying `label`, if any.
    std::optional<std::string> find_label(std::string_view label) const;
    std::vector<std::string> ids() const;
    std::vector<std::string> ids_of_kind(CurveKind kind) const;

    friend bool operator==(const DualGraph& a, const DualGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

    static EdgeKey key(std::string_view a, std::string_view b);

private:
    std::vector<CurveVertex> vertices_;
    std::unordered_map<std::string, std::size_t> index_;
    std::map<EdgeKey, int> edges_;
};

/// Entry (i,i) is the self-intersection of subset[i]; entry (i,j) the edge
/// multiplicity. Throws UnknownVertex, or InvalidArgument on repeated ids.
SymMatrix intersection_matrix(const DualGraph& g, const std::vector<std::string>& subset);
/// Same, for configurations on a smooth surface (integral self-intersections).
IntMatrix integer_intersection_matrix(const DualGraph& g, const std::vector<std::string>& subset);

/// Attribute-preserving bijection test (self_int, coeff, kind, nodes and edge
/// multiplicities; ids and labels are ignored).
bool is_isomorphic(const DualGraph& g1, const DualGraph& g2);

/// Up to `limit` isomorphisms; each maps vertex index in g1 to vertex index in g2.
std::vector<std::vector<std::size_t>> isomorphisms(const DualGraph& g1, const DualGraph& g2,
                                                   std::size_t limit = 64);

/// Serializable image of a DualGraph. Fractions are reduced "p/q" or integer strings.
struct GraphDoc {
    struct Vertex {
        std::string id;
        std::string self_int;
        std::string coeff;
        std::string kind;
        std::optional<std::string> label;
        int nodes = 0;
        friend bool operator==(const Vertex&, const Vertex&) = default;
    };
    struct Edge {
        std::string a;
        std::string b;
        int mult = 1;
        friend bool operator==(const Edge&, const Edge&) = default;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    friend bool operator==(const GraphDoc&, const GraphDoc&) = default;
};

GraphDoc serialize(const DualGraph& g);
/// Throws MalformedDocument.
DualGraph deserialize(const GraphDoc& doc);

std::string to_json_text(const GraphDoc& doc);
/// Throws MalformedDocument on invalid JSON or missing/mistyped fields.
GraphDoc graph_doc_from_json(std::string_view text);

/// DOT rendering: circles hollow, boundary curves boxed, other exceptional
/// curves filled; a multiplicity-m edge becomes m parallel edge statements.
std::string to_dot(const DualGraph& g, std::string_view name = "dual_graph");

}  // namespace logenr
