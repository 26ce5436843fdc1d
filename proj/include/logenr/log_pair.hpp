#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "logenr/dual_graph.hpp"

namespace logenr {

/// A configuration together with its boundary curves. The boundary
/// coefficients are inputs and are never solved for.
struct LogPair {
    DualGraph graph;
    std::vector<std::string> boundary_ids;

    /// Boundary ids are taken from the vertices of kind Boundary, in order.
    static LogPair from_graph(DualGraph g);
};

/// Assigns every non-boundary curve the unique coefficient d satisfying the
/// crepancy (adjunction) equation
///   (-E^2 - 2) + d_E * E^2 + sum_{F != E} (E.F) d_F = 0.
/// Throws NodalExceptional for a nodal non-boundary curve and
/// SingularConfiguration when the unknowns' intersection matrix is singular.
LogPair solve_coefficients(LogPair p);

/// Residual of the crepancy equation at a non-boundary vertex (zero when the
/// stored coefficients are consistent).
Rational crepancy_residual(const DualGraph& g, std::string_view id);

/// Blows up one intersection point of a and b. Throws NoSuchEdge.
LogPair blow_up_edge_point(LogPair p, std::string_view a, std::string_view b);
/// Blows up one ordinary double point of v. Throws NoNode.
LogPair blow_up_node(LogPair p, std::string_view v);

/// A point whose blow-up has discrepancy <= 0: an intersection point with
/// coefficient sum >= 1, or a node (a == b) with 2*coeff >= 1.
struct BlowUpSite {
    std::string a;
    std::string b;
    Rational weight;  // coefficient sum of the two local branches
    bool is_node() const { return a == b; }
};

/// Current sites in the default order: highest weight first, then by id pair.
std::vector<BlowUpSite> blow_up_sites(const LogPair& p);

/// Blows up sites until none remain, extracting every divisor with
/// discrepancy 0. Throws NotKlt if some coefficient is >= 1 on input.
LogPair extract_zero_discrepancy(LogPair p);
/// Same, picking each next site uniformly at random.
LogPair extract_zero_discrepancy(LogPair p, std::mt19937_64& rng);

/// Contracts a (-1)-curve. Neighbours gain m^2 in self-intersection and
/// pairwise m*m' intersection points; a neighbour met twice acquires a node.
/// Throws BoundaryContraction, NotMinusOne, or UnsupportedSingularPoint
/// (a neighbour met three or more times).
LogPair contract_minus_one(LogPair p, std::string_view v);

/// c^2 after contracting `contracted`: c^2 - w^T M^{-1} w, where M is the
/// intersection matrix of the contracted curves and w their intersections
/// with c. Throws SingularMatrix when M is singular.
Rational pushforward_self_intersection(const DualGraph& g, const std::vector<std::string>& contracted,
                                       std::string_view c);
/// c.d after contracting `contracted` (c and d may coincide).
Rational pushforward_intersection(const DualGraph& g, const std::vector<std::string>& contracted,
                                  std::string_view c, std::string_view d);

/// Drop of a boundary curve's self-intersection relative to the surface
/// obtained by contracting every non-boundary curve: C^2 - Cbar^2.
Rational boundary_drop(const LogPair& p, std::string_view boundary_id);

}  // namespace logenr
