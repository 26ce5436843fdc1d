#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logenr/log_pair.hpp"

namespace logenr {

/// The two model pairs (P(1,2,3), 6/7 C1 + 6/7 C2).
enum class ModelCase { A26, I22 };

/// Local pairs (X, 6/7 C) whose extractions the global graphs are glued from:
/// C through a Z2(1,1) point, C through a Z3(1,2) point, two boundary curves
/// crossing at a smooth point, and a nodal boundary curve.
enum class LocalModel { Z2, Z3, NodeReducible, NodeIrreducible };

std::string_view to_string(ModelCase c);
std::optional<ModelCase> parse_model_case(std::string_view text);
std::string_view to_string(LocalModel m);

/// Minimal resolution of a local model with solved coefficients. The boundary
/// self-intersection is a placeholder 0; only drops are meaningful.
LogPair local_model(LocalModel m);

/// Minimal resolution of the global model with solved coefficients.
LogPair minimal_resolution_graph(ModelCase c);

/// Hand transcription of the maximal extraction, with circle labels 1..15.
LogPair golden_graph(ModelCase c);

/// extract_zero_discrepancy on the minimal resolution, with labels carried
/// over from the golden graph. Throws GoldenMismatch if the two disagree.
LogPair maximal_extraction(ModelCase c);

/// The label involution of the 15 circles that is a symmetry of the golden
/// graph. Labels outside 1..15 map to themselves.
int circle_involution(ModelCase c, int label);

struct ValidationItem {
    std::string check;
    bool passed = true;
    std::vector<std::string> failures;  // offending vertex ids or a short note
};

struct ValidationReport {
    ModelCase model = ModelCase::A26;
    std::vector<ValidationItem> items;
    bool ok() const;
    std::string text() const;
};

/// Regression gate over a labelled maximal extraction: crepancy at every
/// non-boundary curve, circles (-1, 0) with labels 1..15, boundary curves at
/// -14, blow-down to the minimal resolution, and 7*coeff integral.
ValidationReport validate_extraction(ModelCase c, const LogPair& candidate);
ValidationReport validate_golden(ModelCase c);

/// Repeatedly contracts non-boundary (-1)-curves, farthest from the boundary
/// first, until none is left.
LogPair blow_down_all(LogPair p);

}  // namespace logenr
