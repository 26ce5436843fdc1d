#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "logenr/enumeration.hpp"

namespace logenr::cli {

/// "8,12" -> {8,12}. Duplicates are merged; throws ParseError on empty
/// items, non-integers and labels outside 1..15.
SubsetT parse_subset(std::string_view text);

/// Human-readable extraction result: chains ending at the boundary when the
/// graph is a union of such chains, a vertex/edge listing otherwise, and the
/// drop of every boundary self-intersection.
std::string describe_extraction(const LogPair& p);

/// Runs one command line (args[0] is the program name). Returns 0 on success,
/// 1 when verification finds mismatches, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logenr::cli
