#pragma once

#include <string>
#include <string_view>

#include "wmc/formula.hpp"

namespace wmc {

/// Reads DIMACS CNF with the weight extensions
///
///   c w <var> <re> <im>            weight of <var> is re + i*im
///   c cl <clause-index> <re> <im>  violation label of the 1-based clause
///
/// Directives may appear anywhere; the last one for a target wins. Other
/// comment lines are ignored, as is everything after a `%` line. The
/// result is normalized. Errors are ParseError carrying the line number.
WeightedFormula parse_dimacs(std::string_view text);

/// Header, then `c w` lines for non-unit weights, then `c cl` lines for
/// nonzero labels, then clauses. Output is a pure function of the formula.
std::string serialize_dimacs(const WeightedFormula& formula);

}  // namespace wmc
