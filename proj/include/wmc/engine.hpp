#pragma once

#include <span>

#include "wmc/formula.hpp"
#include "wmc/solver_state.hpp"

namespace wmc {

struct CountResult {
  RingValue value;
  SearchStats stats;
  RingKind ring = RingKind::Integer;  // ring the search ran in
};

/// Branch-and-count on a plain formula: unit propagation, component
/// splitting, branching. Throws UnsupportedInstance on weighted input.
CountResult cdp(const WeightedFormula& formula, const SolverOptions& options = {});

/// Weighted count sum_x prod_i w_i^{x_i} f(x). Branch results combine as
/// count(f & -v) + w_v * count(f & v). Runs in the smallest ring holding
/// the weights and labels; degree-one absorption moves integer instances to
/// the rationals.
CountResult cdp_weighted(const WeightedFormula& formula, const SolverOptions& options = {});

/// Signed count of a plain formula: weight -1 on `negative_set`.
CountResult cdp_signed(const WeightedFormula& formula, std::span<const Var> negative_set,
                       const SolverOptions& options = {});

/// Reduces width>=3 clauses to signed 2-clauses, then counts the result.
CountResult cdp_to2(const WeightedFormula& formula, const SolverOptions& options = {});

/// For formulas of width <= 3: branches on the variable in the most
/// width-3 clauses while m>=3 / (unassigned variables) > 2/3, then finishes
/// each branch with cdp_to2.
CountResult cdp_3to2(const WeightedFormula& formula, const SolverOptions& options = {});

}  // namespace wmc
