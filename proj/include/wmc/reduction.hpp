#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmc/bounds.hpp"
#include "wmc/formula.hpp"

namespace wmc {

struct ClauseOrigin {
  std::size_t clause = 0;               // 0-based index into the input
  std::optional<std::size_t> literal;   // set for clauses split off a wide clause
  bool operator==(const ClauseOrigin&) const = default;
};

/// Bookkeeping for the wide-clause elimination.
struct ReductionMap {
  Var original_variables = 0;
  /// Input clause index -> its gadget variable. Ids are original_n + 1, ...
  /// in clause order.
  std::map<std::size_t, Var> fresh_variables;
  /// Output clause index -> where it came from.
  std::vector<ClauseOrigin> reduced_clause_origin;
};

struct ReducedInstance {
  WeightedFormula formula;
  ReductionMap map;
};

/// Replaces every clause (c_1 v ... v c_k) with k >= 3 by a gadget y of
/// weight -1 and the binary clauses (-c_j v -y). Narrower clauses are copied.
/// The weighted count of the output equals the model count of the input.
/// Requires a plain formula.
ReducedInstance reduce_to_2sat_pm(const WeightedFormula& formula);

struct ReducedSize {
  std::uint64_t variables = 0;     // n + m>=3
  std::uint64_t clauses = 0;       // exact output clause count
  std::uint64_t clause_bound = 0;  // L, the published upper bound
};

ReducedSize predict_reduced_size(const InstanceStats& stats);

/// `c map` comment block describing the map, one fact per line.
std::string format_reduction_map(const ReductionMap& map);

}  // namespace wmc
