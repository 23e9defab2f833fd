#pragma once

#include <span>

#include "wmc/formula.hpp"

namespace wmc {

struct OracleOptions {
  /// Instances with more variables are refused with CapExceeded.
  Var max_variables = 25;
};

/// Sum of evaluate() over all 2^n assignments, in lexicographic order
/// (x1 is the least significant bit). Summation order is fixed, so floating
/// results are reproducible.
RingValue brute_force_count(const WeightedFormula& formula, const OracleOptions& options = {});

/// (#models with even N-parity) - (#models with odd N-parity) for a plain
/// hard-clause formula. Weights must all be 1; use with_unit_weights() on
/// signed instances.
Integer brute_force_parity_count(const WeightedFormula& formula, std::span<const Var> negative_set,
                                 const OracleOptions& options = {});

}  // namespace wmc
