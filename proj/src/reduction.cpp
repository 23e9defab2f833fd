#include "wmc/reduction.hpp"

#include <sstream>

namespace wmc {

ReducedInstance reduce_to_2sat_pm(const WeightedFormula& formula) {
  if (!formula.is_plain())
    throw UnsupportedInstance("the 2-SAT reduction is defined for plain (unweighted, hard-clause) formulas");

  ReducedInstance out{WeightedFormula(formula.variable_count()), {}};
  out.map.original_variables = formula.variable_count();

  // Fresh ids are allocated up front so they follow clause order.
  for (std::size_t i = 0; i < formula.clause_count(); ++i)
    if (formula.clause(i).width() >= 3) out.map.fresh_variables[i] = out.formula.add_variable(RingValue(-1));

  for (std::size_t i = 0; i < formula.clause_count(); ++i) {
    const Clause& clause = formula.clause(i);
    auto fresh = out.map.fresh_variables.find(i);
    if (fresh == out.map.fresh_variables.end()) {
      out.formula.add_clause(clause.literals);
      out.map.reduced_clause_origin.push_back({i, std::nullopt});
      continue;
    }
    const Literal gadget{fresh->second, true};
    for (std::size_t j = 0; j < clause.width(); ++j) {
      out.formula.add_clause({~clause.literals[j], gadget});
      out.map.reduced_clause_origin.push_back({i, j});
    }
  }
  return out;
}

ReducedSize predict_reduced_size(const InstanceStats& stats) {
  ReducedSize size;
  size.variables = stats.variables + stats.long_clauses;
  size.clauses = stats.long_literals + (stats.clauses - stats.long_clauses);
  size.clause_bound = stats.literals;
  return size;
}

std::string format_reduction_map(const ReductionMap& map) {
  std::ostringstream out;
  out << "c map original_variables " << map.original_variables << '\n';
  for (const auto& [clause, var] : map.fresh_variables) out << "c map fresh " << clause + 1 << ' ' << var << '\n';
  for (std::size_t i = 0; i < map.reduced_clause_origin.size(); ++i) {
    const ClauseOrigin& o = map.reduced_clause_origin[i];
    out << "c map origin " << i + 1 << ' ' << o.clause + 1;
    if (o.literal) out << ' ' << *o.literal + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace wmc
