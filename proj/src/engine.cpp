#include "wmc/engine.hpp"

#include <string>
#include <variant>

#include "wmc/reduction.hpp"

namespace wmc {

const char* strategy_name(BranchStrategy s) {
  switch (s) {
    case BranchStrategy::MaxOccurrence:
      return "max-occurrence";
    case BranchStrategy::MaxDegreeShortestClause:
      return "shortest-clause";
    case BranchStrategy::Max3Degree:
      return "max-3-degree";
    case BranchStrategy::FirstUnassigned:
      return "first";
  }
  return "?";
}

std::optional<BranchStrategy> parse_strategy(const std::string& name) {
  for (auto s : {BranchStrategy::MaxOccurrence, BranchStrategy::MaxDegreeShortestClause, BranchStrategy::Max3Degree,
                 BranchStrategy::FirstUnassigned})
    if (name == strategy_name(s)) return s;
  return std::nullopt;
}

namespace {

void charge_node(SearchStats& stats, const SolverOptions& options, std::uint32_t depth) {
  ++stats.nodes;
  stats.max_depth = std::max<std::uint64_t>(stats.max_depth, depth);
  if (options.node_cap && stats.nodes > *options.node_cap)
    throw BudgetExceeded("node budget of " + std::to_string(*options.node_cap) + " exhausted");
}

// Unit propagation interleaved with degree-one elimination (when enabled)
// until neither changes the state.
template <class T>
Propagation simplify(SolverState<T>& state, SearchContext<T>& ctx) {
  for (;;) {
    if (unit_propagate(state, ctx) == Propagation::Conflict) return Propagation::Conflict;
    if (!ctx.options.absorb || absorb_degree_one(state, ctx) == 0) return Propagation::Fixpoint;
  }
}

template <class T>
T search(SolverState<T> root, SearchContext<T>& ctx) {
  struct Expand {
    SolverState<T> state;
    std::optional<Literal> decision;
  };
  // Branch weights are already in each child's scalar via assign_literal.
  struct Sum {
    T scalar;
  };
  struct Product {
    std::size_t count;
  };
  using Task = std::variant<Expand, Sum, Product>;

  std::vector<Task> tasks;
  std::vector<T> values;
  tasks.emplace_back(Expand{std::move(root), std::nullopt});

  while (!tasks.empty()) {
    Task task = std::move(tasks.back());
    tasks.pop_back();

    if (auto* sum = std::get_if<Sum>(&task)) {
      T positive = std::move(values.back());
      values.pop_back();
      T& negative = values.back();
      negative = sum->scalar * (negative + positive);
      continue;
    }
    if (auto* product = std::get_if<Product>(&task)) {
      T acc = Ring<T>::one();
      for (std::size_t i = 0; i < product->count; ++i) {
        acc *= values.back();
        values.pop_back();
      }
      values.push_back(std::move(acc));
      continue;
    }

    auto& [state, decision] = std::get<Expand>(task);
    charge_node(ctx.stats, ctx.options, state.depth);
    if (decision && assign_literal(state, *decision, ctx) == Propagation::Conflict) {
      values.push_back(Ring<T>::zero());
      continue;
    }
    if (simplify(state, ctx) == Propagation::Conflict || Ring<T>::is_zero(state.scalar)) {
      values.push_back(Ring<T>::zero());
      continue;
    }
    if (state.clauses.empty()) {
      values.push_back(leaf_value(state, ctx));
      continue;
    }
    if (ctx.options.components) {
      auto parts = split_components(std::move(state), ctx);
      if (parts.size() > 1) {
        ctx.stats.components += parts.size();
        tasks.emplace_back(Product{parts.size()});
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
          it->depth += 1;
          tasks.emplace_back(Expand{std::move(*it), std::nullopt});
        }
        continue;
      }
      state = std::move(parts.front());
    }

    const Var v = pick_branch_variable(state, ctx.options.strategy, ctx.variable_count());
    ++ctx.stats.branch_nodes;
    tasks.emplace_back(Sum{state.scalar});
    SolverState<T> positive = state;
    positive.scalar = Ring<T>::one();
    positive.depth += 1;
    state.scalar = Ring<T>::one();
    state.depth += 1;
    tasks.emplace_back(Expand{std::move(positive), Literal{v, false}});
    tasks.emplace_back(Expand{std::move(state), Literal{v, true}});
  }
  return std::move(values.back());
}

template <class T>
CountResult run_in(const WeightedFormula& formula, const SolverOptions& options) {
  SearchContext<T> ctx(formula, options);
  T value = search(initial_state<T>(formula), ctx);
  return CountResult{Ring<T>::to_value(value), ctx.stats, Ring<T>::kind};
}

CountResult dispatch(const WeightedFormula& formula, const SolverOptions& options) {
  RingKind kind = formula.ring_kind();
  if (kind == RingKind::Integer && options.absorb) kind = RingKind::Rational;
  switch (kind) {
    case RingKind::Integer:
      return run_in<Integer>(formula, options);
    case RingKind::Rational:
      return run_in<Rational>(formula, options);
    default:
      return run_in<Complex>(formula, options);
  }
}

void require_plain(const WeightedFormula& formula, const char* algorithm) {
  if (!formula.is_plain())
    throw UnsupportedInstance(std::string(algorithm) + " counts plain formulas; use the weighted algorithm");
}

WeightedFormula residual_formula(const SolverState<Integer>& state) {
  std::vector<Var> index(state.free_variables.empty() ? 1 : state.free_variables.back() + 1, 0);
  for (std::size_t i = 0; i < state.free_variables.size(); ++i) index[state.free_variables[i]] = static_cast<Var>(i + 1);
  WeightedFormula out(static_cast<Var>(state.free_variables.size()));
  for (const auto& c : state.clauses) {
    std::vector<Literal> lits;
    for (const Literal& lit : c.literals) lits.push_back({index[lit.variable], lit.negated});
    out.add_clause(std::move(lits));
  }
  return out;
}

}  // namespace

CountResult cdp(const WeightedFormula& formula, const SolverOptions& options) {
  require_plain(formula, "cdp");
  return dispatch(formula, options);
}

CountResult cdp_weighted(const WeightedFormula& formula, const SolverOptions& options) {
  return dispatch(formula, options);
}

CountResult cdp_signed(const WeightedFormula& formula, std::span<const Var> negative_set, const SolverOptions& options) {
  require_plain(formula, "cdp_signed");
  WeightedFormula signed_formula = formula;
  for (Var v : negative_set) signed_formula.set_weight(v, RingValue(-1));
  return dispatch(signed_formula, options);
}

CountResult cdp_to2(const WeightedFormula& formula, const SolverOptions& options) {
  require_plain(formula, "cdp2");
  return dispatch(reduce_to_2sat_pm(formula).formula, options);
}

CountResult cdp_3to2(const WeightedFormula& formula, const SolverOptions& options) {
  require_plain(formula, "cdp3to2");
  if (formula.max_width() > 3)
    throw UnsupportedInstance("cdp3to2 needs clause width <= 3, found " + std::to_string(formula.max_width()));

  SearchContext<Integer> ctx(formula, options);
  struct Expand {
    SolverState<Integer> state;
    std::optional<Literal> decision;
  };
  std::vector<Expand> stack;
  stack.push_back({initial_state<Integer>(formula), std::nullopt});
  Integer total = 0;

  // Both branches add with weight 1, so the sum is accumulated directly.
  while (!stack.empty()) {
    auto [state, decision] = std::move(stack.back());
    stack.pop_back();
    charge_node(ctx.stats, options, state.depth);
    if (decision && assign_literal(state, *decision, ctx) == Propagation::Conflict) continue;
    if (unit_propagate(state, ctx) == Propagation::Conflict) continue;

    std::size_t long_clauses = 0;
    for (const auto& c : state.clauses) long_clauses += c.width() == 3 ? 1 : 0;
    if (3 * long_clauses > 2 * state.free_variables.size()) {
      const Var v = pick_branch_variable(state, BranchStrategy::Max3Degree, ctx.variable_count());
      ++ctx.stats.branch_nodes;
      SolverState<Integer> positive = state;
      positive.depth += 1;
      state.depth += 1;
      stack.push_back({std::move(positive), Literal{v, false}});
      stack.push_back({std::move(state), Literal{v, true}});
      continue;
    }

    SolverOptions leaf_options = options;
    if (options.node_cap) leaf_options.node_cap = *options.node_cap - std::min(*options.node_cap, ctx.stats.nodes);
    CountResult leaf = cdp_to2(residual_formula(state), leaf_options);
    ctx.stats.merge(leaf.stats, state.depth);
    if (options.node_cap && ctx.stats.nodes > *options.node_cap)
      throw BudgetExceeded("node budget of " + std::to_string(*options.node_cap) + " exhausted");
    total += state.scalar * leaf.value.as_rational().get_num();
  }
  return CountResult{RingValue(total), ctx.stats, RingKind::Integer};
}

}  // namespace wmc
