#pragma once

// Residual-formula state and the simplification rules the counting search
// is built from. Everything here is templated over the ring the search
// runs in (Integer, Rational or Complex).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wmc/formula.hpp"

namespace wmc {

enum class BranchStrategy {
  MaxOccurrence,            // most occurrences in the residual formula
  MaxDegreeShortestClause,  // most occurrences within the shortest clauses
  Max3Degree,               // most occurrences within width>=3 clauses
  FirstUnassigned,          // lowest-index variable still in a clause
};

const char* strategy_name(BranchStrategy s);
std::optional<BranchStrategy> parse_strategy(const std::string& name);

struct SolverOptions {
  BranchStrategy strategy = BranchStrategy::MaxDegreeShortestClause;
  bool components = true;
  bool absorb = false;
  /// Expanded-node budget; empty means unlimited.
  std::optional<std::uint64_t> node_cap;
};

struct SearchStats {
  std::uint64_t nodes = 0;          // search nodes expanded
  std::uint64_t branch_nodes = 0;   // nodes that branched on a variable
  std::uint64_t propagations = 0;   // literals forced by unit clauses
  std::uint64_t components = 0;     // sub-problems created by splits
  std::uint64_t absorptions = 0;    // degree-one variables eliminated
  std::uint64_t max_depth = 0;

  void merge(const SearchStats& other, std::uint64_t depth_offset = 0) {
    nodes += other.nodes;
    branch_nodes += other.branch_nodes;
    propagations += other.propagations;
    components += other.components;
    absorptions += other.absorptions;
    max_depth = std::max(max_depth, other.max_depth + depth_offset);
  }
  bool operator==(const SearchStats&) const = default;
};

template <class T>
struct ResidualClause {
  std::vector<Literal> literals;
  T label;  // zero for hard clauses

  bool hard() const { return Ring<T>::is_zero(label); }
  std::size_t width() const { return literals.size(); }
  bool contains(Literal lit) const { return std::find(literals.begin(), literals.end(), lit) != literals.end(); }
};

/// One node of the search: the clauses still unresolved, the unassigned
/// variables this node is responsible for, and the scalar collected so far
/// (weights of variables forced true times folded soft-clause labels).
template <class T>
struct SolverState {
  std::vector<ResidualClause<T>> clauses;
  std::vector<Var> free_variables;  // sorted
  T scalar = Ring<T>::one();
  std::uint32_t depth = 0;

  bool mentions(Var v) const { return std::binary_search(free_variables.begin(), free_variables.end(), v); }
};

template <class T>
class SearchContext {
 public:
  SearchContext(const WeightedFormula& formula, SolverOptions opts) : options(std::move(opts)) {
    weights_.assign(formula.variable_count() + 1, Ring<T>::one());
    for (Var v = 1; v <= formula.variable_count(); ++v) weights_[v] = Ring<T>::from(formula.weight(v));
  }

  Var variable_count() const { return static_cast<Var>(weights_.size() - 1); }
  const T& weight(Var v) const { return weights_[v]; }

  SolverOptions options;
  SearchStats stats;

 private:
  std::vector<T> weights_;
};

enum class Propagation { Fixpoint, Conflict };

template <class T>
SolverState<T> initial_state(const WeightedFormula& formula) {
  SolverState<T> state;
  for (Var v = 1; v <= formula.variable_count(); ++v) state.free_variables.push_back(v);
  for (const Clause& c : formula.clauses()) {
    T label = Ring<T>::from(c.label);
    if (c.literals.empty() && !Ring<T>::is_zero(label)) {
      state.scalar *= label;  // violated by every assignment
      continue;
    }
    if (Ring<T>::is_one(label)) continue;
    state.clauses.push_back({c.literals, std::move(label)});
  }
  return state;
}

/// Sets `lit` true: satisfied clauses vanish, falsified literals are removed.
/// A hard clause emptied this way is a conflict; an emptied soft clause
/// multiplies its label into the scalar.
template <class T>
Propagation assign_literal(SolverState<T>& state, Literal lit, const SearchContext<T>& ctx) {
  auto it = std::lower_bound(state.free_variables.begin(), state.free_variables.end(), lit.variable);
  if (it != state.free_variables.end() && *it == lit.variable) state.free_variables.erase(it);
  if (!lit.negated) state.scalar *= ctx.weight(lit.variable);

  const Literal opposite = ~lit;
  std::vector<ResidualClause<T>> kept;
  kept.reserve(state.clauses.size());
  for (auto& clause : state.clauses) {
    if (clause.contains(lit)) continue;
    auto pos = std::find(clause.literals.begin(), clause.literals.end(), opposite);
    if (pos != clause.literals.end()) {
      clause.literals.erase(pos);
      if (clause.literals.empty()) {
        if (clause.hard()) return Propagation::Conflict;
        state.scalar *= clause.label;
        continue;
      }
    }
    kept.push_back(std::move(clause));
  }
  state.clauses = std::move(kept);
  return Propagation::Fixpoint;
}

/// Forces hard unit clauses until none remain. Soft unit clauses do not
/// force anything.
template <class T>
Propagation unit_propagate(SolverState<T>& state, SearchContext<T>& ctx) {
  for (const auto& c : state.clauses)
    if (c.literals.empty() && c.hard()) return Propagation::Conflict;
  for (;;) {
    auto unit = std::find_if(state.clauses.begin(), state.clauses.end(),
                             [](const ResidualClause<T>& c) { return c.hard() && c.width() == 1; });
    if (unit == state.clauses.end()) return Propagation::Fixpoint;
    const Literal lit = unit->literals.front();
    ++ctx.stats.propagations;
    if (assign_literal(state, lit, ctx) == Propagation::Conflict) return Propagation::Conflict;
  }
}

/// Value of a clause-free state: every remaining variable is summed out
/// independently, contributing (1 + weight).
template <class T>
T leaf_value(const SolverState<T>& state, const SearchContext<T>& ctx) {
  T value = state.scalar;
  for (Var v : state.free_variables) value *= Ring<T>::one() + ctx.weight(v);
  return value;
}

/// Partitions the residual formula into connected components of the
/// variable/clause incidence graph. Variables in no clause are summed out
/// into the scalar, and the whole scalar goes to the first component, so the
/// product of the component counts equals the count of `state`.
template <class T>
std::vector<SolverState<T>> split_components(SolverState<T> state, const SearchContext<T>& ctx) {
  std::vector<Var> parent(ctx.variable_count() + 1);
  for (Var v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](Var v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> occurs(ctx.variable_count() + 1, false);
  for (const auto& c : state.clauses) {
    for (const Literal& lit : c.literals) {
      occurs[lit.variable] = true;
      Var a = find(c.literals.front().variable);
      Var b = find(lit.variable);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  T scalar = state.scalar;
  for (Var v : state.free_variables)
    if (!occurs[v]) scalar *= Ring<T>::one() + ctx.weight(v);

  std::vector<SolverState<T>> parts;
  std::vector<std::size_t> part_of_root(ctx.variable_count() + 1, SIZE_MAX);
  for (auto& c : state.clauses) {
    if (c.literals.empty()) {
      // Only soft empty clauses can remain here; keep them with the scalar.
      if (parts.empty()) parts.emplace_back();
      parts.front().clauses.push_back(std::move(c));
      continue;
    }
    Var root = find(c.literals.front().variable);
    if (part_of_root[root] == SIZE_MAX) {
      part_of_root[root] = parts.size();
      parts.emplace_back();
    }
    parts[part_of_root[root]].clauses.push_back(std::move(c));
  }
  for (Var v : state.free_variables)
    if (occurs[v]) parts[part_of_root[find(v)]].free_variables.push_back(v);

  if (parts.empty()) parts.emplace_back();
  for (auto& p : parts) {
    p.depth = state.depth;
    p.scalar = Ring<T>::one();
  }
  parts.front().scalar = scalar;
  return parts;
}

namespace detail {

// Sums out `lit.variable`, whose only occurrence is clause `index`.
// The clause may become empty, in which case its label is folded in.
template <class T>
void absorb_occurrence(SolverState<T>& state, std::size_t index, Literal lit, const SearchContext<T>& ctx) {
  auto& clause = state.clauses[index];
  const T& w = ctx.weight(lit.variable);
  const T one_plus_w = Ring<T>::one() + w;
  // positive: x=0 gives [R or a], x=1 gives w
  // negative: x=0 gives 1,        x=1 gives w * [R or a]
  T label = lit.negated ? Ring<T>::divide(Ring<T>::one() + clause.label * w, one_plus_w)
                        : Ring<T>::divide(clause.label + w, one_plus_w);
  state.scalar *= one_plus_w;
  clause.label = std::move(label);
  clause.literals.erase(std::find(clause.literals.begin(), clause.literals.end(), lit));
  auto it = std::lower_bound(state.free_variables.begin(), state.free_variables.end(), lit.variable);
  if (it != state.free_variables.end() && *it == lit.variable) state.free_variables.erase(it);
}

// Empty clauses fold their label; label-one clauses are constant 1.
template <class T>
void drop_constant_clauses(SolverState<T>& state) {
  std::vector<ResidualClause<T>> kept;
  kept.reserve(state.clauses.size());
  for (auto& c : state.clauses) {
    if (c.literals.empty()) {
      state.scalar *= c.label;
      continue;
    }
    if (Ring<T>::is_one(c.label)) continue;
    kept.push_back(std::move(c));
  }
  state.clauses = std::move(kept);
}

}  // namespace detail

/// Eliminates variable `v` occurring in exactly one clause C with label a:
/// scalar *= 1 + w, and C loses the literal and gets label (a + w)/(1 + w)
/// for a positive occurrence or (1 + a w)/(1 + w) for a negative one.
/// Throws RuleNotApplicable when v does not occur exactly once or 1 + w = 0.
template <class T>
void eliminate_degree_one(SolverState<T>& state, Var v, SearchContext<T>& ctx) {
  if constexpr (!Ring<T>::has_division) {
    throw RuleNotApplicable("degree-one elimination needs division; use a rational or complex ring");
  } else {
    std::optional<std::pair<std::size_t, Literal>> occurrence;
    std::size_t degree = 0;
    for (std::size_t i = 0; i < state.clauses.size(); ++i)
      for (const Literal& lit : state.clauses[i].literals)
        if (lit.variable == v) {
          ++degree;
          occurrence = {i, lit};
        }
    if (degree != 1)
      throw RuleNotApplicable("x" + std::to_string(v) + " occurs in " + std::to_string(degree) + " clauses, not 1");
    if (Ring<T>::is_negligible(Ring<T>::one() + ctx.weight(v)))
      throw RuleNotApplicable("x" + std::to_string(v) + " has weight -1 (1 + w = 0)");
    detail::absorb_occurrence(state, occurrence->first, occurrence->second, ctx);
    detail::drop_constant_clauses(state);
    ++ctx.stats.absorptions;
  }
}

/// One sweep of degree-one elimination over all eligible variables, in
/// increasing index order. Returns the number eliminated.
template <class T>
std::size_t absorb_degree_one(SolverState<T>& state, SearchContext<T>& ctx) {
  if constexpr (!Ring<T>::has_division) {
    return 0;
  } else {
    const Var n = ctx.variable_count();
    std::vector<std::uint32_t> degree(n + 1, 0);
    std::vector<std::pair<std::size_t, Literal>> where(n + 1);
    for (std::size_t i = 0; i < state.clauses.size(); ++i)
      for (const Literal& lit : state.clauses[i].literals) {
        ++degree[lit.variable];
        where[lit.variable] = {i, lit};
      }
    std::size_t eliminated = 0;
    for (Var v = 1; v <= n; ++v) {
      if (degree[v] != 1 || Ring<T>::is_negligible(Ring<T>::one() + ctx.weight(v))) continue;
      detail::absorb_occurrence(state, where[v].first, where[v].second, ctx);
      ++eliminated;
    }
    if (eliminated > 0) {
      detail::drop_constant_clauses(state);
      ctx.stats.absorptions += eliminated;
    }
    return eliminated;
  }
}

/// Picks the branching variable; ties go to the lowest index. Requires at
/// least one non-empty clause.
template <class T>
Var pick_branch_variable(const SolverState<T>& state, BranchStrategy strategy, Var variable_count) {
  std::vector<std::uint32_t> total(variable_count + 1, 0);
  std::vector<std::uint32_t> focus(variable_count + 1, 0);
  std::size_t shortest = SIZE_MAX;
  for (const auto& c : state.clauses)
    if (!c.literals.empty()) shortest = std::min(shortest, c.width());

  for (const auto& c : state.clauses) {
    for (const Literal& lit : c.literals) {
      ++total[lit.variable];
      bool in_focus = false;
      switch (strategy) {
        case BranchStrategy::MaxDegreeShortestClause:
          in_focus = c.width() == shortest;
          break;
        case BranchStrategy::Max3Degree:
          in_focus = c.width() >= 3;
          break;
        default:
          break;
      }
      if (in_focus) ++focus[lit.variable];
    }
  }

  Var best = 0;
  for (Var v = 1; v <= variable_count; ++v) {
    if (total[v] == 0) continue;
    if (strategy == BranchStrategy::FirstUnassigned) return v;
    if (best == 0) {
      best = v;
      continue;
    }
    bool better = strategy == BranchStrategy::MaxOccurrence
                      ? total[v] > total[best]
                      : (focus[v] > focus[best] || (focus[v] == focus[best] && total[v] > total[best]));
    if (better) best = v;
  }
  return best;
}

}  // namespace wmc
