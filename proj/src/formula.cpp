#include "wmc/formula.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace wmc {

Literal Literal::from_dimacs(std::int64_t value) {
  if (value == 0) throw MalformedInstance("literal 0 is not a variable");
  if (value > INT32_MAX || value < -static_cast<std::int64_t>(INT32_MAX))
    throw MalformedInstance("literal " + std::to_string(value) + " out of range");
  return {static_cast<Var>(value < 0 ? -value : value), value < 0};
}

WeightedFormula::WeightedFormula(Var variable_count) : weights_(variable_count + 1, RingValue(1)) {}

Var WeightedFormula::add_variable(RingValue weight) {
  if (weight.is_zero()) throw MalformedInstance("variable weights must be nonzero");
  weights_.push_back(std::move(weight));
  return variable_count();
}

void WeightedFormula::check_variable(Var v) const {
  if (v < 1 || v > variable_count())
    throw MalformedInstance("variable " + std::to_string(v) + " outside 1.." + std::to_string(variable_count()));
}

void WeightedFormula::add_clause(std::vector<Literal> literals, RingValue label) {
  for (const Literal& lit : literals) check_variable(lit.variable);
  clauses_.push_back(Clause{std::move(literals), std::move(label)});
}

void WeightedFormula::add_clause(std::initializer_list<std::int64_t> dimacs, RingValue label) {
  std::vector<Literal> literals;
  literals.reserve(dimacs.size());
  for (std::int64_t v : dimacs) literals.push_back(Literal::from_dimacs(v));
  add_clause(std::move(literals), std::move(label));
}

const RingValue& WeightedFormula::weight(Var v) const {
  check_variable(v);
  return weights_[v];
}

void WeightedFormula::set_weight(Var v, RingValue w) {
  check_variable(v);
  if (w.is_zero()) throw MalformedInstance("weight of x" + std::to_string(v) + " must be nonzero");
  weights_[v] = std::move(w);
}

void WeightedFormula::set_label(std::size_t clause_index, RingValue label) {
  if (clause_index >= clauses_.size())
    throw MalformedInstance("clause index " + std::to_string(clause_index + 1) + " out of range");
  clauses_[clause_index].label = std::move(label);
}

bool WeightedFormula::all_hard() const {
  return std::all_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.is_hard(); });
}

bool WeightedFormula::is_plain() const {
  return all_hard() && std::all_of(weights_.begin() + 1, weights_.end(), [](const RingValue& w) { return w.is_one(); });
}

bool WeightedFormula::is_signed() const {
  return all_hard() && std::all_of(weights_.begin() + 1, weights_.end(), [](const RingValue& w) {
           return w.is_one() || w == RingValue(-1);
         });
}

RingKind WeightedFormula::ring_kind() const {
  RingKind kind = RingKind::Integer;
  for (std::size_t v = 1; v < weights_.size(); ++v) kind = std::max(kind, weights_[v].kind());
  for (const Clause& c : clauses_) kind = std::max(kind, c.label.kind());
  return kind;
}

std::size_t WeightedFormula::max_width() const {
  std::size_t k = 0;
  for (const Clause& c : clauses_) k = std::max(k, c.width());
  return k;
}

std::vector<Var> WeightedFormula::negative_variables() const {
  std::vector<Var> out;
  for (Var v = 1; v <= variable_count(); ++v)
    if (weights_[v] == RingValue(-1)) out.push_back(v);
  return out;
}

Assignment Assignment::from_bits(Var variable_count, std::uint64_t bits) {
  Assignment a(variable_count);
  for (Var v = 1; v <= variable_count; ++v) a.set(v, ((bits >> (v - 1)) & 1U) != 0);
  return a;
}

bool Assignment::is_total() const {
  return std::all_of(values_.begin() + 1, values_.end(), [](const auto& x) { return x.has_value(); });
}

WeightedFormula normalize(const WeightedFormula& formula) {
  WeightedFormula out(formula.variable_count());
  for (Var v = 1; v <= formula.variable_count(); ++v) out.set_weight(v, formula.weight(v));

  std::set<std::vector<Literal>> seen_hard;
  for (const Clause& clause : formula.clauses()) {
    std::vector<Literal> lits;
    bool tautology = false;
    for (const Literal& lit : clause.literals) {
      if (std::find(lits.begin(), lits.end(), lit) != lits.end()) continue;
      if (std::find(lits.begin(), lits.end(), ~lit) != lits.end()) tautology = true;
      lits.push_back(lit);
    }
    if (tautology) continue;
    if (clause.is_hard()) {
      std::vector<Literal> key = lits;
      std::sort(key.begin(), key.end());
      if (!seen_hard.insert(std::move(key)).second) continue;
    }
    out.add_clause(std::move(lits), clause.label);
  }
  return out;
}

RingValue evaluate(const WeightedFormula& formula, const Assignment& assignment) {
  if (assignment.variable_count() != formula.variable_count())
    throw MalformedInstance("assignment covers " + std::to_string(assignment.variable_count()) +
                            " variables, formula has " + std::to_string(formula.variable_count()));
  if (!assignment.is_total()) throw MalformedInstance("evaluate requires a total assignment");

  RingValue value(1);
  for (Var v = 1; v <= formula.variable_count(); ++v)
    if (*assignment.get(v)) value = value * formula.weight(v);
  for (const Clause& clause : formula.clauses()) {
    bool satisfied = std::any_of(clause.literals.begin(), clause.literals.end(),
                                 [&](const Literal& lit) { return lit.satisfied_by(*assignment.get(lit.variable)); });
    if (!satisfied) value = value * clause.label;
  }
  return value;
}

WeightedFormula with_unit_weights(const WeightedFormula& formula) {
  WeightedFormula out(formula.variable_count());
  for (const Clause& c : formula.clauses()) out.add_clause(c.literals, c.label);
  return out;
}

}  // namespace wmc
