#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "wmc/ring.hpp"

namespace wmc {

using Var = std::uint32_t;

struct Literal {
  Var variable = 1;
  bool negated = false;

  /// DIMACS convention: `3` is x3, `-3` is not-x3. Zero is rejected.
  static Literal from_dimacs(std::int64_t value);
  std::int64_t to_dimacs() const {
    return negated ? -static_cast<std::int64_t>(variable) : static_cast<std::int64_t>(variable);
  }
  Literal operator~() const { return {variable, !negated}; }
  /// True when the literal holds under `value` for its variable.
  bool satisfied_by(bool value) const { return value != negated; }

  auto operator<=>(const Literal&) const = default;
};

/// A disjunction contributing 1 when satisfied and `label` when violated.
/// Label 0 is an ordinary (hard) clause.
struct Clause {
  std::vector<Literal> literals;
  RingValue label;

  std::size_t width() const { return literals.size(); }
  bool is_hard() const { return label.is_zero(); }
  bool operator==(const Clause&) const = default;
};

/// CNF with per-variable weights (applied when the variable is true) and
/// per-clause violation labels. Variables are 1..variable_count().
///
/// The sum represented is
///   sum over x of  prod_i weight(i)^{x_i} * prod_C (C(x) ? 1 : label(C)).
class WeightedFormula {
 public:
  explicit WeightedFormula(Var variable_count = 0);

  Var variable_count() const { return static_cast<Var>(weights_.size() - 1); }
  std::size_t clause_count() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t index) const { return clauses_.at(index); }

  /// Appends a fresh variable and returns its index.
  Var add_variable(RingValue weight = 1);
  /// Throws MalformedInstance when a literal names a variable outside 1..n.
  void add_clause(std::vector<Literal> literals, RingValue label = 0);
  void add_clause(std::initializer_list<std::int64_t> dimacs, RingValue label = 0);

  const RingValue& weight(Var v) const;
  /// Weights must be nonzero.
  void set_weight(Var v, RingValue w);
  void set_label(std::size_t clause_index, RingValue label);

  /// All weights 1 and all labels 0.
  bool is_plain() const;
  /// Weights in {1, -1} and all labels 0.
  bool is_signed() const;
  bool all_hard() const;
  /// Smallest ring that holds every weight and label.
  RingKind ring_kind() const;
  std::size_t max_width() const;
  std::vector<Var> negative_variables() const;

  bool operator==(const WeightedFormula&) const = default;

 private:
  void check_variable(Var v) const;

  std::vector<Clause> clauses_;
  std::vector<RingValue> weights_;  // index 0 unused
};

/// Partial or total truth assignment over 1..n.
class Assignment {
 public:
  explicit Assignment(Var variable_count) : values_(variable_count + 1) {}
  /// Bit (i - 1) of `bits` is the value of x_i.
  static Assignment from_bits(Var variable_count, std::uint64_t bits);

  Var variable_count() const { return static_cast<Var>(values_.size() - 1); }
  void set(Var v, bool value) { values_.at(v) = value; }
  std::optional<bool> get(Var v) const { return values_.at(v); }
  bool is_total() const;

 private:
  std::vector<std::optional<bool>> values_;
};

/// Drops repeated literals and tautological clauses; removes exact
/// duplicates among hard clauses. Soft duplicates are kept since each copy
/// contributes its label. Count-preserving.
WeightedFormula normalize(const WeightedFormula& formula);

/// Summand of the weighted count at one total assignment.
RingValue evaluate(const WeightedFormula& formula, const Assignment& assignment);

/// Same clauses, all weights reset to 1.
WeightedFormula with_unit_weights(const WeightedFormula& formula);

}  // namespace wmc
