#include "wmc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace wmc {

namespace {

struct MaskedClause {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  bool satisfied(std::uint64_t bits) const { return (bits & positive) != 0 || (~bits & negative) != 0; }
};

void check_cap(const WeightedFormula& formula, const OracleOptions& options) {
  Var cap = std::min<Var>(options.max_variables, 62);
  if (formula.variable_count() > cap)
    throw CapExceeded("brute-force oracle refuses n = " + std::to_string(formula.variable_count()) +
                      " (cap " + std::to_string(cap) + ")");
}

std::vector<MaskedClause> mask_clauses(const WeightedFormula& formula) {
  std::vector<MaskedClause> out;
  for (const Clause& clause : formula.clauses()) {
    MaskedClause m;
    for (const Literal& lit : clause.literals) {
      std::uint64_t bit = std::uint64_t{1} << (lit.variable - 1);
      (lit.negated ? m.negative : m.positive) |= bit;
    }
    out.push_back(m);
  }
  return out;
}

template <class T>
RingValue enumerate(const WeightedFormula& formula) {
  const Var n = formula.variable_count();
  const auto clauses = mask_clauses(formula);
  std::vector<T> labels;
  for (const Clause& c : formula.clauses()) labels.push_back(Ring<T>::from(c.label));
  std::vector<T> weights(n + 1, Ring<T>::one());
  std::vector<bool> unit_weight(n + 1, true);
  for (Var v = 1; v <= n; ++v) {
    weights[v] = Ring<T>::from(formula.weight(v));
    unit_weight[v] = Ring<T>::is_one(weights[v]);
  }

  T total = Ring<T>::zero();
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    T term = Ring<T>::one();
    bool vanished = false;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if (clauses[i].satisfied(bits)) continue;
      if (Ring<T>::is_zero(labels[i])) {
        vanished = true;
        break;
      }
      term *= labels[i];
    }
    if (vanished) continue;
    for (Var v = 1; v <= n; ++v)
      if (!unit_weight[v] && ((bits >> (v - 1)) & 1U)) term *= weights[v];
    total += term;
  }
  return Ring<T>::to_value(total);
}

}  // namespace

RingValue brute_force_count(const WeightedFormula& formula, const OracleOptions& options) {
  check_cap(formula, options);
  switch (formula.ring_kind()) {
    case RingKind::Integer:
      return enumerate<Integer>(formula);
    case RingKind::Rational:
      return enumerate<Rational>(formula);
    default:
      return enumerate<Complex>(formula);
  }
}

Integer brute_force_parity_count(const WeightedFormula& formula, std::span<const Var> negative_set,
                                 const OracleOptions& options) {
  check_cap(formula, options);
  if (!formula.is_plain()) throw UnsupportedInstance("parity count requires a plain hard-clause formula");
  std::uint64_t parity_mask = 0;
  for (Var v : negative_set) {
    if (v < 1 || v > formula.variable_count())
      throw MalformedInstance("negative-set variable " + std::to_string(v) + " out of range");
    parity_mask |= std::uint64_t{1} << (v - 1);
  }

  const auto clauses = mask_clauses(formula);
  std::int64_t even = 0;
  std::int64_t odd = 0;
  const std::uint64_t limit = std::uint64_t{1} << formula.variable_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    bool model = true;
    for (const MaskedClause& c : clauses) {
      if (!c.satisfied(bits)) {
        model = false;
        break;
      }
    }
    if (!model) continue;
    (__builtin_popcountll(bits & parity_mask) % 2 == 0 ? even : odd) += 1;
  }
  return Integer(static_cast<long>(even)) - Integer(static_cast<long>(odd));
}

}  // namespace wmc
