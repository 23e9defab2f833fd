#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "wmc/circuit.hpp"
#include "wmc/formula.hpp"

namespace wmc::gen {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Clause over distinct variables with random signs; width capped at n.
inline std::vector<Literal> random_clause(Rng& rng, Var n, std::size_t width) {
  width = std::min<std::size_t>(width, n);
  std::vector<Var> vars(n);
  for (Var v = 0; v < n; ++v) vars[v] = v + 1;
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<Literal> lits;
  for (std::size_t i = 0; i < width; ++i) lits.push_back({vars[i], uniform(rng, 0, 1) == 1});
  return lits;
}

struct CnfShape {
  Var min_vars = 4;
  Var max_vars = 12;
  std::size_t max_width = 6;
  double min_density = 0.2;
  double max_density = 3.0;
};

/// Plain CNF. Widths are uniform in 1..k for a per-instance k, with one
/// clause forced to width k so max_width is hit when n allows.
inline WeightedFormula random_cnf(Rng& rng, const CnfShape& shape = {}) {
  const Var n = static_cast<Var>(uniform(rng, shape.min_vars, shape.max_vars));
  const std::size_t k = uniform(rng, 1, shape.max_width);
  const double delta = uniform_real(rng, shape.min_density, shape.max_density);
  const std::size_t m = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(delta * n)));
  WeightedFormula f(n);
  for (std::size_t i = 0; i < m; ++i) f.add_clause(random_clause(rng, n, i == 0 ? k : uniform(rng, 1, k)));
  return f;
}

inline std::vector<Var> random_subset(Rng& rng, Var n) {
  std::vector<Var> out;
  for (Var v = 1; v <= n; ++v)
    if (uniform(rng, 0, 1) == 1) out.push_back(v);
  return out;
}

/// Weights from {1/2, 1, 3/2, 2}; optionally a few soft clauses.
inline WeightedFormula random_weighted(Rng& rng, const CnfShape& shape = {}, bool soft_labels = false) {
  static const Rational kWeights[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  WeightedFormula f = random_cnf(rng, shape);
  for (Var v = 1; v <= f.variable_count(); ++v) f.set_weight(v, RingValue(kWeights[uniform(rng, 0, 3)]));
  if (soft_labels)
    for (std::size_t i = 0; i < f.clause_count(); ++i)
      if (uniform(rng, 0, 3) == 0) f.set_label(i, RingValue(kWeights[uniform(rng, 0, 3)]));
  return f;
}

struct CircuitShape {
  Qubit max_qubits = 8;
  std::size_t max_gates = 30;
  bool allow_wide_ckz = false;  // C^kZ beyond CCZ
};

inline Circuit random_circuit(Rng& rng, const CircuitShape& shape = {}) {
  Circuit c;
  c.qubit_count = static_cast<Qubit>(uniform(rng, 1, shape.max_qubits));
  const std::size_t g = uniform(rng, 0, shape.max_gates);
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<Qubit> qs(c.qubit_count);
    for (Qubit q = 0; q < c.qubit_count; ++q) qs[q] = q;
    std::shuffle(qs.begin(), qs.end(), rng);
    std::uint64_t kind = uniform(rng, 0, 3);
    if (kind == 1 && c.qubit_count < 2) kind = 0;
    if (kind == 2 && c.qubit_count < 3) kind = 0;
    switch (kind) {
      case 0:
        c.gates.push_back(Gate::h(qs[0]));
        break;
      case 1:
        c.gates.push_back(Gate::cz(qs[0], qs[1]));
        break;
      case 2: {
        std::size_t width = shape.allow_wide_ckz ? uniform(rng, 3, std::min<Qubit>(c.qubit_count, 5)) : 3;
        c.gates.push_back(Gate::ckz({qs.begin(), qs.begin() + width}));
        break;
      }
      default:
        c.gates.push_back(Gate::rz(qs[0], uniform_real(rng, -3.2, 3.2)));
    }
  }
  return c;
}

inline std::string random_boundary(Rng& rng, Qubit n) {
  std::string s(n, '+');
  for (char& ch : s) ch = uniform(rng, 0, 1) ? '+' : '0';
  return s;
}

}  // namespace wmc::gen
