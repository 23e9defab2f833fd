#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wmc/formula.hpp"

namespace wmc {

/// Size parameters of a CNF instance.
struct InstanceStats {
  std::uint64_t variables = 0;         // n
  std::uint64_t clauses = 0;           // m
  std::uint64_t long_clauses = 0;      // m>=3, clauses of width at least three
  std::uint64_t max_width = 0;         // k
  std::uint64_t literals = 0;          // L
  std::uint64_t long_literals = 0;     // literals inside width>=3 clauses
  std::uint64_t max_degree = 0;        // d, most clauses any variable occurs in
  // Ratios over n; empty when n = 0.
  std::optional<Rational> density;      // m / n
  std::optional<Rational> long_density; // m>=3 / n
  std::optional<Rational> avg_degree;   // L / n
};

InstanceStats instance_stats(const WeightedFormula& formula);

/// Runtime bases as printed in the literature, to four decimals.
inline constexpr double kTwoSatVariableBase = 1.2377;  // #2SAT in variables
inline constexpr double kTwoSatClauseBase = 1.1740;    // #2SAT in clauses

/// Published rounded thresholds, kept as reference data next to the
/// recomputed values.
struct PublishedFigures {
  static constexpr double density_threshold = 2.2503;
  static constexpr double variable_exponent = 0.3068;
  static constexpr double avg_degree_threshold = 4.3209;
  static constexpr double two_sat_literal_base = 1.0835;
  static constexpr double n23_fraction_d5 = 0.3074;
  static constexpr double three_sat_base_d4 = 1.5463;
  static constexpr double three_sat_base_d5 = 1.5829;
  static constexpr double three_sat_base_d7 = 1.6350;
  static constexpr double circuit_base_cz = 1.3783;
  static constexpr double circuit_base_ccz = 1.6181;
  static constexpr double circuit_base_ccz_decomposed = 6.8552;
};

/// log2(1.2377): base-2 exponent per variable of the #2SAT bound.
double variable_exponent();
/// 1 / log2(1.2377) - 1: density below which n + m>=3 variables beat 2^n.
double density_threshold();
/// 1 / log2(1.1740): average degree below which 1.1740^L beats 2^n.
double avg_degree_threshold();

/// log2(1.2377) * (n + m>=3) / n. Empty when n = 0.
std::optional<double> gadget_bound_exponent(const InstanceStats& stats);
/// log2(1.1740) * L / n. Empty when n = 0.
std::optional<double> literal_bound_exponent(const InstanceStats& stats);
/// 1.1740^{1/2}: per-literal base when every clause has width two.
double two_sat_literal_base();

/// Fraction of variables branched on before the width-3 clause density
/// drops to 2/3: 1 - prod_{i=3}^{d} (1 - 1/(2i+1)). Zero for d <= 2.
Rational n23_fraction(std::uint64_t d);
/// Base-2 exponent c such that the #3SAT strategy runs in 2^{c n}.
double three_sat_exponent(std::uint64_t d);
double three_sat_base(std::uint64_t d);
/// d = ceil(3 * delta_3) for a given 3-clause density.
std::uint64_t three_degree_for_density(const Rational& long_density);

/// 1.1740^c for a gadget adding c clauses per gate.
double clause_count_base(std::uint64_t clauses_per_gate);
/// Per-gate base for circuits of C^kZ gates: 1.1740^{k+1}.
double circuit_exponent(std::uint64_t k);

struct DensityRow {
  std::uint64_t k;
  std::optional<double> average_case;  // threshold on delta, empty for "--"
  std::optional<double> worst_case;
};

/// Maximum densities at which the n + m>=3 bound improves on prior work,
/// k = 2..9.
const std::vector<DensityRow>& density_table();

struct DensityReport {
  std::optional<DensityRow> row;  // empty when k is outside the table
  bool improves_worst_case = false;
  bool improves_average_case = false;
  std::string note;
};

/// Threshold membership only; no runtime promise is implied.
DensityReport density_comparison(const InstanceStats& stats);

struct BoundReport {
  std::optional<double> gadget_bound_exponent;
  std::optional<double> literal_bound_exponent;
  bool beats_brute_force = false;
  bool literal_bound_beats_brute_force = false;
  DensityReport density;
  std::optional<std::uint64_t> three_degree;       // when k <= 3
  std::optional<double> three_sat_exponent;        // when k <= 3
};

BoundReport bound_report(const InstanceStats& stats);

/// Fixed four-decimal rendering of a rational.
std::string decimal(const Rational& q, int digits = 4);

}  // namespace wmc
