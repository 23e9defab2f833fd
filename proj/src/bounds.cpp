#include "wmc/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace wmc {

namespace {

// Lower edge of the k = 3 improvement region; the alternate #3SAT bound
// only wins against the clause-based bound above it.
constexpr double kThreeSatLowerDensity = 1.2577;

}  // namespace

InstanceStats instance_stats(const WeightedFormula& formula) {
  InstanceStats s;
  s.variables = formula.variable_count();
  s.clauses = formula.clause_count();
  std::vector<std::uint64_t> degree(formula.variable_count() + 1, 0);
  for (const Clause& c : formula.clauses()) {
    s.literals += c.width();
    s.max_width = std::max<std::uint64_t>(s.max_width, c.width());
    if (c.width() >= 3) {
      ++s.long_clauses;
      s.long_literals += c.width();
    }
    for (const Literal& lit : c.literals) ++degree[lit.variable];
  }
  for (std::uint64_t d : degree) s.max_degree = std::max(s.max_degree, d);
  if (s.variables > 0) {
    Integer n(static_cast<unsigned long>(s.variables));
    s.density = Rational(Integer(static_cast<unsigned long>(s.clauses)), n);
    s.long_density = Rational(Integer(static_cast<unsigned long>(s.long_clauses)), n);
    s.avg_degree = Rational(Integer(static_cast<unsigned long>(s.literals)), n);
    s.density->canonicalize();
    s.long_density->canonicalize();
    s.avg_degree->canonicalize();
  }
  return s;
}

double variable_exponent() { return std::log2(kTwoSatVariableBase); }

double density_threshold() { return 1.0 / variable_exponent() - 1.0; }

double avg_degree_threshold() { return 1.0 / std::log2(kTwoSatClauseBase); }

std::optional<double> gadget_bound_exponent(const InstanceStats& stats) {
  if (stats.variables == 0) return std::nullopt;
  return variable_exponent() * static_cast<double>(stats.variables + stats.long_clauses) /
         static_cast<double>(stats.variables);
}

std::optional<double> literal_bound_exponent(const InstanceStats& stats) {
  if (stats.variables == 0) return std::nullopt;
  return std::log2(kTwoSatClauseBase) * static_cast<double>(stats.literals) / static_cast<double>(stats.variables);
}

double two_sat_literal_base() { return std::sqrt(kTwoSatClauseBase); }

Rational n23_fraction(std::uint64_t d) {
  Rational remaining(1);
  for (std::uint64_t i = 3; i <= d; ++i) {
    Integer denom(static_cast<unsigned long>(2 * i + 1));
    remaining *= Rational(denom - 1, denom);
  }
  Rational out = 1 - remaining;
  out.canonicalize();
  return out;
}

double three_sat_exponent(std::uint64_t d) {
  // 2^{n23} branches, each finished on (n - n23)(1 + 2/3) variables.
  const double finish = (5.0 / 3.0) * variable_exponent();
  return finish + (1.0 - finish) * n23_fraction(d).get_d();
}

double three_sat_base(std::uint64_t d) { return std::exp2(three_sat_exponent(d)); }

std::uint64_t three_degree_for_density(const Rational& long_density) {
  Rational scaled = long_density * 3;
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return sgn(q) <= 0 ? 0 : q.get_ui();
}

double clause_count_base(std::uint64_t clauses_per_gate) {
  return std::pow(kTwoSatClauseBase, static_cast<double>(clauses_per_gate));
}

double circuit_exponent(std::uint64_t k) { return clause_count_base(k + 1); }

const std::vector<DensityRow>& density_table() {
  static const std::vector<DensityRow> rows = {
      {2, std::nullopt, std::nullopt}, {3, std::nullopt, 2.333}, {4, std::nullopt, 2.077},
      {5, std::nullopt, 2.170},        {6, std::nullopt, 2.212}, {7, 0.968, 2.231},
      {8, 1.106, 2.241},               {9, 1.207, 2.246},
  };
  return rows;
}

DensityReport density_comparison(const InstanceStats& stats) {
  DensityReport report;
  const auto& rows = density_table();
  auto it = std::find_if(rows.begin(), rows.end(), [&](const DensityRow& r) { return r.k == stats.max_width; });
  if (it == rows.end()) {
    report.note = "k outside tabulated range 2..9";
    return report;
  }
  report.row = *it;
  if (!stats.density) {
    report.note = "density undefined (n = 0)";
    return report;
  }
  const double delta = stats.density->get_d();
  if (it->worst_case) {
    report.improves_worst_case = delta < *it->worst_case;
    if (it->k == 3) {
      report.improves_worst_case = report.improves_worst_case && delta > kThreeSatLowerDensity;
      report.note = "k = 3 uses the #3SAT strategy and needs delta > 1.2577";
    }
  }
  if (it->average_case) report.improves_average_case = delta < *it->average_case;
  if (!it->worst_case && !it->average_case) report.note = "no improvement region for this k";
  return report;
}

BoundReport bound_report(const InstanceStats& stats) {
  BoundReport r;
  r.gadget_bound_exponent = gadget_bound_exponent(stats);
  r.literal_bound_exponent = literal_bound_exponent(stats);
  r.beats_brute_force = r.gadget_bound_exponent && *r.gadget_bound_exponent < 1.0;
  r.literal_bound_beats_brute_force = r.literal_bound_exponent && *r.literal_bound_exponent < 1.0;
  r.density = density_comparison(stats);
  if (stats.max_width <= 3 && stats.long_density) {
    r.three_degree = three_degree_for_density(*stats.long_density);
    r.three_sat_exponent = three_sat_exponent(*r.three_degree);
  }
  return r;
}

std::string decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  // round half up on the magnitude
  Integer units;
  Integer twice_num = scaled.get_num() * 2 + scaled.get_den();
  Integer twice_den = scaled.get_den() * 2;
  mpz_fdiv_q(units.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
  std::string body = units.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (sgn(q) < 0 && units != 0 ? "-" : "") + body;
}

}  // namespace wmc
