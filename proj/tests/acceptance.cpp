// Acceptance suite. Prints one PASS/FAIL line per criterion; the exit code is
// nonzero when any selected criterion fails. Usage: wmc_acceptance [1..9 ...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "random_instances.hpp"
#include "wmc/bounds.hpp"
#include "wmc/circuit.hpp"
#include "wmc/cli.hpp"
#include "wmc/dimacs.hpp"
#include "wmc/engine.hpp"
#include "wmc/oracle.hpp"
#include "wmc/reduction.hpp"

#ifndef WMC_DATA_DIR
#define WMC_DATA_DIR "data"
#endif

using namespace wmc;
using gen::Rng;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

WeightedFormula worked_example() {
  WeightedFormula f(4);
  f.add_clause({-1, -2, -3});
  f.add_clause({2, 3});
  f.add_clause({-1, 3});
  f.add_clause({3, 4});
  return f;
}

Verdict oracle_equivalence() {
  Rng rng(1001);
  auto start = Clock::now();
  std::size_t with_3to2 = 0;
  for (int i = 0; i < 500; ++i) {
    WeightedFormula f = gen::random_cnf(rng, {4, 12, 6, 0.2, 3.0});
    RingValue expected = brute_force_count(f);
    auto mismatch = [&](const char* algo, const RingValue& got) {
      return Verdict{false, std::string(algo) + " gave " + got.to_string() + ", oracle " + expected.to_string() +
                                " on instance " + std::to_string(i)};
    };
    if (RingValue v = cdp(f).value; !(v == expected)) return mismatch("cdp", v);
    if (RingValue v = cdp_to2(f).value; !(v == expected)) return mismatch("cdp_to2", v);
    if (f.max_width() <= 3) {
      ++with_3to2;
      if (RingValue v = cdp_3to2(f).value; !(v == expected)) return mismatch("cdp_3to2", v);
    }
  }
  std::ostringstream d;
  d << "500 instances, " << with_3to2 << " also via cdp_3to2, " << seconds_since(start) << " s";
  return {true, d.str()};
}

Verdict reduction_identity() {
  Rng rng(1002);
  std::size_t gadgets = 0;
  std::size_t redrawn = 0;
  // The oracle enumerates the reduced instance, so its n + m>=3 variables are
  // kept within the oracle cap; larger draws are replaced.
  const OracleOptions cap{24};
  for (int i = 0; i < 500; ++i) {
    WeightedFormula f = gen::random_cnf(rng, {1, 10, 6, 0.2, 3.0});
    ReducedInstance r = reduce_to_2sat_pm(f);
    if (r.formula.variable_count() > cap.max_variables) {
      ++redrawn;
      --i;
      continue;
    }
    std::vector<Var> fresh;
    for (const auto& [clause, var] : r.map.fresh_variables) fresh.push_back(var);
    gadgets += fresh.size();
    RingValue direct = brute_force_count(f);
    RingValue reduced = brute_force_count(r.formula, cap);
    Integer parity = brute_force_parity_count(with_unit_weights(r.formula), fresh, cap);
    if (!(direct == reduced) || !(direct == RingValue(parity)))
      return {false, "instance " + std::to_string(i) + ": " + direct.to_string() + " vs " + reduced.to_string() +
                         " vs " + parity.get_str()};
  }
  return {true, "500 instances, " + std::to_string(gadgets) + " gadget variables, " + std::to_string(redrawn) +
                    " draws over the oracle cap replaced"};
}

Verdict signed_identity() {
  Rng rng(1003);
  for (int i = 0; i < 200; ++i) {
    WeightedFormula f = gen::random_cnf(rng, {1, 12, 5, 0.2, 3.0});
    std::vector<Var> negative = gen::random_subset(rng, f.variable_count());
    RingValue weighted = cdp_signed(f, negative).value;
    Integer parity = brute_force_parity_count(f, negative);
    WeightedFormula signed_formula = f;
    for (Var v : negative) signed_formula.set_weight(v, RingValue(-1));
    RingValue oracle = brute_force_count(signed_formula);
    if (!(weighted == RingValue(parity)) || !(oracle == RingValue(parity)))
      return {false, "instance " + std::to_string(i) + ": " + weighted.to_string() + " / " + oracle.to_string() +
                         " vs parity " + parity.get_str()};
  }
  return {true, "200 instances"};
}

Verdict worked_example_count() {
  WeightedFormula f = worked_example();
  std::ostringstream d;
  bool ok = true;
  auto check = [&](const char* name, const RingValue& v) {
    d << name << "=" << v.to_string() << " ";
    ok = ok && v == RingValue(7);
  };
  check("oracle", brute_force_count(f));
  check("cdp", cdp(f).value);
  check("cdp_to2", cdp_to2(f).value);
  check("cdp_3to2", cdp_3to2(f).value);
  check("weighted", cdp_weighted(f).value);
  check("reduced_oracle", brute_force_count(reduce_to_2sat_pm(f).formula));
  return {ok, d.str()};
}

Verdict absorption() {
  Rng rng(1005);
  std::uint64_t absorbed = 0;
  for (int i = 0; i < 200; ++i) {
    WeightedFormula f = gen::random_weighted(rng, {4, 14, 4, 0.2, 2.0}, i % 2 == 1);
    SolverOptions on;
    on.absorb = true;
    CountResult with = cdp_weighted(f, on);
    CountResult without = cdp_weighted(f);
    absorbed += with.stats.absorptions;
    if (with.ring != RingKind::Rational || !(with.value == without.value))
      return {false, "instance " + std::to_string(i) + ": " + with.value.to_string() + " vs " +
                         without.value.to_string()};
  }
  return {true, "200 instances, exact rational equality, " + std::to_string(absorbed) + " absorptions"};
}

Verdict circuits() {
  Rng rng(1006);
  auto start = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Circuit c = gen::random_circuit(rng, {8, 30, false});
    std::size_t h = 0, cz = 0, ccz = 0;
    for (const Gate& g : c.gates) {
      h += g.kind == GateKind::H;
      cz += g.kind == GateKind::CZ;
      ccz += g.kind == GateKind::CkZ;
    }
    const std::size_t clauses = circuit_to_weighted_2sat(c).formula.clause_count();
    if (clauses != 2 * (h + cz) + 3 * ccz)
      return {false, "circuit " + std::to_string(i) + ": " + std::to_string(clauses) + " clauses"};

    Boundary b{gen::random_boundary(rng, c.qubit_count), gen::random_boundary(rng, c.qubit_count)};
    if (i % 4 == 0) b = {};
    Complex expected = statevector_amplitude(c, b);
    Complex got = amplitude(c, b);
    double dev = std::abs(got - expected) / std::max(1.0, std::abs(expected));
    worst = std::max(worst, dev);
    if (dev > 1e-9) return {false, "circuit " + std::to_string(i) + ": deviation " + std::to_string(dev)};
  }
  double elapsed = seconds_since(start);
  std::ostringstream d;
  d << "200 circuits, worst relative deviation " << worst << ", " << elapsed << " s";
  return {elapsed < 60.0, d.str()};
}

Verdict constants() {
  struct Item {
    const char* name;
    double computed;
    double printed;
    double tolerance;
  };
  const Item items[] = {
      {"density threshold", density_threshold(), PublishedFigures::density_threshold, 5e-4},
      {"variable exponent", variable_exponent(), PublishedFigures::variable_exponent, 2e-4},
      {"3SAT base d=5", three_sat_base(5), PublishedFigures::three_sat_base_d5, 5e-4},
      {"3SAT base d=4", three_sat_base(4), PublishedFigures::three_sat_base_d4, 5e-4},
      {"3SAT base d=7", three_sat_base(7), PublishedFigures::three_sat_base_d7, 5e-4},
      {"n23 fraction d=5", n23_fraction(5).get_d(), PublishedFigures::n23_fraction_d5, 1e-4},
      {"CZ circuit base", circuit_exponent(1), PublishedFigures::circuit_base_cz, 1e-3},
      {"CCZ circuit base", circuit_exponent(2), PublishedFigures::circuit_base_ccz, 1e-3},
      {"decomposed CCZ base", clause_count_base(12), PublishedFigures::circuit_base_ccz_decomposed, 1e-3},
      {"literal base", two_sat_literal_base(), PublishedFigures::two_sat_literal_base, 5e-4},
      {"average-degree threshold", avg_degree_threshold(), PublishedFigures::avg_degree_threshold, 2e-3},
  };
  bool ok = true;
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(6);
  for (const Item& it : items) {
    bool good = std::abs(it.computed - it.printed) <= it.tolerance;
    ok = ok && good;
    d << "\n    " << (good ? "ok  " : "BAD ") << it.name << ": computed " << it.computed << ", printed "
      << it.printed << ", tolerance " << it.tolerance;
  }
  return {ok, d.str()};
}

Verdict runtime_statistics() {
  Rng rng(1008);
  SolverOptions options;
  options.node_cap = 10'000'000;
  std::vector<std::uint64_t> nodes;
  std::ostringstream record;
  auto start = Clock::now();
  for (int i = 0; i < 50; ++i) {
    const Var n = static_cast<Var>(gen::uniform(rng, 28, 32));
    const std::size_t k = gen::uniform(rng, 4, 6);
    const double delta = gen::uniform_real(rng, 0.3, 1.0);
    const std::size_t m = static_cast<std::size_t>(std::lround(delta * n));
    WeightedFormula f(n);
    f.add_clause(gen::random_clause(rng, n, k));
    for (std::size_t c = 1; c < m; ++c) f.add_clause(gen::random_clause(rng, n, gen::uniform(rng, 1, k)));
    CountResult r;
    try {
      r = cdp_to2(f, options);
    } catch (const BudgetExceeded& e) {
      return {false, "instance " + std::to_string(i) + ": " + e.what()};
    }
    // Cross-check against the direct counter; n is too large for the oracle.
    RingValue direct = cdp(f, options).value;
    if (!(direct == r.value)) return {false, "instance " + std::to_string(i) + ": cdp_to2 disagrees with cdp"};
    nodes.push_back(r.stats.nodes);
    record << i << " n=" << n << " m=" << m << " k=" << k << " nodes=" << r.stats.nodes
           << " branch_nodes=" << r.stats.branch_nodes << " count=" << r.value.to_string() << "\n";
  }
  std::ofstream("acceptance_node_counts.txt") << record.str();
  std::vector<std::uint64_t> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream d;
  d << "50 instances, nodes min " << sorted.front() << " median " << sorted[sorted.size() / 2] << " max "
    << sorted.back() << ", " << seconds_since(start) << " s (per-instance counts in acceptance_node_counts.txt)";
  return {true, d.str()};
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"wmc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + "\x1f" + err.str();
}

Verdict determinism() {
  const std::string data = WMC_DATA_DIR;
  const std::string cnf = data + "/example.cnf";
  const std::string bell = data + "/bell.qc";
  const std::string phase = data + "/toffoli_phase.qc";

  Rng rng(1009);
  const std::string random_cnf = "acceptance_random.cnf";
  std::ofstream(random_cnf) << serialize_dimacs(gen::random_weighted(rng, {12, 12, 5, 1.0, 2.0}, true));

  std::vector<std::vector<std::string>> invocations;
  for (const char* algo : {"cdp", "cdp2", "cdp3to2", "weighted"})
    invocations.push_back({"count", "--algo", algo, "--stats", "--check", cnf});
  for (const char* strategy : {"max-occurrence", "shortest-clause", "max-3-degree", "first"})
    invocations.push_back({"count", "--strategy", strategy, "--format", "kv", "--stats", cnf});
  invocations.push_back({"count", "--absorb", "--stats", "--check", random_cnf});
  invocations.push_back({"count", "--no-components", random_cnf});
  invocations.push_back({"reduce", cnf});
  invocations.push_back({"stats", cnf});
  invocations.push_back({"stats", "--format", "kv", random_cnf});
  invocations.push_back({"oracle", cnf});
  invocations.push_back({"oracle", "--parity", "1,3", cnf});
  invocations.push_back({"amplitude", "--check", bell});
  invocations.push_back({"amplitude", "--in", "0+0", "--out", "+00", "--stats", "--check", phase});
  invocations.push_back({"count", "--node-cap", "1", random_cnf});

  for (const auto& args : invocations) {
    int code_a = 0, code_b = 0, code_c = 0;
    std::string a = run_cli(args, code_a);
    std::string b = run_cli(args, code_b);
    std::string c = run_cli(args, code_c);
    if (a != b || b != c || code_a != code_b || code_b != code_c) {
      std::string joined;
      for (const auto& s : args) joined += " " + s;
      return {false, "output differs for:" + joined};
    }
  }
  std::remove(random_cnf.c_str());
  return {true, std::to_string(invocations.size()) + " invocations, 3 runs each"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"oracle equivalence of cdp / cdp_to2 / cdp_3to2", oracle_equivalence},
      {"reduction identity and gadget parity", reduction_identity},
      {"signed count equals parity difference", signed_identity},
      {"worked example counts to 7", worked_example_count},
      {"degree-one absorption preserves counts", absorption},
      {"circuit amplitudes and clause accounting", circuits},
      {"printed constants within tolerance", constants},
      {"cdp_to2 node statistics under 1e7 cap", runtime_statistics},
      {"byte-identical CLI output", determinism},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!selected.empty() && !selected.count(id)) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first << " -- " << v.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
