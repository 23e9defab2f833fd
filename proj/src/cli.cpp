#include "wmc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wmc/bounds.hpp"
#include "wmc/circuit.hpp"
#include "wmc/dimacs.hpp"
#include "wmc/engine.hpp"
#include "wmc/oracle.hpp"
#include "wmc/reduction.hpp"

namespace wmc::cli {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// 1.2e-16, 0.0e0: one decimal, exponent without padding.
std::string short_exp(double x) {
  if (x == 0.0) return "0.0e0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  std::string s = buf;
  auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  int exponent = std::stoi(s.substr(e + 1));
  return mantissa + "e" + std::to_string(exponent);
}

struct Block {
  std::vector<std::pair<std::string, std::string>> rows;
  void add(std::string key, std::string value) { rows.emplace_back(std::move(key), std::move(value)); }
};

void print_block(const Block& block, OutputFormat format, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : block.rows) width = std::max(width, k.size());
  for (const auto& [k, v] : block.rows) {
    if (format == OutputFormat::KeyValue)
      out << k << '=' << v << '\n';
    else
      out << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
  }
}

Block stats_block(const SearchStats& s) {
  Block b;
  b.add("branch_nodes", std::to_string(s.branch_nodes));
  b.add("propagations", std::to_string(s.propagations));
  b.add("components", std::to_string(s.components));
  b.add("max_depth", std::to_string(s.max_depth));
  b.add("nodes", std::to_string(s.nodes));
  b.add("absorptions", std::to_string(s.absorptions));
  return b;
}

CountResult count_with(const std::string& algorithm, const WeightedFormula& f, const SolverOptions& options) {
  if (algorithm == "cdp") return cdp(f, options);
  if (algorithm == "cdp2") return cdp_to2(f, options);
  if (algorithm == "cdp3to2") return cdp_3to2(f, options);
  return cdp_weighted(f, options);
}

int run_count(const RunConfig& config, std::ostream& out) {
  const WeightedFormula formula = parse_dimacs(read_input(config.input));
  const CountResult result = count_with(config.algorithm, formula, config.solver);
  if (config.format == OutputFormat::KeyValue)
    out << "count=" << result.value.to_string() << '\n';
  else
    out << result.value.to_string() << '\n';
  if (config.show_stats) print_block(stats_block(result.stats), config.format, out);

  if (!config.check) return 0;
  if (formula.variable_count() > config.oracle_cap) {
    out << "check: skipped (n = " << formula.variable_count() << " over cap " << config.oracle_cap << ")\n";
    return 0;
  }
  const RingValue expected = brute_force_count(formula, OracleOptions{config.oracle_cap});
  if (approx_equal(result.value, expected)) {
    out << "check: ok\n";
    return 0;
  }
  out << "check: MISMATCH (oracle " << expected.to_string() << ")\n";
  return static_cast<int>(ExitCode::CheckFailed);
}

int run_reduce(const RunConfig& config, std::ostream& out) {
  const WeightedFormula formula = parse_dimacs(read_input(config.input));
  const ReducedInstance reduced = reduce_to_2sat_pm(formula);
  out << format_reduction_map(reduced.map) << serialize_dimacs(reduced.formula);
  return 0;
}

std::string optional_fixed(const std::optional<double>& x) { return x ? fixed(*x) : "undefined"; }
std::string optional_decimal(const std::optional<Rational>& q) { return q ? decimal(*q) : "undefined"; }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_stats(const RunConfig& config, std::ostream& out) {
  const WeightedFormula formula = parse_dimacs(read_input(config.input));
  const InstanceStats s = instance_stats(formula);
  const BoundReport r = bound_report(s);
  const ReducedSize reduced = predict_reduced_size(s);

  Block kv;
  kv.add("n", std::to_string(s.variables));
  kv.add("m", std::to_string(s.clauses));
  kv.add("m3", std::to_string(s.long_clauses));
  kv.add("k", std::to_string(s.max_width));
  kv.add("L", std::to_string(s.literals));
  kv.add("d", std::to_string(s.max_degree));
  kv.add("delta", optional_decimal(s.density));
  kv.add("delta3", optional_decimal(s.long_density));
  kv.add("avg_degree", optional_decimal(s.avg_degree));
  kv.add("reduced_variables", std::to_string(reduced.variables));
  kv.add("reduced_clauses", std::to_string(reduced.clauses));
  kv.add("gadget_bound_exponent", optional_fixed(r.gadget_bound_exponent));
  kv.add("beats_brute_force", yes_no(r.beats_brute_force));
  kv.add("literal_exponent", optional_fixed(r.literal_bound_exponent));
  kv.add("literal_beats_brute_force", yes_no(r.literal_bound_beats_brute_force));
  kv.add("density_table_k", r.density.row ? std::to_string(r.density.row->k) : "none");
  kv.add("density_table_worst_case", yes_no(r.density.improves_worst_case));
  kv.add("density_table_average_case", yes_no(r.density.improves_average_case));
  if (r.three_sat_exponent) {
    kv.add("three_degree", std::to_string(*r.three_degree));
    kv.add("three_sat_exponent", fixed(*r.three_sat_exponent));
    kv.add("three_sat_base", fixed(std::exp2(*r.three_sat_exponent), 4));
  }
  kv.add("density_threshold", fixed(density_threshold(), 4));
  kv.add("avg_degree_threshold", fixed(avg_degree_threshold(), 4));
  kv.add("avg_degree_threshold_published", fixed(PublishedFigures::avg_degree_threshold, 4));

  if (config.format == OutputFormat::Text) {
    out << "instance\n";
    out << "  variables (n)          " << s.variables << '\n';
    out << "  clauses (m)            " << s.clauses << '\n';
    out << "  clauses of width >= 3  " << s.long_clauses << '\n';
    out << "  max width (k)          " << s.max_width << '\n';
    out << "  literals (L)           " << s.literals << '\n';
    out << "  max degree (d)         " << s.max_degree << '\n';
    out << "  density                " << optional_decimal(s.density) << '\n';
    out << "  width-3+ density       " << optional_decimal(s.long_density) << '\n';
    out << "  average degree         " << optional_decimal(s.avg_degree) << '\n';
    out << "signed 2-SAT form\n";
    out << "  variables              " << reduced.variables << '\n';
    out << "  clauses                " << reduced.clauses << " (bound L = " << reduced.clause_bound << ")\n";
    out << "bounds (base-2 exponent per variable)\n";
    out << "  1.2377^(n+m3)          " << optional_fixed(r.gadget_bound_exponent)
        << (r.beats_brute_force ? "  < 1, beats 2^n" : "") << '\n';
    out << "  1.1740^L               " << optional_fixed(r.literal_bound_exponent)
        << (r.literal_bound_beats_brute_force ? "  < 1, beats 2^n" : "") << '\n';
    if (r.three_sat_exponent)
      out << "  #3SAT strategy (d=" << *r.three_degree << ")   " << fixed(*r.three_sat_exponent) << '\n';
    out << "density table\n";
    if (r.density.row) {
      out << "  improves worst case    " << yes_no(r.density.improves_worst_case) << '\n';
      out << "  improves average case  " << yes_no(r.density.improves_average_case) << '\n';
    }
    if (!r.density.note.empty()) out << "  note                   " << r.density.note << '\n';
    out << '\n';
  }
  print_block(kv, OutputFormat::KeyValue, out);
  return 0;
}

int run_oracle(const RunConfig& config, std::ostream& out) {
  const WeightedFormula formula = parse_dimacs(read_input(config.input));
  const OracleOptions options{config.oracle_cap};
  if (!config.parity_set.empty())
    out << Integer(brute_force_parity_count(formula, config.parity_set, options)).get_str() << '\n';
  else
    out << brute_force_count(formula, options).to_string() << '\n';
  return 0;
}

int run_amplitude(const RunConfig& config, std::ostream& out) {
  const Circuit circuit = parse_circuit(read_input(config.input));
  const Boundary boundary{config.boundary_in, config.boundary_out};
  const AmplitudeResult result = amplitude_detailed(circuit, boundary, config.solver);
  out << format_complex(result.value) << '\n';
  if (config.show_stats) print_block(stats_block(result.count.stats), config.format, out);
  if (!config.check) return 0;

  constexpr Qubit kStatevectorCap = 20;
  if (circuit.qubit_count > kStatevectorCap) {
    out << "check: skipped (" << circuit.qubit_count << " qubits over cap " << kStatevectorCap << ")\n";
    return 0;
  }
  const Complex expected = statevector_amplitude(circuit, boundary, kStatevectorCap);
  const double dev = std::abs(result.value - expected);
  if (dev <= kComplexTolerance * std::max(1.0, std::abs(expected))) {
    out << "check: ok (dev " << short_exp(dev) << ")\n";
    return 0;
  }
  out << "check: MISMATCH (statevector " << format_complex(expected) << ", dev " << short_exp(dev) << ")\n";
  return static_cast<int>(ExitCode::CheckFailed);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "count") return run_count(config, out);
    if (config.subcommand == "reduce") return run_reduce(config, out);
    if (config.subcommand == "stats") return run_stats(config, out);
    if (config.subcommand == "oracle") return run_oracle(config, out);
    if (config.subcommand == "amplitude") return run_amplitude(config, out);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return static_cast<int>(ExitCode::InputError);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Budget);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::InputError);
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weighted model counting: CDP-family counters, the signed 2-SAT reduction, "
               "runtime-bound calculators and circuit amplitudes."};
  app.name("wmc");
  app.require_subcommand(1);

  RunConfig config;
  std::string strategy = strategy_name(config.solver.strategy);
  std::string format = "text";
  bool no_components = false;
  std::uint64_t node_cap = 0;

  const std::vector<std::string> strategies = {"max-occurrence", "shortest-clause", "max-3-degree", "first"};
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", config.input, std::string(what) + " file, '-' for stdin")->capture_default_str();
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--strategy", strategy, "Branching heuristic")
        ->check(CLI::IsMember(strategies))
        ->capture_default_str();
    sub->add_flag("--no-components", no_components, "Disable connected-component splitting");
    sub->add_flag("--absorb", config.solver.absorb, "Eliminate degree-one variables (weighted rule)");
    sub->add_option("--node-cap", node_cap, "Abort with exit code 2 after this many search nodes")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--stats", config.show_stats, "Print search statistics");
    sub->add_option("--format", format, "Output style")
        ->check(CLI::IsMember({"text", "kv"}))
        ->capture_default_str();
  };

  auto* count = app.add_subcommand("count", "Count models of a (weighted) DIMACS formula");
  add_input(count, "DIMACS");
  count->add_option("--algo", config.algorithm, "cdp | cdp2 (reduce to signed 2-SAT) | cdp3to2 | weighted")
      ->check(CLI::IsMember({"cdp", "cdp2", "cdp3to2", "weighted"}))
      ->capture_default_str();
  add_solver(count);
  count->add_flag("--check", config.check, "Cross-check against brute force; exit 3 on mismatch");
  count->add_option("--cap", config.oracle_cap, "Variable cap for --check")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Emit the signed 2-SAT form of a plain formula");
  add_input(reduce, "DIMACS");

  auto* stats = app.add_subcommand("stats", "Instance parameters and runtime-bound report");
  add_input(stats, "DIMACS");
  stats->add_option("--format", format, "text (aligned + key=value) or kv")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Brute-force weighted count over all assignments");
  add_input(oracle, "DIMACS");
  oracle->add_option("--cap", config.oracle_cap, "Refuse formulas with more variables")->capture_default_str();
  oracle->add_option("--parity", config.parity_set, "Signed count with this negative variable set (plain input)")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->type_name("V1,V2,...");

  auto* amp = app.add_subcommand("amplitude", "Amplitude <out|U|in> of an H/CZ/CkZ/Rz circuit");
  add_input(amp, "Circuit");
  add_solver(amp);
  amp->add_flag("--check,--oracle", config.check, "Compare with statevector simulation; exit 3 on mismatch");
  amp->add_option("--in", config.boundary_in, "Input state per qubit, e.g. ++0 (default all +)");
  amp->add_option("--out", config.boundary_out, "Output state per qubit (default all +)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::InputError);
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.solver.strategy = *parse_strategy(strategy);
  config.solver.components = !no_components;
  if (node_cap > 0) config.solver.node_cap = node_cap;
  config.format = format == "kv" ? OutputFormat::KeyValue : OutputFormat::Text;
  return run(config, out, err);
}

}  // namespace wmc::cli
