#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wmc/bounds.hpp"
#include "wmc/circuit.hpp"
#include "wmc/dimacs.hpp"
#include "wmc/engine.hpp"
#include "wmc/oracle.hpp"
#include "wmc/reduction.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace wmc;

namespace {

py::object to_python_int(const Integer& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_python_rational(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_python_int(q.get_num()), to_python_int(q.get_den()));
}

py::object to_python(const RingValue& v) {
  switch (v.kind()) {
    case RingKind::Integer:
      return to_python_int(v.as_integer());
    case RingKind::Rational:
      return to_python_rational(v.as_rational());
    default:
      return py::cast(v.as_complex());
  }
}

// int, Fraction and str are exact; float goes through its shortest repr.
RingValue from_python(const py::handle& obj) {
  if (py::isinstance<py::bool_>(obj)) throw py::type_error("bool is not a ring value");
  if (PyComplex_Check(obj.ptr())) return RingValue(obj.cast<Complex>());
  if (py::isinstance<py::str>(obj)) return RingValue(RingValue::parse_rational(obj.cast<std::string>()));
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator") && !py::isinstance<py::float_>(obj)) {
    std::string num = py::str(obj.attr("numerator"));
    std::string den = py::str(obj.attr("denominator"));
    return RingValue(RingValue::parse_rational(num + "/" + den));
  }
  if (py::isinstance<py::float_>(obj)) return RingValue(RingValue::parse_rational(shortest_double(obj.cast<double>())));
  throw py::type_error("expected int, Fraction, float, complex or str");
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["nodes"] = s.nodes;
  d["branch_nodes"] = s.branch_nodes;
  d["propagations"] = s.propagations;
  d["components"] = s.components;
  d["absorptions"] = s.absorptions;
  d["max_depth"] = s.max_depth;
  return d;
}

std::vector<std::vector<std::int64_t>> clause_lists(const WeightedFormula& f) {
  std::vector<std::vector<std::int64_t>> out;
  for (const Clause& c : f.clauses()) {
    std::vector<std::int64_t> lits;
    for (const Literal& l : c.literals) lits.push_back(l.to_dimacs());
    out.push_back(std::move(lits));
  }
  return out;
}

SolverOptions make_options(const std::string& strategy, bool components, bool absorb,
                           std::optional<std::uint64_t> node_cap) {
  SolverOptions o;
  auto s = parse_strategy(strategy);
  if (!s) throw py::value_error("unknown strategy '" + strategy + "'");
  o.strategy = *s;
  o.components = components;
  o.absorb = absorb;
  o.node_cap = node_cap;
  return o;
}

py::dict count_dict(const CountResult& r) {
  py::dict d;
  d["value"] = to_python(r.value);
  d["stats"] = stats_dict(r.stats);
  d["ring"] = ring_kind_name(r.ring);
  return d;
}

py::dict stats_to_dict(const InstanceStats& s) {
  py::dict d;
  d["n"] = s.variables;
  d["m"] = s.clauses;
  d["m3"] = s.long_clauses;
  d["k"] = s.max_width;
  d["L"] = s.literals;
  d["d"] = s.max_degree;
  d["delta"] = s.density ? to_python_rational(*s.density) : py::none();
  d["delta3"] = s.long_density ? to_python_rational(*s.long_density) : py::none();
  d["avg_degree"] = s.avg_degree ? to_python_rational(*s.avg_degree) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact weighted model counting: CDP counters, signed 2-SAT reduction, bounds, circuit amplitudes";

  // Translators run newest first, so the subclass is registered last.
  auto& base_error = py::register_exception<Error>(m, "WmcError");
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base_error.ptr());

  py::class_<WeightedFormula>(m, "Formula")
      .def(py::init<Var>(), py::arg("variable_count") = 0)
      .def_property_readonly("variable_count", &WeightedFormula::variable_count)
      .def_property_readonly("clauses", &clause_lists)
      .def_property_readonly("labels",
                             [](const WeightedFormula& f) {
                               py::list out;
                               for (const Clause& c : f.clauses()) out.append(to_python(c.label));
                               return out;
                             })
      .def(
          "add_clause",
          [](WeightedFormula& f, const std::vector<std::int64_t>& lits, const py::object& label) {
            std::vector<Literal> literals;
            for (auto v : lits) literals.push_back(Literal::from_dimacs(v));
            f.add_clause(std::move(literals), from_python(label));
          },
          py::arg("literals"), py::arg("label") = 0)
      .def("add_variable", [](WeightedFormula& f, const py::object& w) { return f.add_variable(from_python(w)); },
           py::arg("weight") = 1)
      .def("weight", [](const WeightedFormula& f, Var v) { return to_python(f.weight(v)); })
      .def("set_weight", [](WeightedFormula& f, Var v, const py::object& w) { f.set_weight(v, from_python(w)); })
      .def("is_plain", &WeightedFormula::is_plain)
      .def("__eq__", [](const WeightedFormula& a, const WeightedFormula& b) { return a == b; })
      .def("__repr__", [](const WeightedFormula& f) {
        return "<Formula n=" + std::to_string(f.variable_count()) + " m=" + std::to_string(f.clause_count()) + ">";
      });

  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
  m.def("serialize_dimacs", &serialize_dimacs);
  m.def("normalize", &normalize);
  m.def("evaluate", [](const WeightedFormula& f, const std::vector<bool>& values) {
    if (values.size() != f.variable_count()) throw py::value_error("need one value per variable");
    Assignment a(f.variable_count());
    for (Var v = 1; v <= f.variable_count(); ++v) a.set(v, values[v - 1]);
    return to_python(evaluate(f, a));
  });

  m.def(
      "count",
      [](const WeightedFormula& f, const std::string& algo, const std::string& strategy, bool components, bool absorb,
         std::optional<std::uint64_t> node_cap) {
        SolverOptions o = make_options(strategy, components, absorb, node_cap);
        if (algo == "cdp") return count_dict(cdp(f, o));
        if (algo == "cdp2") return count_dict(cdp_to2(f, o));
        if (algo == "cdp3to2") return count_dict(cdp_3to2(f, o));
        if (algo == "weighted") return count_dict(cdp_weighted(f, o));
        throw py::value_error("unknown algorithm '" + algo + "'");
      },
      py::arg("formula"), py::arg("algo") = "weighted", py::arg("strategy") = "shortest-clause",
      py::arg("components") = true, py::arg("absorb") = false, py::arg("node_cap") = py::none(),
      "Exact (weighted) model count. Returns {'value', 'stats', 'ring'}.");

  m.def(
      "brute_force_count",
      [](const WeightedFormula& f, Var cap) { return to_python(brute_force_count(f, OracleOptions{cap})); },
      py::arg("formula"), py::arg("cap") = 25);
  m.def(
      "brute_force_parity_count",
      [](const WeightedFormula& f, const std::vector<Var>& negative, Var cap) {
        return to_python_int(brute_force_parity_count(f, negative, OracleOptions{cap}));
      },
      py::arg("formula"), py::arg("negative_set"), py::arg("cap") = 25);

  m.def("reduce_to_2sat_pm", [](const WeightedFormula& f) {
    ReducedInstance r = reduce_to_2sat_pm(f);
    py::dict fresh;
    for (const auto& [clause, var] : r.map.fresh_variables) fresh[py::int_(clause)] = var;
    return py::make_tuple(r.formula, fresh);
  });

  m.def("instance_stats", [](const WeightedFormula& f) { return stats_to_dict(instance_stats(f)); });
  m.def("bound_report", [](const WeightedFormula& f) {
    InstanceStats s = instance_stats(f);
    BoundReport r = bound_report(s);
    py::dict d;
    d["gadget_bound_exponent"] = r.gadget_bound_exponent;
    d["literal_bound_exponent"] = r.literal_bound_exponent;
    d["beats_brute_force"] = r.beats_brute_force;
    d["improves_worst_case"] = r.density.improves_worst_case;
    d["improves_average_case"] = r.density.improves_average_case;
    d["three_sat_exponent"] = r.three_sat_exponent;
    ReducedSize size = predict_reduced_size(s);
    d["reduced_variables"] = size.variables;
    d["reduced_clauses"] = size.clauses;
    return d;
  });
  m.def("n23_fraction", [](std::uint64_t d) { return to_python_rational(n23_fraction(d)); });
  m.def("three_sat_base", &three_sat_base);
  m.def("circuit_exponent", &circuit_exponent);
  m.def("density_threshold", &density_threshold);
  m.def("avg_degree_threshold", &avg_degree_threshold);

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("qubit_count", &Circuit::qubit_count)
      .def_property_readonly("gate_count", [](const Circuit& c) { return c.gates.size(); })
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit qubits=" + std::to_string(c.qubit_count) + " gates=" + std::to_string(c.gates.size()) + ">";
      });
  m.def("parse_circuit", [](const std::string& text) { return parse_circuit(text); });
  m.def("serialize_circuit", &serialize_circuit);
  m.def(
      "circuit_to_weighted_2sat",
      [](const Circuit& c, const std::string& in, const std::string& out) {
        CircuitInstance inst = circuit_to_weighted_2sat(c, Boundary{in, out});
        return py::make_tuple(inst.formula, inst.scalar());
      },
      py::arg("circuit"), py::arg("input") = "", py::arg("output") = "");
  m.def(
      "amplitude",
      [](const Circuit& c, const std::string& in, const std::string& out, const std::string& strategy, bool absorb,
         std::optional<std::uint64_t> node_cap) {
        return amplitude(c, Boundary{in, out}, make_options(strategy, true, absorb, node_cap));
      },
      py::arg("circuit"), py::arg("input") = "", py::arg("output") = "", py::arg("strategy") = "shortest-clause",
      py::arg("absorb") = false, py::arg("node_cap") = py::none());
  m.def(
      "statevector_amplitude",
      [](const Circuit& c, const std::string& in, const std::string& out) {
        return statevector_amplitude(c, Boundary{in, out});
      },
      py::arg("circuit"), py::arg("input") = "", py::arg("output") = "");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
