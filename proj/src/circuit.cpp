#include "wmc/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

namespace wmc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string resolve_boundary(const std::string& spec, Qubit n, const char* side) {
  if (spec.empty()) return std::string(n, '+');
  if (spec.size() != n || spec.find_first_not_of("+0") != std::string::npos)
    throw MalformedInstance(std::string(side) + " boundary must be " + std::to_string(n) + " characters of '+'/'0'");
  return spec;
}

}  // namespace

void Circuit::validate() const {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::string where = "gate " + std::to_string(i + 1) + ": ";
    std::size_t expected = g.kind == GateKind::CZ ? 2 : 1;
    if (g.kind == GateKind::CkZ) {
      if (g.qubits.size() < 2) throw MalformedInstance(where + "ckz needs at least 2 qubits");
    } else if (g.qubits.size() != expected) {
      throw MalformedInstance(where + "wrong number of qubits");
    }
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      if (g.qubits[a] >= qubit_count)
        throw MalformedInstance(where + "qubit " + std::to_string(g.qubits[a]) + " out of range");
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b)
        if (g.qubits[a] == g.qubits[b]) throw MalformedInstance(where + "repeated qubit");
    }
    if (g.kind == GateKind::Rz && !std::isfinite(g.angle)) throw MalformedInstance(where + "non-finite angle");
  }
}

double CircuitInstance::scalar() const { return std::exp2(0.5 * sqrt2_power); }

CircuitInstance circuit_to_weighted_2sat(const Circuit& circuit, const Boundary& boundary) {
  circuit.validate();
  const Qubit n = circuit.qubit_count;
  const std::string in = resolve_boundary(boundary.input, n, "input");
  const std::string out = resolve_boundary(boundary.output, n, "output");

  CircuitInstance result{WeightedFormula(n), 0, {}};
  WeightedFormula& f = result.formula;
  std::vector<Var> segment(n);
  for (Qubit q = 0; q < n; ++q) segment[q] = q + 1;
  // Phase angle accumulated per variable, applied once at the end.
  std::vector<double> phase(n + 1, 0.0);

  auto gadget = [&](const std::vector<Var>& touched) {
    Var y = f.add_variable(RingValue(-2));
    phase.push_back(0.0);
    for (Var s : touched) f.add_clause({Literal{s, false}, Literal{y, true}});
  };

  for (Qubit q = 0; q < n; ++q) {
    if (in[q] == '+')
      result.sqrt2_power -= 1;
    else
      f.add_clause({Literal{segment[q], true}});
  }

  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::H: {
        Qubit q = g.qubits.front();
        Var next = f.add_variable();
        phase.push_back(0.0);
        gadget({segment[q], next});
        segment[q] = next;
        result.sqrt2_power -= 1;
        break;
      }
      case GateKind::CZ:
      case GateKind::CkZ: {
        std::vector<Var> touched;
        for (Qubit q : g.qubits) touched.push_back(segment[q]);
        gadget(touched);
        break;
      }
      case GateKind::Rz:
        phase[segment[g.qubits.front()]] += g.angle;
        break;
    }
  }

  for (Qubit q = 0; q < n; ++q) {
    if (out[q] == '+')
      result.sqrt2_power -= 1;
    else
      f.add_clause({Literal{segment[q], true}});
  }
  for (Var v = 1; v < phase.size(); ++v)
    if (phase[v] != 0.0) f.set_weight(v, RingValue(std::polar(1.0, phase[v])));
  result.final_segments = segment;
  return result;
}

AmplitudeResult amplitude_detailed(const Circuit& circuit, const Boundary& boundary, const SolverOptions& options) {
  CircuitInstance instance = circuit_to_weighted_2sat(circuit, boundary);
  CountResult count = cdp_weighted(instance.formula, options);
  return {count.value.as_complex() * instance.scalar(), std::move(count)};
}

Complex amplitude(const Circuit& circuit, const Boundary& boundary, const SolverOptions& options) {
  return amplitude_detailed(circuit, boundary, options).value;
}

Complex statevector_amplitude(const Circuit& circuit, const Boundary& boundary, Qubit max_qubits) {
  circuit.validate();
  const Qubit n = circuit.qubit_count;
  if (n > max_qubits)
    throw CapExceeded("statevector oracle refuses " + std::to_string(n) + " qubits (cap " +
                      std::to_string(max_qubits) + ")");
  const std::string in = resolve_boundary(boundary.input, n, "input");
  const std::string out = resolve_boundary(boundary.output, n, "output");
  const std::size_t dim = std::size_t{1} << n;

  auto product_state = [&](const std::string& spec) {
    std::vector<Complex> psi(dim, Complex(1.0, 0.0));
    for (std::size_t b = 0; b < dim; ++b)
      for (Qubit q = 0; q < n; ++q) {
        bool bit = (b >> q) & 1U;
        psi[b] *= spec[q] == '+' ? kInvSqrt2 : (bit ? 0.0 : 1.0);
      }
    return psi;
  };

  std::vector<Complex> psi = product_state(in);
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::H: {
        const std::size_t mask = std::size_t{1} << g.qubits.front();
        for (std::size_t b = 0; b < dim; ++b) {
          if (b & mask) continue;
          Complex a0 = psi[b];
          Complex a1 = psi[b | mask];
          psi[b] = (a0 + a1) * kInvSqrt2;
          psi[b | mask] = (a0 - a1) * kInvSqrt2;
        }
        break;
      }
      case GateKind::CZ:
      case GateKind::CkZ: {
        std::size_t mask = 0;
        for (Qubit q : g.qubits) mask |= std::size_t{1} << q;
        for (std::size_t b = 0; b < dim; ++b)
          if ((b & mask) == mask) psi[b] = -psi[b];
        break;
      }
      case GateKind::Rz: {
        const std::size_t mask = std::size_t{1} << g.qubits.front();
        const Complex phase = std::polar(1.0, g.angle);
        for (std::size_t b = 0; b < dim; ++b)
          if (b & mask) psi[b] *= phase;
        break;
      }
    }
  }

  std::vector<Complex> bra = product_state(out);
  Complex result(0.0, 0.0);
  for (std::size_t b = 0; b < dim; ++b) result += std::conj(bra[b]) * psi[b];
  return result;
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  // A trailing newline does not start another line.
  while (pos < text.size() || (pos == 0 && text.empty())) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty()) continue;

    auto parse_uint = [&](std::string_view token, const char* what) {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || value > UINT32_MAX)
        throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(token) + "'");
      return static_cast<Qubit>(value);
    };

    const std::string_view op = tokens[0];
    if (op == "qubits") {
      if (circuit) throw ParseError(line_no, "duplicate 'qubits' line");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'qubits <n>'");
      circuit.emplace();
      circuit->qubit_count = parse_uint(tokens[1], "qubit count");
      continue;
    }
    if (!circuit) throw ParseError(line_no, "gate before 'qubits <n>' line");

    auto qubit = [&](std::string_view token) {
      Qubit q = parse_uint(token, "qubit index");
      if (q >= circuit->qubit_count)
        throw ParseError(line_no, "bad qubit index " + std::string(token) + " (circuit has " +
                                      std::to_string(circuit->qubit_count) + " qubits)");
      return q;
    };
    auto arity = [&](std::size_t expected) {
      if (tokens.size() != expected + 1)
        throw ParseError(line_no, "'" + std::string(op) + "' takes " + std::to_string(expected) + " argument(s)");
    };

    Gate gate;
    if (op == "h") {
      arity(1);
      gate = Gate::h(qubit(tokens[1]));
    } else if (op == "cz") {
      arity(2);
      gate = Gate::cz(qubit(tokens[1]), qubit(tokens[2]));
    } else if (op == "ckz") {
      if (tokens.size() < 3) throw ParseError(line_no, "'ckz' needs at least 2 qubits");
      std::vector<Qubit> qs;
      for (std::size_t i = 1; i < tokens.size(); ++i) qs.push_back(qubit(tokens[i]));
      gate = Gate::ckz(std::move(qs));
    } else if (op == "rz") {
      arity(2);
      double alpha = 0.0;
      std::string_view a = tokens[2];
      if (!a.empty() && a[0] == '+') a.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), alpha);
      if (ec != std::errc() || ptr != a.data() + a.size() || !std::isfinite(alpha))
        throw ParseError(line_no, "malformed angle '" + std::string(tokens[2]) + "'");
      gate = Gate::rz(qubit(tokens[1]), alpha);
    } else {
      throw ParseError(line_no, "unknown gate '" + std::string(op) + "'");
    }
    for (std::size_t a = 0; a < gate.qubits.size(); ++a)
      for (std::size_t b = a + 1; b < gate.qubits.size(); ++b)
        if (gate.qubits[a] == gate.qubits[b]) throw ParseError(line_no, "repeated qubit in gate");
    circuit->gates.push_back(std::move(gate));
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits <n>' line");
  return *circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.qubit_count << '\n';
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::H:
        out << "h";
        break;
      case GateKind::CZ:
        out << "cz";
        break;
      case GateKind::CkZ:
        out << "ckz";
        break;
      case GateKind::Rz:
        out << "rz";
        break;
    }
    for (Qubit q : g.qubits) out << ' ' << q;
    if (g.kind == GateKind::Rz) out << ' ' << shortest_double(g.angle);
    out << '\n';
  }
  return out.str();
}

}  // namespace wmc
