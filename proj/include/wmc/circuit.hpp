#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wmc/engine.hpp"
#include "wmc/formula.hpp"

namespace wmc {

using Qubit = std::uint32_t;

enum class GateKind { H, CZ, CkZ, Rz };

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<Qubit> qubits;  // H, Rz: 1; CZ: 2; CkZ: k + 1 >= 2
  double angle = 0.0;         // Rz only, radians

  static Gate h(Qubit q) { return {GateKind::H, {q}, 0.0}; }
  static Gate cz(Qubit a, Qubit b) { return {GateKind::CZ, {a, b}, 0.0}; }
  static Gate ckz(std::vector<Qubit> qs) { return {GateKind::CkZ, std::move(qs), 0.0}; }
  static Gate rz(Qubit q, double alpha) { return {GateKind::Rz, {q}, alpha}; }

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  Qubit qubit_count = 0;
  std::vector<Gate> gates;

  /// Throws MalformedInstance on arity or qubit-index violations.
  void validate() const;
  bool operator==(const Circuit&) const = default;
};

/// Boundary state per qubit, `+` or `0`. Empty means all `+`.
struct Boundary {
  std::string input;
  std::string output;
};

/// Weighted 2-SAT form of <out| U |in>.
struct CircuitInstance {
  WeightedFormula formula;
  /// The amplitude is 2^{sqrt2_power / 2} times the weighted count.
  int sqrt2_power = 0;
  /// Current segment variable of each qubit at the end of the circuit.
  std::vector<Var> final_segments;

  double scalar() const;
};

/// One variable per wire segment (a Hadamard starts a new segment). Each H,
/// CZ and C^kZ adds a gadget variable y of weight -2 with clauses (s v -y)
/// for every segment s it touches, so that sum_y (-2)^y prod_s [s v -y]
/// equals (-1)^{prod s}. H contributes a factor 2^{-1/2}; Rz(a) multiplies
/// the segment's weight by e^{ia}. `+` boundaries contribute 2^{-1/2} each,
/// `0` boundaries pin the segment with a unit clause.
CircuitInstance circuit_to_weighted_2sat(const Circuit& circuit, const Boundary& boundary = {});

struct AmplitudeResult {
  Complex value;
  CountResult count;
};

AmplitudeResult amplitude_detailed(const Circuit& circuit, const Boundary& boundary = {},
                                   const SolverOptions& options = {});
Complex amplitude(const Circuit& circuit, const Boundary& boundary = {}, const SolverOptions& options = {});

/// Dense simulation over 2^n amplitudes. Refuses n > max_qubits.
Complex statevector_amplitude(const Circuit& circuit, const Boundary& boundary = {}, Qubit max_qubits = 20);

/// Line format: `qubits <n>` first, then `h q`, `cz a b`, `ckz q...`,
/// `rz q alpha`. `#` starts a comment. Errors are ParseError.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit);

}  // namespace wmc
