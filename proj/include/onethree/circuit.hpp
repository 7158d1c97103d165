#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "onethree/instance.hpp"
#include "onethree/rsra.hpp"
#include "onethree/schedule.hpp"

namespace onethree {

enum class GateKind { H, X, RX, RZ, CNOT, CPHASE };

std::string gate_name(GateKind kind);

// Wires are the n problem variables, 0-based (wire w carries x_{w+1}).
// RX/RZ follow R(θ) = exp(−iθP/2). CPHASE multiplies the basis states with
// wire q0 == value0 and wire q1 == value1 by exp(iθ).
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;
  int value0 = 1;
  int value1 = 1;
  int layer = -1;  // -1 for state preparation, otherwise 0-based layer index
};

struct GateCounts {
  long h = 0;
  long x = 0;
  long rx = 0;
  long rz = 0;
  long cnot = 0;
  long cphase = 0;

  long single_qubit() const { return h + x + rx + rz; }
  long two_qubit() const { return cnot + cphase; }
};

struct GateList {
  int num_wires = 0;
  int layers = 0;
  std::vector<Gate> gates;

  GateCounts counts() const;
  GateCounts layer_counts(int layer) const;
  GateCounts preparation_counts() const { return layer_counts(-1); }
};

struct CircuitOptions {
  // Expand each clause phase into Z rotations and a CNOT-conjugated Z
  // rotation. When false, each clause is one diagonal two-qubit phase.
  bool expand_phases = true;
  bool include_preparation = true;
};

GateList export_circuit(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
                        const Schedule& sched, const CircuitOptions& opts = {});

void write_gate_list(std::ostream& os, const GateList& gl);

}  // namespace onethree
