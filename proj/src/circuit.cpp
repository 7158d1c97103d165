#include "onethree/circuit.hpp"

#include <iomanip>
#include <stdexcept>

namespace onethree {

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cx";
    case GateKind::CPHASE: return "cphase";
  }
  return "?";
}

namespace {

void tally(GateCounts& c, GateKind kind) {
  switch (kind) {
    case GateKind::H: ++c.h; break;
    case GateKind::X: ++c.x; break;
    case GateKind::RX: ++c.rx; break;
    case GateKind::RZ: ++c.rz; break;
    case GateKind::CNOT: ++c.cnot; break;
    case GateKind::CPHASE: ++c.cphase; break;
  }
}

std::vector<int> column_support(const Reduction& red, int col) {
  std::vector<int> wires;
  for (int w = 0; w < red.n; ++w) {
    if (red.l.get(w, col)) wires.push_back(w);
  }
  return wires;
}

}  // namespace

GateCounts GateList::counts() const {
  GateCounts c;
  for (const Gate& g : gates) tally(c, g.kind);
  return c;
}

GateCounts GateList::layer_counts(int layer) const {
  GateCounts c;
  for (const Gate& g : gates) {
    if (g.layer == layer) tally(c, g.kind);
  }
  return c;
}

GateList export_circuit(const Instance& inst, const Reduction& red, const ResidualTwoSat& pairs,
                        const Schedule& sched, const CircuitOptions& opts) {
  if (!red.consistent) throw std::invalid_argument("export_circuit: inconsistent reduction");
  if (static_cast<int>(pairs.pairs.size()) != inst.num_clauses()) {
    throw std::invalid_argument("export_circuit: pair count does not match clause count");
  }
  GateList gl;
  gl.num_wires = red.n;
  gl.layers = sched.layers();

  std::vector<std::vector<int>> supports(red.dim());
  for (int i = 0; i < red.dim(); ++i) supports[i] = column_support(red, i);

  if (opts.include_preparation) {
    // |0…0⟩ → Σ_S |L·S⟩ by fanning each free wire out to its column, then ⊕T.
    for (int i = 0; i < red.dim(); ++i) {
      const int control = red.free_vars[i] - 1;
      gl.gates.push_back({GateKind::H, control});
      for (int w : supports[i]) {
        if (w != control) gl.gates.push_back({GateKind::CNOT, control, w});
      }
    }
    for (int w = 0; w < red.n; ++w) {
      if (red.offset[w]) gl.gates.push_back({GateKind::X, w});
    }
  }

  for (int layer = 0; layer < sched.layers(); ++layer) {
    const double beta = sched.betas[layer];
    const double gamma = sched.gammas[layer];

    // V_C(β): exp(iβ W₁W₂) per clause, W = (1 − qZ)/2.
    for (const auto& pr : pairs.pairs) {
      const int a = pr[0].var - 1;
      const int b = pr[1].var - 1;
      if (!opts.expand_phases) {
        Gate g{GateKind::CPHASE, a, b, beta};
        g.value0 = pr[0].negated ? 0 : 1;
        g.value1 = pr[1].negated ? 0 : 1;
        g.layer = layer;
        gl.gates.push_back(g);
        continue;
      }
      const double q1 = pr[0].negated ? -1.0 : 1.0;
      const double q2 = pr[1].negated ? -1.0 : 1.0;
      gl.gates.push_back({GateKind::RZ, a, -1, 0.5 * beta * q1, 1, 1, layer});
      gl.gates.push_back({GateKind::RZ, b, -1, 0.5 * beta * q2, 1, 1, layer});
      gl.gates.push_back({GateKind::CNOT, a, b, 0.0, 1, 1, layer});
      gl.gates.push_back({GateKind::RZ, b, -1, -0.5 * beta * q1 * q2, 1, 1, layer});
      gl.gates.push_back({GateKind::CNOT, a, b, 0.0, 1, 1, layer});
    }

    // V_B(γ): G_x(2γ, i) = exp(−iγ U_i), U_i = Π_{w ∈ col i} X_w, as a CNOT
    // ladder from the free wire around a single R_x.
    for (int i = 0; i < red.dim(); ++i) {
      const int control = red.free_vars[i] - 1;
      for (int w : supports[i]) {
        if (w != control) gl.gates.push_back({GateKind::CNOT, control, w, 0.0, 1, 1, layer});
      }
      gl.gates.push_back({GateKind::RX, control, -1, 2.0 * gamma, 1, 1, layer});
      for (int w : supports[i]) {
        if (w != control) gl.gates.push_back({GateKind::CNOT, control, w, 0.0, 1, 1, layer});
      }
    }
  }
  return gl;
}

void write_gate_list(std::ostream& os, const GateList& gl) {
  os << "# wires " << gl.num_wires << " layers " << gl.layers << '\n';
  int current = -2;
  os << std::setprecision(17);
  for (const Gate& g : gl.gates) {
    if (g.layer != current) {
      current = g.layer;
      if (current < 0) {
        os << "# preparation\n";
      } else {
        os << "# layer " << current + 1 << '\n';
      }
    }
    os << gate_name(g.kind) << ' ' << g.q0;
    if (g.q1 >= 0) os << ' ' << g.q1;
    if (g.kind == GateKind::RX || g.kind == GateKind::RZ || g.kind == GateKind::CPHASE) {
      os << ' ' << g.angle;
    }
    if (g.kind == GateKind::CPHASE) os << ' ' << g.value0 << g.value1;
    os << '\n';
  }
  const GateCounts c = gl.counts();
  os << "# counts h=" << c.h << " x=" << c.x << " rx=" << c.rx << " rz=" << c.rz << " cx=" << c.cnot
     << " cphase=" << c.cphase << " single=" << c.single_qubit() << " two=" << c.two_qubit() << '\n';
}

}  // namespace onethree
