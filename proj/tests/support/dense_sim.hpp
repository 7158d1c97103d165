#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "onethree/circuit.hpp"

namespace onethree::testing {

// Plain 2^n statevector over the circuit wires; bit w of an index is wire w.
class DenseSim {
 public:
  using C = std::complex<double>;

  explicit DenseSim(int wires) : n_(wires), amps_(std::size_t{1} << wires, C{0.0, 0.0}) { amps_[0] = 1.0; }

  const std::vector<C>& amps() const { return amps_; }

  void run(const GateList& gl) {
    if (gl.num_wires != n_) throw std::invalid_argument("DenseSim: wire count mismatch");
    for (const Gate& g : gl.gates) apply(g);
  }

  void apply(const Gate& g) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
      case GateKind::H: one(g.q0, h, h, h, -h); break;
      case GateKind::X: one(g.q0, 0.0, 1.0, 1.0, 0.0); break;
      case GateKind::RX: {
        const double c = std::cos(g.angle / 2);
        const C s{0.0, -std::sin(g.angle / 2)};
        one(g.q0, c, s, s, c);
        break;
      }
      case GateKind::RZ:
        one(g.q0, std::polar(1.0, -g.angle / 2), 0.0, 0.0, std::polar(1.0, g.angle / 2));
        break;
      case GateKind::CNOT:
        for (std::size_t i = 0; i < amps_.size(); ++i) {
          if (bit(i, g.q0) && !bit(i, g.q1)) std::swap(amps_[i], amps_[i | (std::size_t{1} << g.q1)]);
        }
        break;
      case GateKind::CPHASE:
        for (std::size_t i = 0; i < amps_.size(); ++i) {
          if (bit(i, g.q0) == (g.value0 != 0) && bit(i, g.q1) == (g.value1 != 0)) amps_[i] *= std::polar(1.0, g.angle);
        }
        break;
    }
  }

 private:
  static bool bit(std::size_t i, int w) { return (i >> w) & 1U; }

  // Row-major 2×2 matrix [[a, b], [c, d]] on wire w.
  void one(int w, C a, C b, C c, C d) {
    const std::size_t step = std::size_t{1} << w;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (i & step) continue;
      const C x0 = amps_[i];
      const C x1 = amps_[i | step];
      amps_[i] = a * x0 + b * x1;
      amps_[i | step] = c * x0 + d * x1;
    }
  }

  int n_;
  std::vector<C> amps_;
};

}  // namespace onethree::testing
