#include "onethree/resources.hpp"

#include <stdexcept>
#include <string>

namespace onethree {

SolverKind parse_solver_kind(std::string_view name) {
  if (name == "vqe") return SolverKind::Vqe;
  if (name == "qaa_qaoa") return SolverKind::QaaQaoa;
  if (name == "original_vqe") return SolverKind::OriginalVqe;
  if (name == "original_qaa_qaoa") return SolverKind::OriginalQaaQaoa;
  throw std::invalid_argument("unknown solver kind: " + std::string(name));
}

std::string_view solver_kind_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Vqe: return "vqe";
    case SolverKind::QaaQaoa: return "qaa_qaoa";
    case SolverKind::OriginalVqe: return "original_vqe";
    case SolverKind::OriginalQaaQaoa: return "original_qaa_qaoa";
  }
  throw std::invalid_argument("unknown solver kind");
}

ResourceCounts resource_estimate(int n, int k, int m, int g_size, int layers, SolverKind kind) {
  if (n < 0 || k < 0 || k > n || m < 0 || g_size < 0 || layers < 0) {
    throw std::invalid_argument("resource_estimate: arguments out of range");
  }
  const std::int64_t nn = n;
  const std::int64_t d = n - k;
  const std::int64_t mm = m;
  const std::int64_t big_n = layers;
  ResourceCounts r;
  switch (kind) {
    case SolverKind::Vqe:
      r.qubits = g_size;
      r.single_qubit_gates = d;
      r.two_qubit_gates = 2 * d * (nn - 1);
      r.total_order = "O(n(n-k))";
      r.log2_search_dimension = n - k;
      break;
    case SolverKind::QaaQaoa:
      r.qubits = g_size;
      r.single_qubit_gates = big_n * d;
      r.two_qubit_gates = big_n * (2 * d * (nn - 1) + mm);
      r.total_order = "O(Nn(n-k))";
      r.log2_search_dimension = n - k;
      break;
    case SolverKind::OriginalVqe:
      r.qubits = n;
      r.total_order = "poly(n)";
      r.log2_search_dimension = n;
      break;
    case SolverKind::OriginalQaaQaoa:
      r.qubits = n;
      r.single_qubit_gates = big_n * (nn + 3 * mm);
      r.two_qubit_gates = 3 * big_n * mm;
      r.total_order = "O(Nn)";
      r.log2_search_dimension = n;
      break;
  }
  return r;
}

}  // namespace onethree
