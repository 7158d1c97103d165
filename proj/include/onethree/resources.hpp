#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace onethree {

enum class SolverKind { Vqe, QaaQaoa, OriginalVqe, OriginalQaaQaoa };

// Accepts "vqe", "qaa_qaoa", "original_vqe", "original_qaa_qaoa".
SolverKind parse_solver_kind(std::string_view name);
std::string_view solver_kind_name(SolverKind kind);

struct ResourceCounts {
  std::int64_t qubits = 0;
  // Unset for the original VQE, whose ansatz size is only known to be poly(n).
  std::optional<std::int64_t> single_qubit_gates;
  std::optional<std::int64_t> two_qubit_gates;
  std::string total_order;
  int log2_search_dimension = 0;  // search dimension is 2^this
};

// Per-run qubit and gate counts for the enhanced (reduced) and original
// solvers. Enhanced solvers run on |G| qubits over a 2^{n−k} space.
ResourceCounts resource_estimate(int n, int k, int m, int g_size, int layers, SolverKind kind);

}  // namespace onethree
