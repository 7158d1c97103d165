#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onethree/qaoa.hpp"
#include "onethree/scaling.hpp"

namespace onethree {

enum class BatchSolver { Qaa, Qaoa, Vqe, Dpll, Dlx, Grover };

BatchSolver parse_batch_solver(std::string_view name);
std::string_view batch_solver_name(BatchSolver s);
bool is_quantum(BatchSolver s);

struct ExperimentConfig {
  double ratio = 0.626;
  std::vector<int> sizes;      // sorted on validation
  int per_size = 200;
  BatchSolver solver = BatchSolver::Qaa;
  int layers = 100;            // QAA/QAOA layer count N
  double c = kQaaStep;         // QAA step
  int restarts = 20;           // VQE restarts per instance
  std::optional<QaoaParams> qaoa_params;  // required for Qaoa
  std::uint64_t seed = 1;
  std::optional<int> n_min;    // truncation; defaults per solver family
  bool positive_only = true;
  int qubit_budget = kDefaultQubitBudget;

  int clauses_for(int n) const;
  // Sorts sizes and checks ranges; throws std::invalid_argument.
  void validate();
};

// Instance index within a size maps to derive_seed(derive_seed(seed, n), index).
std::uint64_t instance_seed(std::uint64_t master, int n, int index);
Instance batch_instance(const ExperimentConfig& config, int n, int index);

struct BatchRecord {
  int n = 0;
  int m = 0;
  int index = 0;
  std::uint64_t seed = 0;
  int k = 0;
  int layers = 0;
  bool sat = false;
  double success_prob = 0.0;
  double energy = 0.0;
  long conflicts = 0;
  double grover = 0.0;
  double wall_time = 0.0;
  std::string status = "ok";  // "ok", "unsat", or "error: ..."
};

// Solves one instance; failures are reported in the record status.
BatchRecord run_one(const ExperimentConfig& config, int n, int index);

// Every (n, index) pair, in parallel. With a journal path, records already in
// the journal (JSON lines) are reused and new ones are appended as they finish.
std::vector<BatchRecord> run_batch(const ExperimentConfig& config,
                                   const std::optional<std::filesystem::path>& journal = std::nullopt);

std::string record_to_json_line(const BatchRecord& r);
BatchRecord record_from_json_line(std::string_view line);

enum class Metric { SuccessProb, InverseSuccess, Energy, Conflicts, Grover, K };
std::string_view metric_name(Metric metric);

struct SizeAggregate {
  int n = 0;
  int count = 0;
  double mean = 0.0;
  double stderr_mean = 0.0;
};

// Means per size over records with status "ok". InverseSuccess is 1/mean(P)
// with the standard error propagated to first order.
std::vector<SizeAggregate> aggregate_by_size(const std::vector<BatchRecord>& records, Metric metric);

// Default truncation: quantum fits keep n >= max n − 20, classical fits drop
// the lowest 40% of sizes.
int default_n_min(const ExperimentConfig& config);

// Complexity proxy of a solver: 1/P for QAA, QAOA and VQE, conflicts for
// DPLL/DLX, the query count for Grover.
Metric complexity_metric(BatchSolver s);
ScalingFit fit_records(const std::vector<BatchRecord>& records, Metric metric, int n_min);

struct StructureRow {
  int n = 0;
  double mean_k = 0.0;
  double stderr_k = 0.0;
  double mean_g = 0.0;
  double stderr_g = 0.0;
};

struct StructureStats {
  std::vector<StructureRow> rows;
  LinearFit k_fit;
  LinearFit g_fit;
};

// Mean rank k and mean |G| per size on positive instances, with linear fits.
StructureStats structure_stats(double ratio, const std::vector<int>& sizes, int instances,
                               std::uint64_t seed);

inline constexpr int kResultsSchemaVersion = 1;

// Writes records.csv, fits.json and plotdata/*.csv into dir.
void emit_results(const std::vector<BatchRecord>& records, const ExperimentConfig& config,
                  const std::filesystem::path& dir);

}  // namespace onethree
