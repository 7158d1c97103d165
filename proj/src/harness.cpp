#include "onethree/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "onethree/baselines.hpp"
#include "onethree/random.hpp"
#include "onethree/rsra.hpp"
#include "onethree/vqe.hpp"

namespace onethree {

using nlohmann::json;

BatchSolver parse_batch_solver(std::string_view name) {
  if (name == "qaa") return BatchSolver::Qaa;
  if (name == "qaoa") return BatchSolver::Qaoa;
  if (name == "vqe") return BatchSolver::Vqe;
  if (name == "dpll") return BatchSolver::Dpll;
  if (name == "dlx") return BatchSolver::Dlx;
  if (name == "grover") return BatchSolver::Grover;
  throw std::invalid_argument("unknown solver: " + std::string(name));
}

std::string_view batch_solver_name(BatchSolver s) {
  switch (s) {
    case BatchSolver::Qaa: return "qaa";
    case BatchSolver::Qaoa: return "qaoa";
    case BatchSolver::Vqe: return "vqe";
    case BatchSolver::Dpll: return "dpll";
    case BatchSolver::Dlx: return "dlx";
    case BatchSolver::Grover: return "grover";
  }
  return "unknown";
}

bool is_quantum(BatchSolver s) {
  return s == BatchSolver::Qaa || s == BatchSolver::Qaoa || s == BatchSolver::Vqe;
}

int ExperimentConfig::clauses_for(int n) const { return static_cast<int>(std::lround(ratio * n)); }

void ExperimentConfig::validate() {
  if (sizes.empty()) throw std::invalid_argument("experiment: no sizes");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.front() < 3) throw std::invalid_argument("experiment: sizes must be >= 3");
  if (!(ratio > 0.0)) throw std::invalid_argument("experiment: ratio must be positive");
  for (int n : sizes) {
    if (clauses_for(n) < 1) throw std::invalid_argument("experiment: ratio gives no clauses");
  }
  if (per_size < 1) throw std::invalid_argument("experiment: per_size must be >= 1");
  if (layers < 1) throw std::invalid_argument("experiment: layers must be >= 1");
  if (solver == BatchSolver::Qaa && layers < 2) throw std::invalid_argument("experiment: QAA needs >= 2 layers");
  if (restarts < 1) throw std::invalid_argument("experiment: restarts must be >= 1");
  if (qubit_budget < 1) throw std::invalid_argument("experiment: budget must be >= 1");
  if (solver == BatchSolver::Dlx && !positive_only) {
    throw std::invalid_argument("experiment: dlx needs positive instances");
  }
  if (solver == BatchSolver::Qaoa) {
    if (!qaoa_params) throw std::invalid_argument("experiment: qaoa needs trained parameters");
    layers = qaoa_params->layers();
  }
}

std::uint64_t instance_seed(std::uint64_t master, int n, int index) {
  return derive_seed(derive_seed(master, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(index));
}

Instance batch_instance(const ExperimentConfig& config, int n, int index) {
  return generate_random(n, config.clauses_for(n), instance_seed(config.seed, n, index), config.positive_only);
}

namespace {

bool classical_sat(const Instance& inst) {
  if (inst.positive_only()) return dlx_solve(to_exact_cover(inst)).sat;
  return dpll_solve(to_cnf(inst)).sat;
}

void solve_into(const ExperimentConfig& config, const Instance& inst, const Reduction& red, BatchRecord& r) {
  switch (config.solver) {
    case BatchSolver::Qaa:
    case BatchSolver::Qaoa: {
      r.layers = config.layers;
      if (!red.consistent) {
        r.sat = false;
        break;
      }
      const PreparedProblem prob = prepare_problem(inst, PairPolicy::FirstTwo, config.qubit_budget);
      r.sat = std::find(prob.diag.levels.begin(), prob.diag.levels.end(), 0u) != prob.diag.levels.end();
      const Schedule sched = config.solver == BatchSolver::Qaa ? make_qaa_schedule(config.layers, config.c)
                                                               : config.qaoa_params->as_schedule();
      const RunResult run = run_layers(prob, sched);
      r.success_prob = run.success_prob;
      r.energy = run.energy;
      break;
    }
    case BatchSolver::Vqe: {
      r.sat = classical_sat(inst);
      if (!red.consistent) break;
      const ResidualTwoSat pairs = residual_two_sat(inst, PairPolicy::FirstTwo);
      int successes = 0;
      double energy_sum = 0.0;
      for (int t = 0; t < config.restarts; ++t) {
        const VqeRun run = run_vqe(inst, red, pairs, derive_seed(r.seed, static_cast<std::uint64_t>(t)));
        successes += run.success ? 1 : 0;
        energy_sum += run.final_energy();
      }
      r.success_prob = static_cast<double>(successes) / config.restarts;
      r.energy = energy_sum / config.restarts;
      break;
    }
    case BatchSolver::Dpll: {
      const ClassicalResult res = dpll_solve(to_cnf(inst));
      r.sat = res.sat;
      r.conflicts = res.conflicts;
      break;
    }
    case BatchSolver::Dlx: {
      const ClassicalResult res = dlx_solve(to_exact_cover(inst));
      r.sat = res.sat;
      r.conflicts = res.conflicts;
      break;
    }
    case BatchSolver::Grover:
      r.sat = classical_sat(inst);
      break;
  }
  if (red.consistent) r.grover = grover_estimate(red);
  if (is_quantum(config.solver) && !r.sat) r.status = "unsat";
}

}  // namespace

BatchRecord run_one(const ExperimentConfig& config, int n, int index) {
  BatchRecord r;
  r.n = n;
  r.m = config.clauses_for(n);
  r.index = index;
  r.seed = instance_seed(config.seed, n, index);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Instance inst = generate_random(n, r.m, r.seed, config.positive_only);
    const Reduction red = reduce(inst);
    r.k = red.k;
    solve_into(config, inst, red, r);
  } catch (const std::exception& e) {
    r.status = std::string("error: ") + e.what();
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string record_to_json_line(const BatchRecord& r) {
  const json j = {{"n", r.n},           {"m", r.m},
                  {"index", r.index},   {"seed", r.seed},
                  {"k", r.k},           {"layers", r.layers},
                  {"sat", r.sat},       {"success_prob", r.success_prob},
                  {"energy", r.energy}, {"conflicts", r.conflicts},
                  {"grover", r.grover}, {"wall_time", r.wall_time},
                  {"status", r.status}};
  return j.dump();
}

BatchRecord record_from_json_line(std::string_view line) {
  const json j = json::parse(line);
  BatchRecord r;
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.index = j.at("index").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.k = j.at("k").get<int>();
  r.layers = j.at("layers").get<int>();
  r.sat = j.at("sat").get<bool>();
  r.success_prob = j.at("success_prob").get<double>();
  r.energy = j.at("energy").get<double>();
  r.conflicts = j.at("conflicts").get<long>();
  r.grover = j.at("grover").get<double>();
  r.wall_time = j.at("wall_time").get<double>();
  r.status = j.at("status").get<std::string>();
  return r;
}

std::vector<BatchRecord> run_batch(const ExperimentConfig& config_in,
                                   const std::optional<std::filesystem::path>& journal) {
  ExperimentConfig config = config_in;
  config.validate();

  std::map<std::pair<int, int>, BatchRecord> done;
  if (journal && std::filesystem::exists(*journal)) {
    std::ifstream in(*journal);
    if (!in) throw std::runtime_error("cannot read journal " + journal->string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      // A torn final line from an interrupted run is recomputed.
      try {
        BatchRecord r = record_from_json_line(line);
        if (r.seed == instance_seed(config.seed, r.n, r.index)) done[{r.n, r.index}] = std::move(r);
      } catch (const json::exception&) {
      }
    }
  }
  std::ofstream out;
  if (journal) {
    out.open(*journal, std::ios::app);
    if (!out) throw std::runtime_error("cannot open journal " + journal->string());
  }

  std::vector<std::pair<int, int>> work;
  for (int n : config.sizes) {
    for (int i = 0; i < config.per_size; ++i) work.emplace_back(n, i);
  }
  std::vector<BatchRecord> records(work.size());
  const auto count = static_cast<long>(work.size());
#pragma omp parallel for schedule(dynamic)
  for (long w = 0; w < count; ++w) {
    const auto it = done.find(work[w]);
    if (it != done.end()) {
      records[w] = it->second;
      continue;
    }
    records[w] = run_one(config, work[w].first, work[w].second);
    if (journal) {
      const std::string line = record_to_json_line(records[w]);
#pragma omp critical(onethree_journal)
      {
        out << line << '\n';
        out.flush();
      }
    }
  }
  return records;
}

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::SuccessProb: return "success_prob";
    case Metric::InverseSuccess: return "inverse_success";
    case Metric::Energy: return "energy";
    case Metric::Conflicts: return "conflicts";
    case Metric::Grover: return "grover";
    case Metric::K: return "k";
  }
  return "unknown";
}

namespace {

double metric_value(const BatchRecord& r, Metric metric) {
  switch (metric) {
    case Metric::SuccessProb:
    case Metric::InverseSuccess: return r.success_prob;
    case Metric::Energy: return r.energy;
    case Metric::Conflicts: return static_cast<double>(r.conflicts);
    case Metric::Grover: return r.grover;
    case Metric::K: return r.k;
  }
  return 0.0;
}

}  // namespace

std::vector<SizeAggregate> aggregate_by_size(const std::vector<BatchRecord>& records, Metric metric) {
  std::map<int, std::vector<double>> by_n;
  for (const BatchRecord& r : records) {
    if (r.status == "ok") by_n[r.n].push_back(metric_value(r, metric));
  }
  std::vector<SizeAggregate> out;
  for (const auto& [n, values] : by_n) {
    SizeAggregate a;
    a.n = n;
    a.count = static_cast<int>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    a.mean = sum / a.count;
    if (a.count > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - a.mean) * (v - a.mean);
      a.stderr_mean = std::sqrt(ss / (a.count - 1) / a.count);
    }
    if (metric == Metric::InverseSuccess) {
      if (a.mean <= 0.0) continue;
      a.stderr_mean = a.stderr_mean / (a.mean * a.mean);
      a.mean = 1.0 / a.mean;
    }
    out.push_back(a);
  }
  return out;
}

int default_n_min(const ExperimentConfig& config) {
  if (config.n_min) return *config.n_min;
  if (config.sizes.empty()) return 0;
  std::vector<int> sizes = config.sizes;
  std::sort(sizes.begin(), sizes.end());
  if (is_quantum(config.solver)) return sizes.back() - 20;
  const auto drop = static_cast<std::size_t>(std::floor(0.4 * static_cast<double>(sizes.size())));
  return sizes[std::min(drop, sizes.size() - 1)];
}

Metric complexity_metric(BatchSolver s) {
  switch (s) {
    case BatchSolver::Qaa:
    case BatchSolver::Qaoa:
    case BatchSolver::Vqe: return Metric::InverseSuccess;
    case BatchSolver::Dpll:
    case BatchSolver::Dlx: return Metric::Conflicts;
    case BatchSolver::Grover: return Metric::Grover;
  }
  return Metric::Conflicts;
}

ScalingFit fit_records(const std::vector<BatchRecord>& records, Metric metric, int n_min) {
  std::vector<std::pair<double, double>> points;
  for (const SizeAggregate& a : aggregate_by_size(records, metric)) {
    if (a.mean > 0.0) points.emplace_back(a.n, a.mean);
  }
  return fit_scaling(points, n_min);
}

StructureStats structure_stats(double ratio, const std::vector<int>& sizes, int instances,
                               std::uint64_t seed) {
  if (instances < 1) throw std::invalid_argument("structure_stats: instances must be >= 1");
  ExperimentConfig config;
  config.ratio = ratio;
  config.seed = seed;
  StructureStats stats;
  std::vector<double> xs;
  std::vector<double> ks;
  std::vector<double> gs;
  for (int n : sizes) {
    std::vector<double> k(instances);
    std::vector<double> g(instances);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < instances; ++i) {
      const Instance inst = batch_instance(config, n, i);
      k[i] = reduce(inst).k;
      g[i] = select_g_set(inst).size();
    }
    const auto mean_se = [instances](const std::vector<double>& v) {
      double sum = 0.0;
      for (double x : v) sum += x;
      const double mean = sum / instances;
      double ss = 0.0;
      for (double x : v) ss += (x - mean) * (x - mean);
      const double se = instances > 1 ? std::sqrt(ss / (instances - 1) / instances) : 0.0;
      return std::pair{mean, se};
    };
    StructureRow row;
    row.n = n;
    std::tie(row.mean_k, row.stderr_k) = mean_se(k);
    std::tie(row.mean_g, row.stderr_g) = mean_se(g);
    stats.rows.push_back(row);
    xs.push_back(n);
    ks.push_back(row.mean_k);
    gs.push_back(row.mean_g);
  }
  stats.k_fit = linear_fit(xs, ks);
  stats.g_fit = linear_fit(xs, gs);
  return stats;
}

namespace {

json fit_to_json(const ScalingFit& f) {
  return {{"slope", f.slope},         {"base", f.base},
          {"intercept", f.intercept}, {"r_squared", f.r_squared},
          {"base_ci95", {f.base_ci_low, f.base_ci_high}},
          {"points_used", f.points_used}, {"n_min", f.n_min}};
}

void write_plot(const std::filesystem::path& path, const std::vector<SizeAggregate>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  out << "n,count,mean,stderr\n";
  for (const SizeAggregate& a : rows) out << a.n << ',' << a.count << ',' << a.mean << ',' << a.stderr_mean << '\n';
}

}  // namespace

void emit_results(const std::vector<BatchRecord>& records, const ExperimentConfig& config,
                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "plotdata");
  {
    std::ofstream csv(dir / "records.csv");
    if (!csv) throw std::runtime_error("cannot write records.csv");
    csv.precision(17);
    csv << "n,m,index,seed,k,layers,sat,success_prob,energy,conflicts,grover,wall_time,status\n";
    for (const BatchRecord& r : records) {
      csv << r.n << ',' << r.m << ',' << r.index << ',' << r.seed << ',' << r.k << ',' << r.layers << ','
          << (r.sat ? 1 : 0) << ',' << r.success_prob << ',' << r.energy << ',' << r.conflicts << ','
          << r.grover << ',' << r.wall_time << ",\"" << r.status << "\"\n";
    }
  }

  std::vector<Metric> metrics{Metric::K, Metric::Grover};
  if (is_quantum(config.solver)) {
    metrics.insert(metrics.end(), {Metric::SuccessProb, Metric::InverseSuccess, Metric::Energy});
  } else if (config.solver != BatchSolver::Grover) {
    metrics.push_back(Metric::Conflicts);
  }

  const int n_min = default_n_min(config);
  int unsat = 0;
  int errors = 0;
  for (const BatchRecord& r : records) {
    unsat += r.status == "unsat" ? 1 : 0;
    errors += r.status.rfind("error", 0) == 0 ? 1 : 0;
  }
  json aggregates = json::object();
  json fits = json::object();
  for (Metric metric : metrics) {
    const auto rows = aggregate_by_size(records, metric);
    write_plot(dir / "plotdata" / (std::string(metric_name(metric)) + ".csv"), rows);
    json arr = json::array();
    for (const SizeAggregate& a : rows) {
      arr.push_back({{"n", a.n}, {"count", a.count}, {"mean", a.mean}, {"stderr", a.stderr_mean}});
    }
    aggregates[std::string(metric_name(metric))] = arr;
    if (metric == Metric::InverseSuccess || metric == Metric::Conflicts || metric == Metric::Grover) {
      try {
        fits[std::string(metric_name(metric))] = fit_to_json(fit_records(records, metric, n_min));
      } catch (const std::invalid_argument& e) {
        fits[std::string(metric_name(metric))] = {{"error", e.what()}};
      }
    }
  }

  json sizes = config.sizes;
  const json doc = {
      {"schema_version", kResultsSchemaVersion},
      {"regression", "unweighted least squares of ln y on n"},
      {"config",
       {{"ratio", config.ratio},
        {"sizes", sizes},
        {"per_size", config.per_size},
        {"solver", std::string(batch_solver_name(config.solver))},
        {"layers", config.layers},
        {"c", config.c},
        {"restarts", config.restarts},
        {"seed", config.seed},
        {"positive_only", config.positive_only},
        {"n_min", n_min}}},
      {"records", records.size()},
      {"excluded_unsat", unsat},
      {"errors", errors},
      {"aggregates", aggregates},
      {"fits", fits}};
  std::ofstream out(dir / "fits.json");
  if (!out) throw std::runtime_error("cannot write fits.json");
  out << doc.dump(2) << '\n';
}

}  // namespace onethree
