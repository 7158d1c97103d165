#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "onethree/baselines.hpp"
#include "onethree/circuit.hpp"
#include "onethree/harness.hpp"
#include "onethree/qaoa.hpp"
#include "onethree/random.hpp"
#include "onethree/resources.hpp"
#include "onethree/rsra.hpp"
#include "onethree/simulator.hpp"
#include "onethree/vqe.hpp"

#ifndef ONETHREE_VERSION
#define ONETHREE_VERSION "0.0.0"
#endif

namespace onethree::cli {

namespace {

using nlohmann::json;

struct GlobalConfig {
  std::uint64_t seed = 1;
  int threads = 0;  // 0: ONETHREE_THREADS or the OpenMP default
  std::string out_dir = ".";
  int verbosity = 0;
  int budget = kDefaultQubitBudget;
};

std::string version_string() {
  std::ostringstream os;
  os << "onethree " << ONETHREE_VERSION << " (" << __DATE__ << ' ' << __TIME__ << ", gcc " << __VERSION__
     << ", OpenMP " << _OPENMP << ')';
  return os.str();
}

void apply_threads(const GlobalConfig& g) {
  int threads = g.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("ONETHREE_THREADS")) threads = std::atoi(env);
  }
  if (threads > 0) omp_set_num_threads(threads);
}

std::string bits(const std::vector<std::uint8_t>& v) {
  std::string s;
  s.reserve(v.size());
  for (auto b : v) s.push_back(b ? '1' : '0');
  return s;
}

PairPolicy parse_policy(const std::string& name) {
  if (name == "first-two") return PairPolicy::FirstTwo;
  if (name == "g-aligned") return PairPolicy::GAligned;
  throw std::invalid_argument("unknown pair policy: " + name);
}

ResidualTwoSat pairs_for(const Instance& inst, PairPolicy policy) {
  if (policy == PairPolicy::GAligned) {
    const GSet g = select_g_set(inst);
    return residual_two_sat(inst, policy, &g);
  }
  return residual_two_sat(inst, policy);
}

json params_to_json(const QaoaParams& p) { return {{"layers", p.layers()}, {"betas", p.betas}, {"gammas", p.gammas}}; }

QaoaParams read_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  const json j = json::parse(in);
  QaoaParams p;
  p.betas = j.at("betas").get<std::vector<double>>();
  p.gammas = j.at("gammas").get<std::vector<double>>();
  if (p.betas.size() != p.gammas.size() || p.betas.empty()) {
    throw std::runtime_error("parameter file needs equal-length nonempty betas and gammas");
  }
  return p;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::vector<std::string> models_to_strings(const std::vector<Assignment>& samples) {
  std::vector<std::string> out;
  out.reserve(samples.size());
  for (const auto& a : samples) out.push_back(bits(a));
  return out;
}

// Satisfiable instances n, round(ratio·n) drawn from seed, in draw order.
std::vector<PreparedProblem> satisfiable_ensemble(int n, double ratio, int count, std::uint64_t seed,
                                                  int budget) {
  std::vector<PreparedProblem> out;
  const int m = static_cast<int>(std::lround(ratio * n));
  for (std::uint64_t draw = 0; static_cast<int>(out.size()) < count; ++draw) {
    if (draw > 1000ULL * static_cast<std::uint64_t>(count) + 1000) {
      throw std::runtime_error("could not draw enough satisfiable instances");
    }
    Instance inst = generate_random(n, m, derive_seed(seed, draw));
    if (!dlx_solve(to_exact_cover(inst)).sat) continue;
    out.push_back(prepare_problem(inst, PairPolicy::FirstTwo, budget));
  }
  return out;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      sizes.push_back(std::stoi(part));
      continue;
    }
    std::string hi = part.substr(dots + 2);
    int step = 1;
    if (const auto colon = hi.find(':'); colon != std::string::npos) {
      step = std::stoi(hi.substr(colon + 1));
      hi = hi.substr(0, colon);
    }
    if (step < 1) throw std::invalid_argument("size step must be positive");
    for (int n = std::stoi(part.substr(0, dots)); n <= std::stoi(hi); n += step) sizes.push_back(n);
  }
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  return sizes;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-in-three SAT solvers on the reduced solution space", "onethree"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  GlobalConfig g;
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--threads", g.threads, "Worker threads (default: ONETHREE_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out-dir", g.out_dir, "Output directory for file outputs");
  app.add_flag("-v,--verbose", g.verbosity, "Diagnostics on stderr");
  app.add_option("--budget", g.budget, "Maximum simulated qubits")->check(CLI::Range(1, 62));

  std::function<void()> action;
  const auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // gen
  int gen_n = 0;
  int gen_m = 0;
  bool gen_mixed = false;
  std::string gen_out;
  CLI::App* gen = sub("gen", "Generate a random instance");
  gen->add_option("-n", gen_n, "Variables")->required()->check(CLI::Range(3, 1 << 20));
  gen->add_option("-m", gen_m, "Clauses")->required()->check(CLI::Range(1, 1 << 22));
  gen->add_flag("--mixed", gen_mixed, "Allow negated literals");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
  gen->callback([&] {
    action = [&] {
      const Instance inst = generate_random(gen_n, gen_m, g.seed, !gen_mixed);
      write_text(gen_out, serialize_instance(inst), out);
    };
  });

  // reduce
  std::string instance_path;
  std::string policy_name = "first-two";
  CLI::App* red_cmd = sub("reduce", "Reduce an instance to its loosened-solution space");
  red_cmd->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  red_cmd->add_option("--policy", policy_name, "Residual pair policy")
      ->check(CLI::IsMember({"first-two", "g-aligned"}));
  red_cmd->callback([&] {
    action = [&] {
      const Instance inst = read_instance_file(instance_path);
      const Reduction red = reduce(inst);
      out << "n " << red.n << "\nm " << inst.num_clauses() << "\nk " << red.k << "\nconsistent "
          << (red.consistent ? 1 : 0) << '\n';
      if (!red.consistent) return;
      out << "free_vars";
      for (int v : red.free_vars) out << ' ' << v;
      out << "\nT " << bits(red.offset) << "\nL " << red.n << ' ' << red.dim() << '\n';
      for (int v = 0; v < red.n; ++v) {
        std::string row;
        for (int c = 0; c < red.dim(); ++c) row.push_back(red.l.get(v, c) ? '1' : '0');
        out << row << '\n';
      }
      const auto pairs = pairs_for(inst, parse_policy(policy_name)).pairs;
      out << "pairs " << pairs.size() << '\n';
      for (const auto& p : pairs) out << p[0].signed_value() << ' ' << p[1].signed_value() << '\n';
      out << "g_set";
      for (int v : select_g_set(inst).vars) out << ' ' << v;
      out << '\n';
    };
  });

  // qaa
  int qaa_layers = 100;
  double qaa_c = kQaaStep;
  int qaa_shots = 0;
  CLI::App* qaa = sub("qaa", "Run the annealing-schedule layered evolution");
  qaa->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  qaa->add_option("--layers", qaa_layers, "Layer count N")->check(CLI::Range(2, 1 << 20));
  qaa->add_option("--c", qaa_c, "Step constant");
  qaa->add_option("--shots", qaa_shots, "Measurement samples")->check(CLI::NonNegativeNumber);
  qaa->callback([&] {
    action = [&] {
      const Instance inst = read_instance_file(instance_path);
      const PreparedProblem prob = prepare_problem(inst, PairPolicy::FirstTwo, g.budget);
      const Schedule sched = make_qaa_schedule(qaa_layers, qaa_c);
      const auto start = std::chrono::steady_clock::now();
      const StateVector state = evolve(prob, sched.betas, sched.gammas);
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      json j = {{"n", inst.num_vars()},         {"m", inst.num_clauses()},
                {"k", prob.reduction.k},        {"layers", qaa_layers},
                {"c", qaa_c},                   {"energy", energy(state, prob.diag)},
                {"success_prob", success_probability(state, prob.diag)},
                {"wall_time", wall}};
      if (qaa_shots > 0) j["samples"] = models_to_strings(sample(state, prob.reduction, qaa_shots, g.seed));
      out << j.dump(2) << '\n';
    };
  });

  // qaoa-train
  std::vector<std::string> train_files;
  int train_n = 30;
  int train_count = 50;
  double train_ratio = 0.626;
  int qaoa_layers = 4;
  int bfgs_iters = 100;
  std::string warm_path;
  std::string params_out;
  CLI::App* qtrain = sub("qaoa-train", "Train shared layer angles on a set of instances");
  qtrain->add_option("instances", train_files, "Instance files (default: draw a satisfiable set)")
      ->check(CLI::ExistingFile);
  qtrain->add_option("-n", train_n, "Variables for drawn instances")->check(CLI::Range(3, 62));
  qtrain->add_option("--count", train_count, "Drawn instance count")->check(CLI::PositiveNumber);
  qtrain->add_option("--ratio", train_ratio, "Clause ratio for drawn instances");
  qtrain->add_option("--layers", qaoa_layers, "Layer count N")->check(CLI::Range(1, 1 << 12));
  qtrain->add_option("--max-iter", bfgs_iters, "Quasi-Newton iterations")->check(CLI::PositiveNumber);
  qtrain->add_option("--warm-start", warm_path, "Angles of a shallower run, tried as a second start")
      ->check(CLI::ExistingFile);
  qtrain->add_option("-o,--output", params_out, "Parameter file (default stdout)");
  qtrain->callback([&] {
    action = [&] {
      std::vector<PreparedProblem> training;
      if (train_files.empty()) {
        training = satisfiable_ensemble(train_n, train_ratio, train_count, g.seed, g.budget);
      } else {
        for (const auto& f : train_files) training.push_back(prepare_problem(read_instance_file(f), PairPolicy::FirstTwo, g.budget));
      }
      QaoaTrainConfig cfg;
      cfg.bfgs.max_iterations = bfgs_iters;
      if (!warm_path.empty()) cfg.warm_start = read_params(warm_path);
      const TrainReport rep = train_shared_qaoa(training, qaoa_layers, cfg);
      json j = params_to_json(rep.params);
      j["initial_mean_energy"] = rep.initial_mean_energy;
      j["final_mean_energy"] = rep.final_mean_energy;
      j["iterations"] = rep.iterations;
      j["status"] = status_name(rep.status);
      j["from_warm_start"] = rep.from_warm_start;
      j["training_instances"] = training.size();
      write_text(params_out, j.dump(2) + "\n", out);
    };
  });

  // qaoa-eval
  std::vector<std::string> eval_files;
  std::string params_path;
  CLI::App* qeval = sub("qaoa-eval", "Evaluate shared angles on instances");
  qeval->add_option("instances", eval_files, "Instance files")->required()->check(CLI::ExistingFile);
  qeval->add_option("--params", params_path, "Parameter file")->required()->check(CLI::ExistingFile);
  qeval->callback([&] {
    action = [&] {
      const QaoaParams params = read_params(params_path);
      std::vector<PreparedProblem> problems;
      for (const auto& f : eval_files) problems.push_back(prepare_problem(read_instance_file(f), PairPolicy::FirstTwo, g.budget));
      const SharedEvaluation ev = evaluate_shared(problems, params);
      const json j = {{"layers", params.layers()},        {"energies", ev.energies},
                      {"success_probs", ev.success_probs}, {"mean_energy", ev.mean_energy},
                      {"mean_success_prob", ev.mean_success}};
      out << j.dump(2) << '\n';
    };
  });

  // vqe
  int vqe_restarts = 20;
  std::string trajectory_csv;
  VqeConfig vqe_cfg;
  CLI::App* vqe = sub("vqe", "Product-ansatz variational search with restarts");
  vqe->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  vqe->add_option("--restarts", vqe_restarts, "Independent restarts")->check(CLI::PositiveNumber);
  vqe->add_option("--lr", vqe_cfg.nadam.learning_rate, "Nadam learning rate");
  vqe->add_option("--max-iter", vqe_cfg.nadam.max_iterations, "Iterations per restart");
  vqe->add_option("--trajectories", trajectory_csv, "CSV of energy trajectories");
  vqe->callback([&] {
    action = [&] {
      const Instance inst = read_instance_file(instance_path);
      const Reduction red = reduce(inst);
      if (!red.consistent) throw std::runtime_error("instance has no loosened solution");
      const ResidualTwoSat pairs = residual_two_sat(inst, PairPolicy::FirstTwo);
      const VqeBatch batch = run_vqe_restarts(inst, red, pairs, g.seed, vqe_restarts, vqe_cfg);
      std::ofstream traj;
      if (!trajectory_csv.empty()) {
        traj.open(trajectory_csv);
        if (!traj) throw std::runtime_error("cannot write " + trajectory_csv);
        traj.precision(17);
        traj << "restart,iteration,energy\n";
      }
      double best = batch.runs.front().final_energy();
      json runs = json::array();
      for (std::size_t r = 0; r < batch.runs.size(); ++r) {
        const VqeRun& run = batch.runs[r];
        best = std::min(best, run.final_energy());
        runs.push_back({{"restart", r}, {"final_energy", run.final_energy()}, {"iterations", run.iterations},
                        {"converged", run.converged}, {"success", run.success}});
        if (!trajectory_csv.empty()) {
          for (std::size_t t = 0; t < run.energies.size(); ++t) traj << r << ',' << t << ',' << run.energies[t] << '\n';
        }
      }
      const json j = {{"n", inst.num_vars()}, {"m", inst.num_clauses()}, {"k", red.k},
                      {"restarts", vqe_restarts}, {"successes", batch.successes},
                      {"success_rate", batch.success_rate()}, {"best_energy", best}, {"runs", runs}};
      out << j.dump(2) << '\n';
    };
  });

  // baseline
  std::string method = "dpll";
  bool count_all = false;
  std::string cnf_path;
  CLI::App* base = sub("baseline", "Classical solvers");
  base->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  base->add_option("--method", method, "Solver")->check(CLI::IsMember({"dpll", "dlx", "brute"}));
  base->add_flag("--count-all", count_all, "Enumerate every solution (dlx, brute)");
  base->add_option("--emit-cnf", cnf_path, "Also write the DIMACS CNF encoding");
  base->callback([&] {
    action = [&] {
      const Instance inst = read_instance_file(instance_path);
      if (!cnf_path.empty()) {
        std::ofstream f(cnf_path);
        if (!f) throw std::runtime_error("cannot write " + cnf_path);
        write_dimacs_cnf(f, to_cnf(inst));
      }
      const auto start = std::chrono::steady_clock::now();
      ClassicalResult r;
      if (method == "dpll") {
        r = dpll_solve(to_cnf(inst));
      } else if (method == "dlx") {
        r = dlx_solve(to_exact_cover(inst), count_all);
      } else {
        r = brute_force_solve(inst, count_all);
      }
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      json j = {{"method", method}, {"sat", r.sat}, {"conflicts", r.conflicts}, {"wall_time", wall}};
      if (r.model) j["model"] = bits(*r.model);
      if (r.solutions >= 0) j["solutions"] = r.solutions;
      out << j.dump(2) << '\n';
    };
  });

  // circuit
  int circ_layers = 2;
  double circ_c = kQaaStep;
  std::string circ_params;
  bool circ_compact = false;
  bool circ_no_prep = false;
  std::string circ_out;
  CLI::App* circ = sub("circuit", "Export the layered evolution as a gate list on n wires");
  circ->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  circ->add_option("--layers", circ_layers, "Layer count for the annealing schedule")->check(CLI::Range(2, 1 << 16));
  circ->add_option("--c", circ_c, "Step constant");
  circ->add_option("--params", circ_params, "Use trained angles instead")->check(CLI::ExistingFile);
  circ->add_flag("--compact", circ_compact, "One controlled phase per clause instead of CNOT/RZ");
  circ->add_flag("--no-prep", circ_no_prep, "Omit state preparation");
  circ->add_option("-o,--output", circ_out, "Output file (default stdout)");
  circ->callback([&] {
    action = [&] {
      const Instance inst = read_instance_file(instance_path);
      const Reduction red = reduce(inst);
      if (!red.consistent) throw std::runtime_error("instance has no loosened solution");
      const ResidualTwoSat pairs = residual_two_sat(inst, PairPolicy::FirstTwo);
      const Schedule sched =
          circ_params.empty() ? make_qaa_schedule(circ_layers, circ_c) : read_params(circ_params).as_schedule();
      CircuitOptions opts;
      opts.expand_phases = !circ_compact;
      opts.include_preparation = !circ_no_prep;
      std::ostringstream os;
      write_gate_list(os, export_circuit(inst, red, pairs, sched, opts));
      write_text(circ_out, os.str(), out);
    };
  });

  // scale
  ExperimentConfig exp;
  std::string sizes_arg = "12..26:2";
  std::string solver_name = "qaa";
  std::string scale_params;
  int truncate = -1;
  bool scale_mixed = false;
  CLI::App* scale = sub("scale", "Batch experiment with scaling fits");
  scale->add_option("--ratio", exp.ratio, "Clause-to-variable ratio");
  scale->add_option("--sizes", sizes_arg, "Sizes, e.g. 12,14 or 12..26:2");
  scale->add_option("--per-size", exp.per_size, "Instances per size")->check(CLI::PositiveNumber);
  scale->add_option("--solver", solver_name, "Solver")
      ->check(CLI::IsMember({"qaa", "qaoa", "vqe", "dpll", "dlx", "grover"}));
  scale->add_option("--layers", exp.layers, "Layer count N (qaa)")->check(CLI::PositiveNumber);
  scale->add_option("--c", exp.c, "Step constant (qaa)");
  scale->add_option("--restarts", exp.restarts, "Restarts per instance (vqe)")->check(CLI::PositiveNumber);
  scale->add_option("--params", scale_params, "Trained angles (qaoa)")->check(CLI::ExistingFile);
  scale->add_option("--truncate", truncate, "Smallest n used in fits");
  scale->add_flag("--mixed", scale_mixed, "Allow negated literals");
  scale->add_option("--out", g.out_dir, "Output directory");
  scale->callback([&] {
    action = [&] {
      exp.sizes = parse_sizes(sizes_arg);
      exp.solver = parse_batch_solver(solver_name);
      exp.seed = g.seed;
      exp.positive_only = !scale_mixed;
      exp.qubit_budget = g.budget;
      if (truncate >= 0) exp.n_min = truncate;
      if (!scale_params.empty()) exp.qaoa_params = read_params(scale_params);
      exp.validate();
      const std::filesystem::path dir(g.out_dir);
      std::filesystem::create_directories(dir);
      const auto records = run_batch(exp, dir / "journal.jsonl");
      emit_results(records, exp, dir);
      if (g.verbosity > 0) err << "wrote " << records.size() << " records to " << dir << '\n';
      std::ifstream fits(dir / "fits.json");
      out << fits.rdbuf();
    };
  });

  // variance
  std::string var_ratios = "0.626";
  std::string var_sizes = "20..100:20";
  int var_instances = 100;
  int var_trials = 100;
  CLI::App* var = sub("variance", "Gradient variance of the product ansatz");
  var->add_option("--ratios", var_ratios, "Comma-separated ratios");
  var->add_option("--sizes", var_sizes, "Sizes, e.g. 20..100:20");
  var->add_option("--instances", var_instances, "Instances per point")->check(CLI::PositiveNumber);
  var->add_option("--trials", var_trials, "Random parameter draws per instance")->check(CLI::Range(2, 1 << 20));
  var->callback([&] {
    action = [&] {
      json rows = json::array();
      std::stringstream ss(var_ratios);
      std::string part;
      while (std::getline(ss, part, ',')) {
        const double ratio = std::stod(part);
        for (int n : parse_sizes(var_sizes)) {
          const VarianceStats s = variance_experiment(ratio, n, var_instances, var_trials, g.seed);
          rows.push_back({{"ratio", ratio},
                          {"n", n},
                          {"instances", s.variances.size()},
                          {"skipped", s.skipped},
                          {"mean_variance", s.mean_variance},
                          {"stderr", s.stderr_variance}});
        }
      }
      out << json{{"bound", 1.0 / 32.0}, {"points", rows}}.dump(2) << '\n';
    };
  });

  // resources
  int res_n = 0;
  int res_k = 0;
  int res_m = 0;
  int res_g = 0;
  int res_layers = 1;
  std::string res_kind = "qaa_qaoa";
  std::string res_instance;
  CLI::App* res = sub("resources", "Qubit and gate counts for one run");
  res->add_option("instance", res_instance, "Instance file (sets n, k, m, |G|)")->check(CLI::ExistingFile);
  res->add_option("-n", res_n, "Variables")->check(CLI::NonNegativeNumber);
  res->add_option("-k", res_k, "Rank")->check(CLI::NonNegativeNumber);
  res->add_option("-m", res_m, "Clauses")->check(CLI::NonNegativeNumber);
  res->add_option("-g", res_g, "|G|")->check(CLI::NonNegativeNumber);
  res->add_option("--layers", res_layers, "Layer count N")->check(CLI::NonNegativeNumber);
  res->add_option("--kind", res_kind, "Solver kind")
      ->check(CLI::IsMember({"vqe", "qaa_qaoa", "original_vqe", "original_qaa_qaoa"}));
  res->callback([&] {
    action = [&] {
      if (!res_instance.empty()) {
        const Instance inst = read_instance_file(res_instance);
        res_n = inst.num_vars();
        res_m = inst.num_clauses();
        res_k = reduce(inst).k;
        res_g = select_g_set(inst).size();
      }
      const ResourceCounts rc = resource_estimate(res_n, res_k, res_m, res_g, res_layers, parse_solver_kind(res_kind));
      json j = {{"kind", res_kind},
                {"n", res_n},
                {"k", res_k},
                {"m", res_m},
                {"layers", res_layers},
                {"qubits", rc.qubits},
                {"single_qubit_gates", rc.single_qubit_gates ? json(*rc.single_qubit_gates) : json("poly(n)")},
                {"two_qubit_gates", rc.two_qubit_gates ? json(*rc.two_qubit_gates) : json("poly(n)")},
                {"total_order", rc.total_order},
                {"log2_search_dimension", rc.log2_search_dimension}};
      out << j.dump(2) << '\n';
    };
  });

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--seed" || a == "--threads" || a == "--out-dir" || a == "--budget") {
      ++i;
      continue;
    }
    if (a.empty() || a.front() == '-') continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "error: unknown subcommand '" << a << "'\n" << app.help();
      return kExitUsage;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* active = &app;
    for (const CLI::App* s : app.get_subcommands()) active = s;
    out << active->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version_string() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const CLI::App* active = &app;
    for (const CLI::App* s : app.get_subcommands()) active = s;
    err << active->help();
    return kExitUsage;
  }

  try {
    apply_threads(g);
    if (action) action();
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace onethree::cli
