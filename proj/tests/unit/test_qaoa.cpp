#include <doctest.h>

#include "onethree/baselines.hpp"
#include "onethree/qaoa.hpp"
#include "onethree/random.hpp"

using namespace onethree;

namespace {

std::vector<PreparedProblem> satisfiable(int n, int count, std::uint64_t seed) {
  std::vector<PreparedProblem> out;
  const int m = static_cast<int>(0.626 * n + 0.5);
  for (std::uint64_t i = 0; static_cast<int>(out.size()) < count; ++i) {
    const Instance inst = generate_random(n, m, derive_seed(seed, i));
    if (dpll_solve(to_cnf(inst)).sat) out.push_back(prepare_problem(inst));
  }
  return out;
}

}  // namespace

TEST_SUITE("qaoa") {
  TEST_CASE("shared evaluation agrees with single runs") {
    const auto probs = satisfiable(12, 5, 1);
    const QaoaParams params = QaoaParams::from_schedule(make_qaoa_initial_schedule(3));
    const SharedEvaluation ev = evaluate_shared(probs, params);
    double sum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const RunResult r = run_layers(probs[i], params.as_schedule());
      CHECK(ev.energies[i] == doctest::Approx(r.energy));
      CHECK(ev.success_probs[i] == doctest::Approx(r.success_prob));
      sum += r.energy;
    }
    CHECK(ev.mean_energy == doctest::Approx(sum / probs.size()));
    CHECK(mean_energy(probs, params) == doctest::Approx(ev.mean_energy));
  }

  TEST_CASE("training lowers the training energy") {
    const auto train = satisfiable(12, 10, 2);
    const TrainReport rep = train_shared_qaoa(train, 3);
    CHECK(rep.params.layers() == 3);
    CHECK(rep.final_mean_energy <= rep.initial_mean_energy);
    CHECK(rep.initial_mean_energy ==
          doctest::Approx(mean_energy(train, QaoaParams::from_schedule(make_qaoa_initial_schedule(3)))));
    CHECK(rep.final_mean_energy == doctest::Approx(mean_energy(train, rep.params)));
  }

  TEST_CASE("angle interpolation") {
    const QaoaParams one{{0.4}, {0.2}};
    const QaoaParams two = interpolate_params(one, 2);
    CHECK(two.betas == std::vector<double>{0.4, 0.4});
    CHECK(two.gammas == std::vector<double>{0.2, 0.2});

    const QaoaParams ramp{{0.0, 1.0, 3.0}, {2.0, 1.0, 0.0}};
    const QaoaParams five = interpolate_params(ramp, 5);
    CHECK(five.betas == std::vector<double>{0.0, 0.5, 1.0, 2.0, 3.0});
    CHECK(five.gammas == std::vector<double>{2.0, 1.5, 1.0, 0.5, 0.0});
    const QaoaParams same = interpolate_params(ramp, 3);
    CHECK(same.betas == ramp.betas);
    CHECK(interpolate_params(ramp, 1).betas == std::vector<double>{1.0});
    CHECK_THROWS(interpolate_params(QaoaParams{}, 3));
  }

  TEST_CASE("a warm start never does worse than the initial schedule") {
    const auto train = satisfiable(12, 8, 5);
    const TrainReport one = train_shared_qaoa(train, 1);
    QaoaTrainConfig cfg;
    cfg.warm_start = one.params;
    const TrainReport cold = train_shared_qaoa(train, 2);
    const TrainReport warm = train_shared_qaoa(train, 2, cfg);
    CHECK(warm.final_mean_energy <= cold.final_mean_energy);
    CHECK(warm.initial_mean_energy == doctest::Approx(cold.initial_mean_energy));
    CHECK(warm.final_mean_energy == doctest::Approx(mean_energy(train, warm.params)));
  }

  TEST_CASE("trained parameters generalize") {
    const auto train = satisfiable(16, 20, 3);
    const auto test = satisfiable(16, 30, 4);
    const TrainReport rep = train_shared_qaoa(train, 4);
    const QaoaParams init = QaoaParams::from_schedule(make_qaoa_initial_schedule(4));
    CHECK(evaluate_shared(test, rep.params).mean_energy < evaluate_shared(test, init).mean_energy);
  }
}
