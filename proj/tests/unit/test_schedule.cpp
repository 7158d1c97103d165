#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "onethree/schedule.hpp"

using namespace onethree;

TEST_SUITE("schedule") {
  TEST_CASE("adaptive simpson") {
    CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 3.0, 1e-12) == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-11));
  }

  TEST_CASE("f against high-precision reference values") {
    // Reference values from 50-digit quadrature.
    CHECK(std::abs(schedule_normalizer() - 0.468009862271410444) < 1e-11);
    CHECK(std::abs(schedule_f(0.1) - 0.170640847880003203) < 1e-10);
    CHECK(std::abs(schedule_f(0.25) - 0.329400791629206855) < 1e-10);
    CHECK(std::abs(schedule_f(0.75) - 0.670599208370793145) < 1e-10);
    CHECK(std::abs(schedule_f(0.9) - 0.829359152119996835) < 1e-10);
  }

  TEST_CASE("f endpoints, symmetry and domain") {
    CHECK(std::abs(schedule_f(0.0)) < 1e-12);
    CHECK(std::abs(schedule_f(1.0) - 1.0) < 1e-12);
    CHECK(std::abs(schedule_f(0.5) - 0.5) < 1e-12);
    CHECK(std::abs(schedule_f(0.3) + schedule_f(0.7) - 1.0) < 1e-12);
    CHECK_THROWS_AS(schedule_f(-0.01), std::domain_error);
    CHECK_THROWS_AS(schedule_f(1.01), std::domain_error);
  }

  TEST_CASE("QAA schedules") {
    const Schedule s = make_qaa_schedule(3, 0.25);
    CHECK(s.layers() == 3);
    CHECK(s.betas[0] == 0.0);
    CHECK(s.betas[1] == doctest::Approx(0.125));
    CHECK(s.betas[2] == doctest::Approx(0.25));
    CHECK(s.gammas[0] == doctest::Approx(0.25));
    CHECK(s.gammas[1] == doctest::Approx(0.125));
    CHECK(s.gammas[2] == doctest::Approx(0.0));

    const Schedule two = make_qaa_schedule(2, 0.7);
    CHECK(two.betas == std::vector<double>{0.0, 0.7});
    CHECK(two.gammas[0] == doctest::Approx(0.7));
    CHECK(two.gammas[1] == doctest::Approx(0.0));

    const Schedule big = make_qaa_schedule(40);
    for (int i = 1; i < 40; ++i) {
      CHECK(big.betas[i] > big.betas[i - 1]);
      CHECK(big.gammas[i] < big.gammas[i - 1]);
    }
    CHECK_THROWS(make_qaa_schedule(1));
  }

  TEST_CASE("QAOA initial schedule") {
    const Schedule one = make_qaoa_initial_schedule(1);
    CHECK(one.betas == std::vector<double>{0.25});
    CHECK(one.gammas == std::vector<double>{0.25});
    const Schedule four = make_qaoa_initial_schedule(4);
    const Schedule ref = make_qaa_schedule(4, 0.5);
    CHECK(four.betas == ref.betas);
    CHECK(four.gammas == ref.gammas);
  }
}
