#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "endfire/de.hpp"

using namespace endfire;

namespace {

double sphere_peak(const Eigen::VectorXd& x) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    s += (x[j] - 0.3) * (x[j] - 0.3);
  }
  return -s;
}

Eigen::VectorXd constant(Eigen::Index n, double v) {
  return Eigen::VectorXd::Constant(n, v);
}

}  // namespace

TEST_CASE("splitmix64 matches the published reference outputs") {
  // First outputs for seed 0 of the public-domain splitmix64 algorithm.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafull);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
  CHECK(rng.next() == 0x06c45d188009454full);

  SplitMix64 u(42);
  for (int k = 0; k < 1000; ++k) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
  SplitMix64 below_rng(7);
  for (int k = 0; k < 100; ++k) {
    CHECK(below_rng.below(5) < 5);
  }
}

TEST_CASE("the optimizer converges on a smooth concave objective") {
  DeConfig config;
  config.population = 24;
  config.iterations = 120;
  config.seed = 3;
  const DeResult result =
      de_maximize(sphere_peak, constant(4, -2.0), constant(4, 2.0), config);
  CHECK(result.best_fitness > -1e-8);
  for (Eigen::Index j = 0; j < result.best.size(); ++j) {
    CHECK(result.best[j] == doctest::Approx(0.3).epsilon(1e-3));
  }
}

TEST_CASE("identical seeds give identical runs and different seeds differ") {
  DeConfig config;
  config.population = 12;
  config.iterations = 30;
  config.seed = 99;
  const Eigen::VectorXd lower = constant(3, -1.0);
  const Eigen::VectorXd upper = constant(3, 1.0);
  const DeResult a = de_maximize(sphere_peak, lower, upper, config);
  const DeResult b = de_maximize(sphere_peak, lower, upper, config);
  REQUIRE(a.best.size() == b.best.size());
  for (Eigen::Index j = 0; j < a.best.size(); ++j) {
    CHECK(a.best[j] == b.best[j]);  // bitwise equality
  }
  CHECK(a.best_fitness == b.best_fitness);
  REQUIRE(a.best_trace.size() == b.best_trace.size());
  for (std::size_t k = 0; k < a.best_trace.size(); ++k) {
    CHECK(a.best_trace[k] == b.best_trace[k]);
  }
  CHECK(a.evaluations == b.evaluations);

  config.seed = 100;
  const DeResult c = de_maximize(sphere_peak, lower, upper, config);
  CHECK(c.best_fitness != a.best_fitness);
}

TEST_CASE("all sampled points respect the box bounds") {
  const Eigen::VectorXd lower = (Eigen::VectorXd(2) << 0.1, -0.5).finished();
  const Eigen::VectorXd upper = (Eigen::VectorXd(2) << 0.2, -0.4).finished();
  bool violated = false;
  auto fitness = [&](const Eigen::VectorXd& x) {
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      if (x[j] < lower[j] || x[j] > upper[j]) {
        violated = true;
      }
    }
    return -x.squaredNorm();
  };
  DeConfig config;
  config.population = 10;
  config.iterations = 40;
  config.seed = 5;
  de_maximize(fitness, lower, upper, config);
  CHECK_FALSE(violated);
}

TEST_CASE("the best-so-far trace never decreases and has one entry per generation") {
  DeConfig config;
  config.population = 15;
  config.iterations = 25;
  config.seed = 11;
  const DeResult result =
      de_maximize(sphere_peak, constant(2, -3.0), constant(2, 3.0), config);
  REQUIRE(result.best_trace.size() ==
          static_cast<std::size_t>(config.iterations) + 1);
  for (std::size_t k = 1; k < result.best_trace.size(); ++k) {
    CHECK(result.best_trace[k] >= result.best_trace[k - 1]);
  }
  CHECK(result.best_trace.back() == result.best_fitness);
  // A smooth objective needs no redraws: one evaluation per member at
  // initialization plus one per member per generation.
  CHECK(result.evaluations ==
        static_cast<std::uint64_t>(config.population) *
            static_cast<std::uint64_t>(config.iterations + 1));
}

TEST_CASE("non-finite fitness values are treated as worst-possible") {
  // Fitness is NaN outside a small disc; the optimizer must still settle inside it.
  auto fitness = [](const Eigen::VectorXd& x) {
    const double r2 = x.squaredNorm();
    if (r2 > 0.25) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    return -r2;
  };
  DeConfig config;
  config.population = 20;
  config.iterations = 60;
  config.seed = 17;
  const DeResult result =
      de_maximize(fitness, constant(2, -1.0), constant(2, 1.0), config);
  CHECK(std::isfinite(result.best_fitness));
  CHECK(result.best.squaredNorm() <= 0.25);
  CHECK(result.evaluations > static_cast<std::uint64_t>(config.population) *
                                 static_cast<std::uint64_t>(config.iterations + 1));
}

TEST_CASE("configuration validation") {
  DeConfig config;
  config.population = 3;  // fewer than required for best/1 donors
  config.iterations = 5;
  CHECK_THROWS_AS(de_maximize(sphere_peak, constant(1, 0.0), constant(1, 1.0), config),
                  std::invalid_argument);
  config.population = 8;
  CHECK_THROWS_AS(
      de_maximize(sphere_peak, Eigen::VectorXd(), Eigen::VectorXd(), config),
      std::invalid_argument);
  CHECK_THROWS_AS(de_maximize(sphere_peak, constant(2, 0.0), constant(1, 1.0), config),
                  std::invalid_argument);
  CHECK_THROWS_AS(de_maximize(sphere_peak, constant(1, 2.0), constant(1, 1.0), config),
                  std::invalid_argument);
  config.iterations = -1;
  CHECK_THROWS_AS(de_maximize(sphere_peak, constant(1, 0.0), constant(1, 1.0), config),
                  std::invalid_argument);
}
