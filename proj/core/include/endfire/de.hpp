#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace endfire {

// Small, fast, well-mixed PRNG used for every stochastic part of the
// optimizer. Deterministic across platforms for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

struct DeConfig {
  int population = 0;
  int iterations = 0;
  double crossover = 0.8;
  double weight = 0.7;
  std::uint64_t seed = 1;
  // How many times an initial candidate may be redrawn before the optimizer
  // gives up on finding a feasible (finite-fitness) starting point for it.
  int init_attempts = 50;
};

struct DeResult {
  Eigen::VectorXd best;
  double best_fitness = 0.0;
  // Best fitness after initialization and after each generation.
  std::vector<double> best_trace;
  std::uint64_t evaluations = 0;
};

// Global maximization with differential evolution, best/1 mutation and
// binomial crossover, synchronous generations. Box bounds are enforced by
// clipping. A fitness of NaN (or -inf) marks an infeasible point. The run is
// fully reproducible: identical config and fitness give identical results on
// every platform.
DeResult de_maximize(const std::function<double(const Eigen::VectorXd&)>& fitness,
                     const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                     const DeConfig& cfg);

}  // namespace endfire
