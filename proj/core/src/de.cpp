#include "endfire/de.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace endfire {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double guarded(const std::function<double(const Eigen::VectorXd&)>& fitness,
               const Eigen::VectorXd& x, std::uint64_t& evaluations) {
  ++evaluations;
  const double f = fitness(x);
  return std::isnan(f) ? kNegInf : f;
}

// Independent, reproducible stream for one (generation, member) pair. The
// layout keeps every candidate's random draws decoupled from the others, so
// results do not depend on evaluation order.
SplitMix64 substream(std::uint64_t seed, std::uint64_t generation, std::uint64_t member) {
  SplitMix64 seeder(seed);
  std::uint64_t h = seeder.next();
  h ^= generation + 0x9e3779b97f4a7c15ull * (member + 1);
  return SplitMix64(h);
}

}  // namespace

DeResult de_maximize(const std::function<double(const Eigen::VectorXd&)>& fitness,
                     const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                     const DeConfig& cfg) {
  const Eigen::Index dim = lower.size();
  if (upper.size() != dim || dim == 0) {
    throw std::invalid_argument("de_maximize: bounds must be non-empty and equal-sized");
  }
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (!(lower[j] <= upper[j])) {
      throw std::invalid_argument("de_maximize: lower bound exceeds upper bound");
    }
  }
  if (cfg.population < 4) {
    throw std::invalid_argument("de_maximize: population must be at least 4");
  }
  if (cfg.iterations < 0) {
    throw std::invalid_argument("de_maximize: iterations must be non-negative");
  }

  const auto np = static_cast<std::size_t>(cfg.population);
  DeResult result;

  // --- initialization: uniform in the box, redrawing infeasible candidates.
  std::vector<Eigen::VectorXd> pop(np, Eigen::VectorXd(dim));
  std::vector<double> fit(np, kNegInf);
  for (std::size_t m = 0; m < np; ++m) {
    SplitMix64 rng = substream(cfg.seed, 0, m);
    for (int attempt = 0; attempt < cfg.init_attempts; ++attempt) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        pop[m][j] = lower[j] + (upper[j] - lower[j]) * rng.uniform();
      }
      fit[m] = guarded(fitness, pop[m], result.evaluations);
      if (fit[m] > kNegInf) {
        break;
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t m = 1; m < np; ++m) {
    if (fit[m] > fit[best]) {
      best = m;
    }
  }
  result.best_trace.push_back(fit[best]);

  // --- synchronous generations of best/1/bin.
  std::vector<Eigen::VectorXd> next_pop(np, Eigen::VectorXd(dim));
  std::vector<double> next_fit(np);
  for (int gen = 1; gen <= cfg.iterations; ++gen) {
    for (std::size_t m = 0; m < np; ++m) {
      SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(gen), m);

      // Two distinct donors, both different from the target and the best.
      std::size_t r1 = m;
      while (r1 == m || r1 == best) {
        r1 = static_cast<std::size_t>(rng.below(np));
      }
      std::size_t r2 = m;
      while (r2 == m || r2 == best || r2 == r1) {
        r2 = static_cast<std::size_t>(rng.below(np));
      }

      const auto j_rand = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(dim)));
      Eigen::VectorXd trial = pop[m];
      for (Eigen::Index j = 0; j < dim; ++j) {
        // Draw for every coordinate so the random stream layout is fixed
        // regardless of which coordinates cross over.
        const double u = rng.uniform();
        if (u < cfg.crossover || j == j_rand) {
          double v = pop[best][j] + cfg.weight * (pop[r1][j] - pop[r2][j]);
          v = std::min(std::max(v, lower[j]), upper[j]);
          trial[j] = v;
        }
      }

      const double f_trial = guarded(fitness, trial, result.evaluations);
      if (f_trial >= fit[m]) {
        next_pop[m] = trial;
        next_fit[m] = f_trial;
      } else {
        next_pop[m] = pop[m];
        next_fit[m] = fit[m];
      }
    }
    pop.swap(next_pop);
    fit.swap(next_fit);
    best = 0;
    for (std::size_t m = 1; m < np; ++m) {
      if (fit[m] > fit[best]) {
        best = m;
      }
    }
    result.best_trace.push_back(fit[best]);
  }

  result.best = pop[best];
  result.best_fitness = fit[best];
  return result;
}

}  // namespace endfire
