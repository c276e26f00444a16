#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace desurv {

/// Objective pair, both maximised.
using Fitness = std::array<double, 2>;
using Genome = std::vector<double>;

bool dominates(const Fitness& a, const Fitness& b);

/// Fronts of indices into the population, best first.
std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const Fitness> fitness);

/// Crowding distance of every member of one front, in front order.
std::vector<double> crowding_distance(std::span<const Fitness> fitness, std::span<const std::size_t> front);

/// Area dominated by the points and bounded below by the reference point.
double hypervolume(std::span<const Fitness> points, Fitness reference = {0.0, 0.0});

/// Indices of the non-dominated points; duplicates of a kept point are dropped.
std::vector<std::size_t> non_dominated_subset(std::span<const Fitness> fitness);

struct GAParams {
  int population = 80;
  int generations = 60;
  double crossover_probability = 0.9;
  double mutation_probability = 0.05;  ///< per gene
  double eta_crossover = 20.0;
  double eta_mutation = 20.0;
  std::uint64_t seed = 42;
  int workers = 1;  ///< evaluation threads; never changes the result
};

void validate(const GAParams& p);

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// mt19937_64 with uniform doubles built from the top 53 bits.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

/// Simulated binary crossover on consecutive pairs followed by polynomial
/// mutation, both bounded. parents.size() must be even.
std::vector<Genome> vary(std::span<const Genome> parents, const Bounds& bounds, const GAParams& params, Random& rng);

struct Individual {
  Genome genome;  ///< decoded
  Fitness fitness{};
  int rank = 0;
  double crowding = 0.0;
};

struct GenerationLog {
  int generation = 0;
  std::size_t front_size = 0;
  double hypervolume = 0.0;
  double best_first = 0.0;
  double best_second = 0.0;
};

struct OptimizationResult {
  /// Non-dominated set of every design evaluated during the run, sorted by
  /// the first objective.
  std::vector<Individual> front;
  std::vector<GenerationLog> log;
  std::size_t evaluations = 0;  ///< distinct designs evaluated
};

struct Problem {
  Bounds bounds;
  /// Maps a raw genome to its canonical form (integer rounding, snapping).
  std::function<Genome(const Genome&)> decode;
  /// Pure fitness of a decoded genome. Called concurrently.
  std::function<Fitness(const Genome&)> evaluate;
};

OptimizationResult nsga2(const Problem& problem, const GAParams& params);

}  // namespace desurv
