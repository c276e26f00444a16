#include "desurv/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "desurv/error.hpp"

namespace desurv {

bool dominates(const Fitness& a, const Fitness& b) {
  return a[0] >= b[0] && a[1] >= b[1] && (a[0] > b[0] || a[1] > b[1]);
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const Fitness> f) {
  const std::size_t n = f.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<int> count(n, 0);
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (dominates(f[p], f[q])) {
        dominated[p].push_back(q);
      } else if (dominates(f[q], f[p])) {
        ++count[p];
      }
    }
    if (count[p] == 0) current.push_back(p);
  }
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t p : current) {
      for (std::size_t q : dominated[p]) {
        if (--count[q] == 0) next.push_back(q);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<const Fitness> f, std::span<const std::size_t> front) {
  const std::size_t n = front.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> d(n, 0.0);
  if (n <= 2) return std::vector<double>(n, kInf);
  std::vector<std::size_t> order(n);
  for (int m = 0; m < 2; ++m) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f[front[a]][m] < f[front[b]][m]; });
    const double lo = f[front[order.front()]][m], hi = f[front[order.back()]][m];
    d[order.front()] = kInf;
    d[order.back()] = kInf;
    const double range = hi - lo;
    if (!(range > 0.0)) continue;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      d[order[k]] += (f[front[order[k + 1]]][m] - f[front[order[k - 1]]][m]) / range;
    }
  }
  return d;
}

double hypervolume(std::span<const Fitness> points, Fitness ref) {
  std::vector<Fitness> p;
  for (const Fitness& x : points) {
    if (x[0] > ref[0] && x[1] > ref[1]) p.push_back(x);
  }
  std::sort(p.begin(), p.end(), [](const Fitness& a, const Fitness& b) {
    return a[0] > b[0] || (a[0] == b[0] && a[1] > b[1]);
  });
  double area = 0.0, top = ref[1];
  for (const Fitness& x : p) {
    if (x[1] > top) {
      area += (x[0] - ref[0]) * (x[1] - top);
      top = x[1];
    }
  }
  return area;
}

std::vector<std::size_t> non_dominated_subset(std::span<const Fitness> f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < f.size() && !dominated; ++j) {
      dominated = j != i && (dominates(f[j], f[i]) || (j < i && f[j] == f[i]));
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

void validate(const GAParams& p) {
  if (p.population < 2 || p.population % 2 != 0) throw Error("nsga2", "population must be even and >= 2");
  if (p.generations < 0) throw Error("nsga2", "generations must be >= 0");
  auto prob = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!prob(p.crossover_probability) || !prob(p.mutation_probability)) {
    throw Error("nsga2", "probabilities must lie in [0, 1]");
  }
  if (!(p.eta_crossover >= 0.0) || !(p.eta_mutation >= 0.0)) {
    throw Error("nsga2", "distribution indices must be >= 0");
  }
  if (p.workers < 1) throw Error("nsga2", "workers must be >= 1");
}

namespace {

void sbx(Genome& a, Genome& b, const Bounds& bd, double eta, Random& rng) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double u_gene = rng.uniform();
    if (u_gene > 0.5) continue;
    const double x1 = std::min(a[i], b[i]), x2 = std::max(a[i], b[i]);
    const double lo = bd.lower[i], hi = bd.upper[i];
    const double u = rng.uniform();
    if (x2 - x1 < 1e-14) continue;
    auto child = [&](double beta) {
      const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
      const double bq = u <= 1.0 / alpha ? std::pow(u * alpha, 1.0 / (eta + 1.0))
                                         : std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
      return bq;
    };
    const double bq1 = child(1.0 + 2.0 * (x1 - lo) / (x2 - x1));
    const double c1 = 0.5 * (x1 + x2 - bq1 * (x2 - x1));
    const double bq2 = child(1.0 + 2.0 * (hi - x2) / (x2 - x1));
    const double c2 = 0.5 * (x1 + x2 + bq2 * (x2 - x1));
    const double y1 = std::clamp(c1, lo, hi), y2 = std::clamp(c2, lo, hi);
    if (rng.uniform() <= 0.5) {
      a[i] = y2;
      b[i] = y1;
    } else {
      a[i] = y1;
      b[i] = y2;
    }
  }
}

void polynomial_mutation(Genome& g, const Bounds& bd, double eta, double pm, Random& rng) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (rng.uniform() >= pm) continue;
    const double lo = bd.lower[i], hi = bd.upper[i];
    const double range = hi - lo;
    if (!(range > 0.0)) continue;
    const double x = g[i];
    const double d1 = (x - lo) / range, d2 = (hi - x) / range;
    const double u = rng.uniform();
    const double p = 1.0 / (eta + 1.0);
    double dq;
    if (u < 0.5) {
      const double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
      dq = std::pow(v, p) - 1.0;
    } else {
      const double v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
      dq = 1.0 - std::pow(v, p);
    }
    g[i] = std::clamp(x + dq * range, lo, hi);
  }
}

}  // namespace

std::vector<Genome> vary(std::span<const Genome> parents, const Bounds& bounds, const GAParams& params,
                         Random& rng) {
  if (parents.size() % 2 != 0) throw Error("nsga2", "parent count must be even");
  std::vector<Genome> out(parents.begin(), parents.end());
  for (std::size_t i = 0; i + 1 < out.size(); i += 2) {
    if (rng.uniform() < params.crossover_probability) sbx(out[i], out[i + 1], bounds, params.eta_crossover, rng);
  }
  for (Genome& g : out) polynomial_mutation(g, bounds, params.eta_mutation, params.mutation_probability, rng);
  return out;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Problem& problem, int workers) : problem_(problem), workers_(workers) {}

  std::vector<Individual> evaluate(const std::vector<Genome>& raw) {
    std::vector<Individual> out(raw.size());
    std::vector<Genome> pending;
    std::map<Genome, std::size_t> pending_index;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      out[i].genome = problem_.decode ? problem_.decode(raw[i]) : raw[i];
      if (!cache_.count(out[i].genome) && !pending_index.count(out[i].genome)) {
        pending_index.emplace(out[i].genome, pending.size());
        pending.push_back(out[i].genome);
      }
    }
    std::vector<Fitness> results(pending.size());
    std::vector<std::exception_ptr> errors(pending.size());
    auto work = [&](std::size_t first) {
      for (std::size_t k = first; k < pending.size(); k += static_cast<std::size_t>(workers_)) {
        try {
          results[k] = problem_.evaluate(pending[k]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    };
    if (workers_ <= 1 || pending.size() <= 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < workers_; ++w) threads.emplace_back(work, static_cast<std::size_t>(w));
      for (auto& t : threads) t.join();
    }
    for (std::size_t k = 0; k < pending.size(); ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      cache_.emplace(pending[k], results[k]);
    }
    for (Individual& ind : out) ind.fitness = cache_.at(ind.genome);
    return out;
  }

  const std::map<Genome, Fitness>& cache() const { return cache_; }

 private:
  const Problem& problem_;
  int workers_;
  std::map<Genome, Fitness> cache_;
};

void assign_rank_and_crowding(std::vector<Individual>& pop) {
  std::vector<Fitness> f;
  for (const auto& i : pop) f.push_back(i.fitness);
  const auto fronts = non_dominated_sort(f);
  for (std::size_t r = 0; r < fronts.size(); ++r) {
    const auto d = crowding_distance(f, fronts[r]);
    for (std::size_t k = 0; k < fronts[r].size(); ++k) {
      pop[fronts[r][k]].rank = static_cast<int>(r) + 1;
      pop[fronts[r][k]].crowding = d[k];
    }
  }
}

bool better(const Individual& a, const Individual& b) {
  return a.rank < b.rank || (a.rank == b.rank && a.crowding > b.crowding);
}

std::vector<Individual> select_survivors(std::vector<Individual> merged, std::size_t n) {
  std::vector<Fitness> f;
  for (const auto& i : merged) f.push_back(i.fitness);
  const auto fronts = non_dominated_sort(f);
  std::vector<Individual> next;
  for (std::size_t r = 0; r < fronts.size() && next.size() < n; ++r) {
    const auto d = crowding_distance(f, fronts[r]);
    std::vector<std::size_t> order(fronts[r].size());
    std::iota(order.begin(), order.end(), 0);
    if (next.size() + fronts[r].size() > n) {
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
    }
    for (std::size_t k : order) {
      if (next.size() == n) break;
      Individual ind = merged[fronts[r][k]];
      ind.rank = static_cast<int>(r) + 1;
      ind.crowding = d[k];
      next.push_back(std::move(ind));
    }
  }
  return next;
}

GenerationLog log_generation(int gen, const std::vector<Individual>& pop) {
  GenerationLog log;
  log.generation = gen;
  std::vector<Fitness> front;
  log.best_first = -std::numeric_limits<double>::infinity();
  log.best_second = -std::numeric_limits<double>::infinity();
  for (const auto& i : pop) {
    if (i.rank == 1) front.push_back(i.fitness);
    log.best_first = std::max(log.best_first, i.fitness[0]);
    log.best_second = std::max(log.best_second, i.fitness[1]);
  }
  log.front_size = front.size();
  log.hypervolume = hypervolume(front);
  return log;
}

}  // namespace

OptimizationResult nsga2(const Problem& problem, const GAParams& params) {
  validate(params);
  const Bounds& bd = problem.bounds;
  if (bd.lower.size() != bd.upper.size() || bd.lower.empty()) throw Error("nsga2", "inconsistent bounds");
  for (std::size_t i = 0; i < bd.lower.size(); ++i) {
    if (!(bd.lower[i] <= bd.upper[i])) throw Error("nsga2", "lower bound above upper bound");
  }
  Random rng(params.seed);
  Evaluator evaluator(problem, params.workers);
  const std::size_t n = static_cast<std::size_t>(params.population);

  std::vector<Genome> initial(n, Genome(bd.lower.size()));
  for (Genome& g : initial) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = bd.lower[i] + rng.uniform() * (bd.upper[i] - bd.lower[i]);
  }
  std::vector<Individual> pop = evaluator.evaluate(initial);
  assign_rank_and_crowding(pop);

  OptimizationResult result;
  result.log.push_back(log_generation(0, pop));
  for (int gen = 1; gen <= params.generations; ++gen) {
    std::vector<Genome> parents;
    parents.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t a = rng.index(n), b = rng.index(n);
      parents.push_back(better(pop[b], pop[a]) ? pop[b].genome : pop[a].genome);
    }
    std::vector<Individual> offspring = evaluator.evaluate(vary(parents, bd, params, rng));
    std::vector<Individual> merged = std::move(pop);
    merged.insert(merged.end(), offspring.begin(), offspring.end());
    pop = select_survivors(std::move(merged), n);
    result.log.push_back(log_generation(gen, pop));
  }

  std::vector<Individual> all;
  std::vector<Fitness> f;
  for (const auto& [g, fit] : evaluator.cache()) {
    all.push_back({g, fit, 1, 0.0});
    f.push_back(fit);
  }
  const auto archive_fronts = non_dominated_sort(f);
  if (!archive_fronts.empty()) {
    for (std::size_t i : archive_fronts[0]) result.front.push_back(all[i]);
  }
  std::vector<Fitness> ff;
  for (const auto& i : result.front) ff.push_back(i.fitness);
  const std::vector<std::size_t> idx = [&] {
    std::vector<std::size_t> v(ff.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }();
  const auto d = crowding_distance(ff, idx);
  for (std::size_t k = 0; k < result.front.size(); ++k) result.front[k].crowding = d[k];
  std::stable_sort(result.front.begin(), result.front.end(), [](const Individual& a, const Individual& b) {
    return a.fitness[0] < b.fitness[0] || (a.fitness[0] == b.fitness[0] && a.fitness[1] > b.fitness[1]);
  });
  result.evaluations = evaluator.cache().size();
  return result;
}

}  // namespace desurv
