// Copyright 2026 The vnfplace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vnfp/detail/genetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "vnfp/error.hpp"
#include "vnfp/rng.hpp"

namespace vnfp {

void GaParams::check() const {
  if (populationSize < 2) throw Error("GA population must hold at least 2 individuals");
  if (tournamentSize < 1) throw Error("GA tournament size must be positive");
  if (!(crossoverRate >= 0.0 && crossoverRate <= 1.0)) throw Error("GA crossover rate must lie in [0, 1]");
  if (mutationRate > 1.0) throw Error("GA mutation rate must not exceed 1");
  if (eliteCount >= populationSize) throw Error("GA elite count must be below the population size");
  if (threads < 1) throw Error("GA needs at least one evaluation thread");
}

std::string traceCsv(std::span<const GaTracePoint> trace) {
  std::ostringstream out;
  out.precision(17);
  out << "generation,bestCost,meanCost\n";
  for (const auto& t : trace) out << t.generation << ',' << t.bestCost << ',' << t.meanCost << '\n';
  return out.str();
}

namespace detail {

GeneticEngine::GeneticEngine(std::vector<std::uint32_t> ranges, GaParams params, Fitness fitness)
    : ranges_(std::move(ranges)), params_(params), fitness_(std::move(fitness)) {
  params_.check();
  for (auto r : ranges_) {
    if (r == 0) throw Error("GA gene with an empty range");
  }
}

void GeneticEngine::evaluate(std::vector<Genes>& population, std::vector<double>& fitness, std::size_t from) {
  const std::size_t n = population.size();
  const std::size_t workers = std::min(params_.threads, n > from ? n - from : std::size_t{1});
  if (workers <= 1) {
    for (std::size_t i = from; i < n; ++i) fitness[i] = fitness_(population[i]);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n - from + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = from + w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) fitness[i] = fitness_(population[i]);
    });
  }
  for (auto& t : pool) t.join();
}

GeneticEngine::Outcome GeneticEngine::run() {
  Rng rng(params_.seed);
  const std::size_t len = ranges_.size();
  const std::size_t popSize = params_.populationSize;
  const double mutation = params_.mutationRate < 0.0 ? (len ? 1.0 / static_cast<double>(len) : 0.0)
                                                     : params_.mutationRate;

  std::vector<Genes> pop;
  pop.reserve(popSize);
  for (const auto& s : seeds_) {
    if (pop.size() == popSize) break;
    if (s.size() != len) throw Error("GA seed individual has the wrong length");
    for (std::size_t i = 0; i < len; ++i) {
      if (s[i] >= ranges_[i]) throw Error("GA seed gene out of range");
    }
    pop.push_back(s);
  }
  while (pop.size() < popSize) {
    Genes g(len);
    for (std::size_t i = 0; i < len; ++i) g[i] = static_cast<std::uint32_t>(rng.below(ranges_[i]));
    pop.push_back(std::move(g));
  }
  std::vector<double> fit(popSize);
  evaluate(pop, fit, 0);

  Outcome out;
  out.bestCost = std::numeric_limits<double>::infinity();
  auto record = [&](std::size_t generation) {
    double sum = 0.0;
    std::size_t finite = 0;
    for (std::size_t i = 0; i < popSize; ++i) {
      if (fit[i] < out.bestCost) {
        out.bestCost = fit[i];
        out.best = pop[i];
      }
      if (std::isfinite(fit[i])) {
        sum += fit[i];
        ++finite;
      }
    }
    const double mean = finite ? sum / static_cast<double>(finite) : std::numeric_limits<double>::infinity();
    out.trace.push_back({generation, out.bestCost, mean});
  };
  record(0);

  std::vector<std::size_t> order(popSize);
  auto tournament = [&]() -> const Genes& {
    std::size_t best = rng.below(popSize);
    for (std::size_t k = 1; k < params_.tournamentSize; ++k) {
      const std::size_t c = rng.below(popSize);
      if (fit[c] < fit[best] || (fit[c] == fit[best] && c < best)) best = c;
    }
    return pop[best];
  };

  for (std::size_t gen = 1; gen <= params_.generations; ++gen) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fit[a] < fit[b]; });
    std::vector<Genes> next;
    std::vector<double> nextFit(popSize);
    next.reserve(popSize);
    for (std::size_t e = 0; e < params_.eliteCount; ++e) {
      nextFit[e] = fit[order[e]];
      next.push_back(pop[order[e]]);
    }
    while (next.size() < popSize) {
      const Genes& a = tournament();
      const Genes& b = tournament();
      Genes child = a;
      if (len > 1 && rng.chance(params_.crossoverRate)) {
        const std::size_t cut = 1 + rng.below(len - 1);
        std::copy(b.begin() + static_cast<std::ptrdiff_t>(cut), b.end(),
                  child.begin() + static_cast<std::ptrdiff_t>(cut));
      }
      for (std::size_t i = 0; i < len; ++i) {
        if (rng.chance(mutation)) child[i] = static_cast<std::uint32_t>(rng.below(ranges_[i]));
      }
      next.push_back(std::move(child));
    }
    pop = std::move(next);
    fit = std::move(nextFit);
    evaluate(pop, fit, params_.eliteCount);
    record(gen);
  }
  return out;
}

}  // namespace detail
}  // namespace vnfp
