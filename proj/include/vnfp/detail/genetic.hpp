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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vnfp/ga.hpp"

namespace vnfp::detail {

using Genes = std::vector<std::uint32_t>;

/// Generational GA over integer chromosomes where gene i lies in
/// [0, ranges[i]). Tournament selection, one-point crossover, per-gene reset
/// mutation, elitism. Minimizes fitness.
class GeneticEngine {
 public:
  using Fitness = std::function<double(std::span<const std::uint32_t>)>;

  GeneticEngine(std::vector<std::uint32_t> ranges, GaParams params, Fitness fitness);

  /// Individuals placed at the front of the initial population.
  void seed(Genes individual) { seeds_.push_back(std::move(individual)); }

  struct Outcome {
    Genes best;
    double bestCost = 0.0;
    std::vector<GaTracePoint> trace;
  };

  Outcome run();

 private:
  void evaluate(std::vector<Genes>& population, std::vector<double>& fitness, std::size_t from);

  std::vector<std::uint32_t> ranges_;
  GaParams params_;
  Fitness fitness_;
  std::vector<Genes> seeds_;
};

}  // namespace vnfp::detail
