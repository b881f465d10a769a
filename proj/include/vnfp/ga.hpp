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
#include <span>
#include <string>
#include <vector>

#include "vnfp/cost_model.hpp"
#include "vnfp/solution.hpp"
#include "vnfp/topology.hpp"
#include "vnfp/traffic.hpp"

namespace vnfp {

struct GaParams {
  std::size_t populationSize = 100;
  std::size_t generations = 200;
  std::size_t tournamentSize = 3;
  double crossoverRate = 0.9;
  /// Per-gene mutation probability; a negative value means 1 / chromosome length.
  double mutationRate = -1.0;
  std::size_t eliteCount = 2;
  std::uint64_t seed = 1;
  /// Fitness evaluation workers. Results do not depend on this.
  std::size_t threads = 1;

  /// Throws Error when a field is out of range.
  void check() const;
  bool operator==(const GaParams&) const = default;
};

struct GaTracePoint {
  std::size_t generation = 0;
  double bestCost = 0.0;
  double meanCost = 0.0;
};

/// CSV with columns generation,bestCost,meanCost.
std::string traceCsv(std::span<const GaTracePoint> trace);

struct TeGaResult {
  TeSolution solution;
  double cost = 0.0;
  std::vector<GaTracePoint> trace;
};

struct RaGaResult {
  RaSolution solution;
  double cost = 0.0;
  std::vector<GaTracePoint> trace;
};

struct RrGaResult {
  RaSolution solution;
  double cost = 0.0;
  std::vector<std::size_t> replicaCounts;         ///< per chain
  std::vector<std::vector<GaTracePoint>> traces;  ///< one per replica level tried
};

/// Background routing. One gene per demand selects its candidate path.
TeGaResult runTeGa(const Network& net, const CostFunctionSet& costSet, std::span<const Demand> demands,
                   const GaParams& params);

/// Places each chain's original VNFs on one path. Genes per chain: the path
/// (any catalog path ending at the egress; its origin hosts the anchor) and a
/// position for every further VNF. Positions that break ordering or node
/// exclusivity are moved to the nearest legal position; a path with no legal
/// embedding is replaced by the next candidate.
///
/// Throws InfeasibleError if a chain cannot be placed at all.
RaGaResult runRaGa(const Network& net, const CostFunctionSet& costSet, std::span<const ServiceChain> chains,
                   std::span<const double> backgroundLoad, const GaParams& params);

/// Adds replica sets one level at a time on top of `base`. Level r evolves,
/// per chain, an alternative path from the anchor plus host positions for the
/// replicable VNFs (or no replica), with the chain's demands re-spread
/// greedily over its paths. A level is kept only if it lowers the cost by more
/// than 1e-9; the loop stops at the first level that does not, or at rMax.
RrGaResult runRrGa(const Network& net, const CostFunctionSet& costSet, std::span<const ServiceChain> chains,
                   std::span<const double> backgroundLoad, const RaSolution& base, const GaParams& params);

}  // namespace vnfp
