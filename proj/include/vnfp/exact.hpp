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

#include "vnfp/cost_model.hpp"
#include "vnfp/solution.hpp"
#include "vnfp/topology.hpp"
#include "vnfp/traffic.hpp"

namespace vnfp {

struct SearchBudget {
  std::uint64_t maxNodesExplored = 200'000'000;
  double timeLimitSeconds = 1800.0;
  /// Throw BudgetExhausted instead of returning an unproven incumbent.
  bool optimalityRequired = false;
};

template <typename Solution>
struct ExactResult {
  Solution solution;
  double cost = 0.0;
  bool provenOptimal = false;
  std::uint64_t explored = 0;
  double elapsedSeconds = 0.0;
};

using TeExactResult = ExactResult<TeSolution>;
using RaExactResult = ExactResult<RaSolution>;

/// Optimal background routing over the path catalog by depth-first
/// branch-and-bound. Demands are branched in decreasing bandwidth order; the
/// bound is the cost of the loads fixed so far, which never overestimates
/// because link costs are non-decreasing in load.
///
/// Throws InfeasibleError when a demand has no candidate path.
TeExactResult solveTeExact(const Network& net, const CostFunctionSet& costSet, std::span<const Demand> demands,
                           const SearchBudget& budget = {});

/// Optimal joint choice of anchor location, selected paths (at most rMax + 1
/// per chain), VNF placement and demand-to-path assignment, on top of fixed
/// background loads.
///
/// Chains are branched in order; for each chain the path subsets are tried by
/// increasing cardinality, then the split of its demands over the subset.
/// Demands of equal bandwidth are interchangeable, so only their counts per
/// path are enumerated. Placement does not change the cost; it only decides
/// feasibility and is resolved per subset. Pruning uses the cost of the fixed
/// loads plus, for every chain still open, its smallest standalone cost
/// increase (valid because per-link costs are convex and start at zero).
///
/// Throws InfeasibleError naming the first chain that cannot be placed.
RaExactResult solveRaExact(const Network& net, const CostFunctionSet& costSet, std::span<const ServiceChain> chains,
                           std::span<const double> fixedBackgroundLoad, const SearchBudget& budget = {});

}  // namespace vnfp
