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

// Brute-force references used to check the solvers. They share no search
// code with the library: constraints are re-stated here from the model and
// the objective is summed directly from the cost pieces.

#include <optional>
#include <span>
#include <vector>

#include "vnfp/cost_model.hpp"
#include "vnfp/topology.hpp"
#include "vnfp/traffic.hpp"

namespace vnfp::testing {

/// Sum over links of max over pieces, links in index order.
double referenceCost(const Network& net, const CostFunctionSet& set, std::span<const double> load);

/// Minimum objective over every background routing in the catalog.
double exhaustiveTeOptimum(const Network& net, const CostFunctionSet& set, std::span<const Demand> demands);

/// Minimum objective over every joint choice of anchor, selected paths, host
/// sets and demand-to-path assignment for all chains; nullopt if none is
/// feasible. Intended for networks of at most ~8 nodes.
std::optional<double> exhaustiveRaOptimum(const Network& net, const CostFunctionSet& set,
                                          std::span<const ServiceChain> chains,
                                          std::span<const double> backgroundLoad);

/// Every simple path between two nodes, by plain depth-first search over the link list.
std::vector<std::vector<NodeId>> allSimplePaths(const Network& net, NodeId src, NodeId dst);

}  // namespace vnfp::testing
