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

struct RfpaResult {
  RaSolution solution;
  double cost = 0.0;
  std::size_t attempts = 0;  ///< placement draws over all chains
};

/// Random placement baseline. Per chain: the anchor and one host per further
/// VNF are drawn uniformly from the free nodes, and the draw is rejected unless
/// some catalog path from the anchor to the egress is admissible for them.
/// Replicable VNFs then get up to rMax extra hosts, each uniform over the free
/// nodes lying on a path admissible with it. Up to rMax + 1 admissible paths
/// are kept in random order (skipping any that would share a replica host
/// with a kept one) and each demand takes one of them at random. Hosts left
/// off every kept path are released.
///
/// Throws InfeasibleError after `maxAttempts` fruitless draws for one chain.
RfpaResult runRfpa(const Network& net, const CostFunctionSet& costSet, std::span<const ServiceChain> chains,
                   std::span<const double> backgroundLoad, std::uint64_t seed, std::size_t maxAttempts = 10'000);

}  // namespace vnfp
