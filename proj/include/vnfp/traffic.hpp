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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnfp/topology.hpp"

namespace vnfp {

/// Node-to-node background demand (Mbps).
struct Demand {
  std::string id;
  NodeId source{};
  NodeId destination{};
  double bandwidth = 0.0;

  bool operator==(const Demand&) const = default;
};

/// Chain demand template: it leaves from wherever the chain's anchor VNF is
/// placed and ends at the chain's egress.
struct ChainDemand {
  std::string id;
  double bandwidth = 0.0;

  bool operator==(const ChainDemand&) const = default;
};

struct Vnf {
  std::size_t index = 0;
  bool replicable = false;

  bool operator==(const Vnf&) const = default;
};

/// Ordered VNFs; vnfs[0] is the non-replicable anchor that sources the
/// chain's traffic, egress is the fixed border gateway.
struct ServiceChain {
  std::string id;
  std::vector<Vnf> vnfs;
  NodeId egress{};
  std::vector<ChainDemand> demands;
  std::size_t rMax = 0;

  /// Maximum number of hosts VNF `v` may occupy.
  std::size_t hostLimit(std::size_t v) const { return 1 + (vnfs.at(v).replicable ? rMax : 0); }
  double totalBandwidth() const;
  /// Throws Error when the chain breaks its structural invariants.
  void check() const;

  bool operator==(const ServiceChain&) const = default;
};

struct TrafficProfile {
  std::size_t connectionCount = 30;
  double bgBandwidthMax = 160.0;  ///< background bandwidths are drawn from (0, max]
  double dcBandwidth = 35.0;      ///< bandwidth of every chain demand
  std::size_t demandsPerChain = 45;
  std::uint64_t seed = 1;

  bool operator==(const TrafficProfile&) const = default;
};

/// `connectionCount` distinct ordered node pairs with bandwidths uniform over
/// (0, bgBandwidthMax]. Deterministic for a fixed seed.
std::vector<Demand> generateBackgroundTraffic(const Network& net, const TrafficProfile& profile);

/// `chainCount` chains with distinct random egress nodes. VNF 0 is the anchor,
/// VNFs 1.. are replicable; each chain has demandsPerChain demands of
/// dcBandwidth Mbps.
std::vector<ServiceChain> buildServiceChains(const Network& net, std::size_t chainCount, std::size_t vnfsPerChain,
                                             const TrafficProfile& profile, std::uint64_t seed,
                                             std::size_t rMax = 0);

std::vector<ServiceChain> withReplicaBudget(std::vector<ServiceChain> chains, std::size_t rMax);

/// Per-topology evaluation parameters (size, connection count, chain and
/// background bandwidths) used by the experiment harness.
struct TopologyProfile {
  std::string_view name;
  std::size_t nodes;
  std::size_t links;
  std::size_t connections;
  double dcBandwidth;
  double bgBandwidthMax;
};

std::span<const TopologyProfile> evaluationProfiles();
std::optional<TopologyProfile> findProfile(std::string_view topologyName);

}  // namespace vnfp
