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

#include "vnfp/traffic.hpp"

#include <array>
#include <numeric>

#include "vnfp/error.hpp"
#include "vnfp/rng.hpp"

namespace vnfp {

double ServiceChain::totalBandwidth() const {
  double total = 0.0;
  for (const auto& d : demands) total += d.bandwidth;
  return total;
}

void ServiceChain::check() const {
  if (vnfs.empty()) throw Error("chain '" + id + "' has no VNFs");
  if (vnfs.front().replicable) throw Error("chain '" + id + "': the anchor VNF cannot be replicable");
  for (std::size_t v = 0; v < vnfs.size(); ++v) {
    if (vnfs[v].index != v) throw Error("chain '" + id + "': VNF indices must be 0.." + std::to_string(vnfs.size() - 1));
  }
  for (const auto& d : demands) {
    if (!(d.bandwidth > 0.0)) throw Error("chain '" + id + "': demand '" + d.id + "' has non-positive bandwidth");
  }
}

std::vector<Demand> generateBackgroundTraffic(const Network& net, const TrafficProfile& profile) {
  if (profile.connectionCount == 0) return {};
  if (net.nodeCount() < 2) throw Error("background traffic needs at least two nodes");
  if (!(profile.bgBandwidthMax > 0.0)) throw Error("background bandwidth bound must be positive");
  auto pairs = allOrderedPairs(net);
  if (profile.connectionCount > pairs.size()) {
    throw Error("requested " + std::to_string(profile.connectionCount) + " connections but only " +
                std::to_string(pairs.size()) + " ordered node pairs exist");
  }
  Rng rng(profile.seed);
  std::vector<Demand> demands;
  demands.reserve(profile.connectionCount);
  for (std::size_t i = 0; i < profile.connectionCount; ++i) {
    std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
    // 1 - unit() lies in (0, 1], so the bandwidth lies in (0, max].
    const double bandwidth = profile.bgBandwidthMax * (1.0 - rng.unit());
    demands.push_back(Demand{"bg" + std::to_string(i), pairs[i].first, pairs[i].second, bandwidth});
  }
  return demands;
}

std::vector<ServiceChain> buildServiceChains(const Network& net, std::size_t chainCount, std::size_t vnfsPerChain,
                                             const TrafficProfile& profile, std::uint64_t seed, std::size_t rMax) {
  if (chainCount == 0) throw Error("at least one service chain is required");
  if (vnfsPerChain == 0) throw Error("a service chain needs at least one VNF");
  if (chainCount > net.nodeCount()) {
    throw Error("cannot give " + std::to_string(chainCount) + " chains distinct egress nodes in a " +
                std::to_string(net.nodeCount()) + "-node network");
  }
  if (!(profile.dcBandwidth > 0.0)) throw Error("chain demand bandwidth must be positive");

  Rng rng(seed);
  std::vector<std::size_t> order(net.nodeCount());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<ServiceChain> chains;
  for (std::size_t s = 0; s < chainCount; ++s) {
    std::swap(order[s], order[s + rng.below(order.size() - s)]);
    ServiceChain chain;
    chain.id = "s" + std::to_string(s);
    chain.egress = nodeAt(order[s]);
    chain.rMax = rMax;
    for (std::size_t v = 0; v < vnfsPerChain; ++v) chain.vnfs.push_back(Vnf{v, v > 0});
    for (std::size_t d = 0; d < profile.demandsPerChain; ++d) {
      chain.demands.push_back(ChainDemand{chain.id + "d" + std::to_string(d), profile.dcBandwidth});
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<ServiceChain> withReplicaBudget(std::vector<ServiceChain> chains, std::size_t rMax) {
  for (auto& c : chains) c.rMax = rMax;
  return chains;
}

namespace {

constexpr std::array<TopologyProfile, 5> kProfiles{{
    {"nobel-us", 14, 21, 30, 35.0, 160.0},
    {"janos-us", 26, 84, 30, 45.0, 50.0},
    {"janos-us-ca", 39, 122, 25, 50.0, 30.0},
    {"germany50", 50, 88, 25, 35.0, 35.0},
    {"ta2", 65, 108, 20, 45.0, 20.0},
}};

}  // namespace

std::span<const TopologyProfile> evaluationProfiles() { return kProfiles; }

std::optional<TopologyProfile> findProfile(std::string_view topologyName) {
  for (const auto& p : kProfiles) {
    if (p.name == topologyName) return p;
  }
  return std::nullopt;
}

}  // namespace vnfp
