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

// Small hand-built networks and chains shared by the unit and acceptance tests.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "vnfp/topology.hpp"
#include "vnfp/traffic.hpp"

namespace vnfp::testing {

using Edge = std::pair<std::string, std::string>;

inline Network makeNetwork(std::initializer_list<std::string> nodes, std::initializer_list<Edge> edges,
                           double capacity = 100.0) {
  Network net;
  for (const auto& n : nodes) net.addNode(n);
  for (const auto& [a, b] : edges) net.addLink(a + "-" + b, net.node(a), net.node(b), capacity);
  return net;
}

inline Network withCatalog(const Network& net, std::size_t k = 5) {
  return buildPathCatalog(net, allOrderedPairs(net), k, defaultMaxHops(net)).network;
}

/// S -> {A, B} -> G: two node-disjoint two-hop routes.
inline Network diamond(double capacity = 100.0) {
  return withCatalog(makeNetwork({"S", "A", "B", "G"}, {{"S", "A"}, {"S", "B"}, {"A", "G"}, {"B", "G"}}, capacity));
}

/// VNF 0 is the anchor; VNFs 1.. are replicable unless `replicable` is false.
inline ServiceChain makeChain(const Network& net, std::string id, const std::string& egress, std::size_t vnfs,
                              std::vector<double> demandBandwidths, std::size_t rMax, bool replicable = true) {
  ServiceChain c;
  c.id = std::move(id);
  c.egress = net.node(egress);
  c.rMax = rMax;
  for (std::size_t v = 0; v < vnfs; ++v) c.vnfs.push_back(Vnf{v, v > 0 && replicable});
  for (std::size_t d = 0; d < demandBandwidths.size(); ++d) {
    c.demands.push_back(ChainDemand{c.id + "d" + std::to_string(d), demandBandwidths[d]});
  }
  return c;
}

inline Path pathOf(const Network& net, std::initializer_list<std::string> names) {
  std::vector<NodeId> nodes;
  for (const auto& n : names) nodes.push_back(net.node(n));
  return net.makePath(nodes);
}

}  // namespace vnfp::testing
