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

// Helpers shared by the RA solvers: node masks, chain candidate paths and
// placement enumeration along a fixed set of paths.

#include <cstdint>
#include <span>
#include <vector>

#include "vnfp/solution.hpp"
#include "vnfp/topology.hpp"
#include "vnfp/traffic.hpp"

namespace vnfp::detail {

class NodeMask {
 public:
  NodeMask() = default;
  explicit NodeMask(std::size_t nodes) : words_((nodes + 63) / 64, 0) {}

  void set(NodeId n) { words_[index(n) / 64] |= std::uint64_t{1} << (index(n) % 64); }
  void reset(NodeId n) { words_[index(n) / 64] &= ~(std::uint64_t{1} << (index(n) % 64)); }
  bool test(NodeId n) const { return (words_[index(n) / 64] >> (index(n) % 64)) & 1U; }

  bool intersects(const NodeMask& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  NodeMask& operator|=(const NodeMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  bool operator==(const NodeMask&) const = default;
  auto operator<=>(const NodeMask&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Nodes that are the border gateway of some chain; they host no VNF.
NodeMask gatewayMask(const Network& net, std::span<const ServiceChain> chains);

/// Catalog paths that end at the chain's egress, start at a non-gateway node
/// and have enough free interior nodes for the chain's VNFs after the anchor.
std::vector<Path> chainCandidatePaths(const Network& net, const ServiceChain& chain, const NodeMask& gateways);

/// Hosts for every VNF of a chain and the set of nodes they occupy.
struct ChainPlacement {
  std::vector<std::vector<NodeId>> hosts;
  NodeMask used;
};

/// Every placement of `chain` that makes all of `paths` (same origin, ending
/// at the egress) valid at once: the anchor sits on the common origin, each
/// path visits one host per VNF in order, hosts of replicable VNFs lie on a
/// single selected path, no node hosts two VNFs and gateways host none.
/// Placements occupying the same node set are reported once.
std::vector<ChainPlacement> enumerateChainPlacements(const Network& net, const ServiceChain& chain,
                                                     std::span<const Path> paths, const NodeMask& gateways);

}  // namespace vnfp::detail
