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

#include "vnfp/detail/placement.hpp"

#include <algorithm>
#include <set>

namespace vnfp::detail {

NodeMask gatewayMask(const Network& net, std::span<const ServiceChain> chains) {
  NodeMask mask(net.nodeCount());
  for (const auto& c : chains) mask.set(c.egress);
  return mask;
}

std::vector<Path> chainCandidatePaths(const Network& net, const ServiceChain& chain, const NodeMask& gateways) {
  std::vector<Path> out;
  const std::size_t needed = chain.vnfs.size() - 1;
  for (std::size_t i = 0; i < net.nodeCount(); ++i) {
    const NodeId origin = nodeAt(i);
    if (origin == chain.egress || gateways.test(origin)) continue;
    for (const Path& p : net.paths(origin, chain.egress)) {
      std::size_t free = 0;
      for (std::size_t pos = 1; pos + 1 < p.nodes.size(); ++pos) free += gateways.test(p.nodes[pos]) ? 0 : 1;
      if (free >= needed) out.push_back(p);
    }
  }
  return out;
}

namespace {

class PlacementEnumerator {
 public:
  PlacementEnumerator(const Network& net, const ServiceChain& chain, std::span<const Path> paths,
                      const NodeMask& gateways)
      : chain_(chain), paths_(paths), gateways_(gateways), used_(net.nodeCount()),
        lastPos_(paths.size(), 0), hosts_(chain.vnfs.size()) {}

  std::vector<ChainPlacement> run() {
    if (paths_.empty()) return {};
    const NodeId anchor = paths_.front().source();
    for (const Path& p : paths_) {
      if (p.source() != anchor || p.target() != chain_.egress) return {};
    }
    if (gateways_.test(anchor)) return {};
    used_.set(anchor);
    hosts_[0] = {anchor};
    placeVnf(1);
    return std::move(out_);
  }

 private:
  bool onOtherPath(NodeId n, std::size_t self) const {
    for (std::size_t j = 0; j < paths_.size(); ++j) {
      if (j != self && paths_[j].contains(n)) return true;
    }
    return false;
  }

  bool freeNode(NodeId n) const { return !used_.test(n) && !gateways_.test(n); }

  void placeVnf(std::size_t v) {
    if (v == chain_.vnfs.size()) {
      if (seen_.insert(used_).second) out_.push_back({hosts_, used_});
      return;
    }
    if (chain_.vnfs[v].replicable) {
      placeReplica(v, 0);
    } else {
      placeShared(v);
    }
  }

  // A replicable VNF gets its own host on every path.
  void placeReplica(std::size_t v, std::size_t pathIdx) {
    if (pathIdx == paths_.size()) {
      placeVnf(v + 1);
      return;
    }
    const Path& p = paths_[pathIdx];
    const std::size_t saved = lastPos_[pathIdx];
    for (std::size_t pos = saved + 1; pos + 1 < p.nodes.size(); ++pos) {
      const NodeId n = p.nodes[pos];
      if (!freeNode(n) || onOtherPath(n, pathIdx)) continue;
      used_.set(n);
      hosts_[v].push_back(n);
      lastPos_[pathIdx] = pos;
      placeReplica(v, pathIdx + 1);
      lastPos_[pathIdx] = saved;
      hosts_[v].pop_back();
      used_.reset(n);
    }
  }

  // A non-replicable VNF has a single host that every path must visit.
  void placeShared(std::size_t v) {
    const Path& first = paths_.front();
    for (std::size_t pos = lastPos_[0] + 1; pos + 1 < first.nodes.size(); ++pos) {
      const NodeId n = first.nodes[pos];
      if (!freeNode(n)) continue;
      std::vector<std::size_t> positions(paths_.size());
      bool ok = true;
      for (std::size_t j = 0; j < paths_.size() && ok; ++j) {
        auto at = paths_[j].position(n);
        ok = at && *at > lastPos_[j] && *at + 1 < paths_[j].nodes.size();
        if (ok) positions[j] = *at;
      }
      if (!ok) continue;
      const auto saved = lastPos_;
      used_.set(n);
      hosts_[v] = {n};
      lastPos_ = positions;
      placeVnf(v + 1);
      lastPos_ = saved;
      hosts_[v].clear();
      used_.reset(n);
    }
  }

  const ServiceChain& chain_;
  std::span<const Path> paths_;
  const NodeMask& gateways_;
  NodeMask used_;
  std::vector<std::size_t> lastPos_;
  std::vector<std::vector<NodeId>> hosts_;
  std::set<NodeMask> seen_;
  std::vector<ChainPlacement> out_;
};

}  // namespace

std::vector<ChainPlacement> enumerateChainPlacements(const Network& net, const ServiceChain& chain,
                                                     std::span<const Path> paths, const NodeMask& gateways) {
  return PlacementEnumerator(net, chain, paths, gateways).run();
}

}  // namespace vnfp::detail
