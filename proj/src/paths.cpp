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

#include <algorithm>
#include <deque>
#include <limits>

#include "vnfp/error.hpp"
#include "vnfp/topology.hpp"

namespace vnfp {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Depth-first walk collecting simple paths of exactly `hops` links, visiting
// neighbours in name order so results come out lexicographically sorted.
class ExactLengthWalker {
 public:
  ExactLengthWalker(const Network& net, NodeId dst, const std::vector<std::size_t>& distToDst,
                    std::size_t hops, std::size_t limit, std::vector<Path>& out)
      : net_(net), dst_(dst), dist_(distToDst), hops_(hops), limit_(limit), out_(out),
        onPath_(net.nodeCount(), false) {}

  void run(NodeId src) {
    stack_.push_back(src);
    onPath_[index(src)] = true;
    visit(src);
  }

 private:
  void visit(NodeId u) {
    if (out_.size() >= limit_) return;
    const std::size_t depth = stack_.size() - 1;
    if (u == dst_) {
      if (depth == hops_) out_.push_back(net_.makePath(stack_));
      return;
    }
    for (NodeId v : net_.neighbors(u)) {
      if (onPath_[index(v)]) continue;
      if (dist_[index(v)] == kUnreachable || depth + 1 + dist_[index(v)] > hops_) continue;
      stack_.push_back(v);
      onPath_[index(v)] = true;
      visit(v);
      onPath_[index(v)] = false;
      stack_.pop_back();
      if (out_.size() >= limit_) return;
    }
  }

  const Network& net_;
  NodeId dst_;
  const std::vector<std::size_t>& dist_;
  std::size_t hops_;
  std::size_t limit_;
  std::vector<Path>& out_;
  std::vector<bool> onPath_;
  std::vector<NodeId> stack_;
};

}  // namespace

std::vector<std::size_t> hopDistances(const Network& net, NodeId src) {
  std::vector<std::size_t> dist(net.nodeCount(), kUnreachable);
  std::deque<NodeId> queue{src};
  dist[index(src)] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : net.neighbors(u)) {
      if (dist[index(v)] != kUnreachable) continue;
      dist[index(v)] = dist[index(u)] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

std::size_t hopDiameter(const Network& net) {
  std::size_t diameter = 0;
  for (std::size_t i = 0; i < net.nodeCount(); ++i) {
    for (std::size_t d : hopDistances(net, nodeAt(i))) {
      if (d != kUnreachable) diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

std::size_t defaultMaxHops(const Network& net) { return hopDiameter(net) + 2; }

std::vector<Path> enumeratePaths(const Network& net, NodeId src, NodeId dst, std::size_t k,
                                 std::size_t maxHops) {
  if (src == dst) throw Error("path enumeration needs distinct endpoints");
  if (index(src) >= net.nodeCount() || index(dst) >= net.nodeCount()) {
    throw Error("path enumeration endpoint is not a node of the network");
  }
  std::vector<Path> out;
  if (k == 0) return out;
  const auto dist = hopDistances(net, dst);
  if (dist[index(src)] == kUnreachable) return out;
  for (std::size_t hops = dist[index(src)]; hops <= maxHops && out.size() < k; ++hops) {
    ExactLengthWalker(net, dst, dist, hops, k, out).run(src);
  }
  return out;
}

CatalogBuild buildPathCatalog(const Network& net, std::span<const NodePair> pairs, std::size_t k,
                              std::size_t maxHops) {
  CatalogBuild result{net, {}};
  for (const auto& [src, dst] : pairs) {
    auto found = enumeratePaths(net, src, dst, k, maxHops);
    if (found.empty()) {
      result.warnings.push_back("no path from '" + net.nodeName(src) + "' to '" + net.nodeName(dst) +
                                "' within " + std::to_string(maxHops) + " hops");
    }
    result.network.setPaths(src, dst, std::move(found));
  }
  return result;
}

std::vector<NodePair> allOrderedPairs(const Network& net) {
  std::vector<NodePair> pairs;
  for (std::size_t i = 0; i < net.nodeCount(); ++i) {
    for (std::size_t j = 0; j < net.nodeCount(); ++j) {
      if (i != j) pairs.emplace_back(nodeAt(i), nodeAt(j));
    }
  }
  return pairs;
}

}  // namespace vnfp
