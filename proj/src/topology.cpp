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

#include "vnfp/topology.hpp"

#include <algorithm>
#include <set>

#include "vnfp/error.hpp"

namespace vnfp {

bool Path::contains(NodeId n) const noexcept {
  return std::find(nodes.begin(), nodes.end(), n) != nodes.end();
}

bool Path::traverses(LinkId l) const noexcept {
  return std::find(links.begin(), links.end(), l) != links.end();
}

std::optional<std::size_t> Path::position(NodeId n) const noexcept {
  auto it = std::find(nodes.begin(), nodes.end(), n);
  if (it == nodes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

namespace {

NodePair unordered(NodeId a, NodeId b) { return a < b ? NodePair{a, b} : NodePair{b, a}; }

}  // namespace

NodeId Network::addNode(std::string id) {
  if (id.empty()) throw Error("empty node identifier");
  if (byName_.contains(id)) throw Error("duplicate node '" + id + "'");
  const NodeId n = nodeAt(names_.size());
  byName_.emplace(id, n);
  names_.push_back(std::move(id));
  adjacency_.emplace_back();
  return n;
}

LinkId Network::addLink(std::string id, NodeId a, NodeId b, double capacity) {
  if (index(a) >= nodeCount() || index(b) >= nodeCount()) throw Error("link '" + id + "' has an unknown endpoint");
  if (a == b) throw Error("link '" + id + "' is a self-loop");
  if (!(capacity > 0.0)) throw Error("link '" + id + "' has non-positive capacity");
  const NodePair key = unordered(a, b);
  if (linkIndex_.contains(key)) {
    throw Error("duplicate link between '" + nodeName(a) + "' and '" + nodeName(b) + "'");
  }
  const LinkId l = linkAt(links_.size());
  links_.push_back(Link{std::move(id), a, b, capacity});
  linkIndex_.emplace(key, l);

  auto insertSorted = [this](std::vector<NodeId>& adj, NodeId n) {
    auto pos = std::lower_bound(adj.begin(), adj.end(), n, [this](NodeId x, NodeId y) {
      return names_[index(x)] < names_[index(y)];
    });
    adj.insert(pos, n);
  };
  insertSorted(adjacency_[index(a)], b);
  insertSorted(adjacency_[index(b)], a);
  return l;
}

std::optional<NodeId> Network::findNode(std::string_view name) const {
  auto it = byName_.find(std::string(name));
  if (it == byName_.end()) return std::nullopt;
  return it->second;
}

NodeId Network::node(std::string_view name) const {
  if (auto n = findNode(name)) return *n;
  throw Error("unknown node '" + std::string(name) + "'");
}

std::optional<LinkId> Network::linkBetween(NodeId a, NodeId b) const {
  auto it = linkIndex_.find(unordered(a, b));
  if (it == linkIndex_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> Network::capacities() const {
  std::vector<double> caps;
  caps.reserve(links_.size());
  for (const Link& l : links_) caps.push_back(l.capacity);
  return caps;
}

void Network::setUniformCapacity(double mbps) {
  if (!(mbps > 0.0)) throw Error("capacity override must be positive");
  for (Link& l : links_) l.capacity = mbps;
}

Path Network::makePath(std::span<const NodeId> nodes) const {
  if (nodes.size() < 2) throw Error("a path needs at least two nodes");
  Path p;
  p.nodes.assign(nodes.begin(), nodes.end());
  std::set<NodeId> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (index(nodes[i]) >= nodeCount()) throw Error("path references an unknown node");
    if (!seen.insert(nodes[i]).second) throw Error("path revisits node '" + nodeName(nodes[i]) + "'");
    if (i + 1 < nodes.size()) {
      auto l = linkBetween(nodes[i], nodes[i + 1]);
      if (!l) {
        throw Error("no link between '" + nodeName(nodes[i]) + "' and '" + nodeName(nodes[i + 1]) + "'");
      }
      p.links.push_back(*l);
    }
  }
  return p;
}

std::span<const Path> Network::paths(NodeId src, NodeId dst) const {
  auto it = catalog_.find({src, dst});
  if (it == catalog_.end()) return {};
  return it->second;
}

void Network::setPaths(NodeId src, NodeId dst, std::vector<Path> paths) {
  catalog_[{src, dst}] = std::move(paths);
}

bool Network::operator==(const Network& other) const {
  return names_ == other.names_ && links_ == other.links_ && catalog_ == other.catalog_;
}

}  // namespace vnfp
