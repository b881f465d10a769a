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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vnfp {

enum class NodeId : std::uint32_t {};
enum class LinkId : std::uint32_t {};

constexpr std::size_t index(NodeId n) noexcept { return static_cast<std::size_t>(n); }
constexpr std::size_t index(LinkId l) noexcept { return static_cast<std::size_t>(l); }
constexpr NodeId nodeAt(std::size_t i) noexcept { return static_cast<NodeId>(i); }
constexpr LinkId linkAt(std::size_t i) noexcept { return static_cast<LinkId>(i); }

/// Undirected link; capacity in Mbps.
struct Link {
  std::string id;
  NodeId a{};
  NodeId b{};
  double capacity = 0.0;

  NodeId other(NodeId n) const noexcept { return n == a ? b : a; }
  bool operator==(const Link&) const = default;
};

/// A simple path. links[i] joins nodes[i] and nodes[i + 1].
struct Path {
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;

  std::size_t hops() const noexcept { return links.size(); }
  NodeId source() const { return nodes.front(); }
  NodeId target() const { return nodes.back(); }
  bool contains(NodeId n) const noexcept;
  bool traverses(LinkId l) const noexcept;
  /// Position of `n` along the path, if present.
  std::optional<std::size_t> position(NodeId n) const noexcept;

  bool operator==(const Path&) const = default;
};

using NodePair = std::pair<NodeId, NodeId>;
using PathCatalog = std::map<NodePair, std::vector<Path>>;

/// Nodes, undirected links and the candidate path catalog shared by all solvers.
///
/// Built incrementally through addNode/addLink, then treated as an immutable
/// value: solvers only ever take it by const reference.
class Network {
 public:
  NodeId addNode(std::string id);
  LinkId addLink(std::string id, NodeId a, NodeId b, double capacity);

  std::size_t nodeCount() const noexcept { return names_.size(); }
  std::size_t linkCount() const noexcept { return links_.size(); }

  const std::string& nodeName(NodeId n) const { return names_.at(index(n)); }
  std::optional<NodeId> findNode(std::string_view name) const;
  /// Like findNode but throws Error for unknown names.
  NodeId node(std::string_view name) const;

  const Link& link(LinkId l) const { return links_.at(index(l)); }
  std::span<const Link> links() const noexcept { return links_; }
  std::optional<LinkId> linkBetween(NodeId a, NodeId b) const;

  /// Adjacent nodes ordered by node name, so traversals are lexicographic.
  std::span<const NodeId> neighbors(NodeId n) const { return adjacency_.at(index(n)); }

  std::vector<double> capacities() const;
  void setUniformCapacity(double mbps);

  /// Builds a Path from a node sequence; throws Error if it is not a simple
  /// walk over existing links.
  Path makePath(std::span<const NodeId> nodes) const;

  const PathCatalog& pathCatalog() const noexcept { return catalog_; }
  /// Candidate paths for an ordered pair; empty when none were enumerated.
  std::span<const Path> paths(NodeId src, NodeId dst) const;
  void setPaths(NodeId src, NodeId dst, std::vector<Path> paths);

  bool operator==(const Network& other) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> byName_;
  std::vector<Link> links_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::map<NodePair, LinkId> linkIndex_;
  PathCatalog catalog_;
};

// ---------------------------------------------------------------------------
// Path enumeration

/// Hop distances from `src` (SIZE_MAX for unreachable nodes).
std::vector<std::size_t> hopDistances(const Network& net, NodeId src);

/// Largest finite hop distance between any two nodes.
std::size_t hopDiameter(const Network& net);

/// Default hop bound for candidate paths: diameter + 2.
std::size_t defaultMaxHops(const Network& net);

/// Up to `k` loop-free paths from src to dst with at most `maxHops` links,
/// ordered by hop count and then lexicographically by node-name sequence.
std::vector<Path> enumeratePaths(const Network& net, NodeId src, NodeId dst,
                                 std::size_t k, std::size_t maxHops);

struct CatalogBuild {
  Network network;
  std::vector<std::string> warnings;
};

/// Returns a copy of `net` whose catalog holds enumeratePaths results for every
/// requested pair. Pairs without any path get an empty entry and a warning.
CatalogBuild buildPathCatalog(const Network& net, std::span<const NodePair> pairs,
                              std::size_t k, std::size_t maxHops);

std::vector<NodePair> allOrderedPairs(const Network& net);

// ---------------------------------------------------------------------------
// SNDlib native format

/// Reads the NODES and LINKS sections of an SNDlib native document. When
/// `capacityOverride` is set every link gets that capacity (Mbps).
Network parseSndlibNative(std::string_view text,
                          std::optional<double> capacityOverride = std::nullopt);

Network loadSndlibNative(const std::string& path,
                         std::optional<double> capacityOverride = std::nullopt);

/// Serializes nodes and links (capacity as pre-installed capacity).
std::string writeSndlibNative(const Network& net, std::string_view name = "network");

}  // namespace vnfp
