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

#include "vnfp/rfpa.hpp"

#include <algorithm>
#include <optional>

#include "vnfp/detail/placement.hpp"
#include "vnfp/error.hpp"
#include "vnfp/rng.hpp"

namespace vnfp {

namespace {

using detail::NodeMask;

// Every VNF has a host on `p`, and each host of VNF v on it comes after a
// host of VNF v-1.
bool admissible(const Path& p, const std::vector<std::vector<NodeId>>& hosts) {
  std::vector<int> firstSeen(hosts.size(), -1);
  for (std::size_t pos = 0; pos < p.nodes.size(); ++pos) {
    for (std::size_t v = 0; v < hosts.size(); ++v) {
      if (std::find(hosts[v].begin(), hosts[v].end(), p.nodes[pos]) == hosts[v].end()) continue;
      if (v > 0 && firstSeen[v - 1] < 0) return false;
      if (firstSeen[v] < 0) firstSeen[v] = static_cast<int>(pos);
    }
  }
  return std::all_of(firstSeen.begin(), firstSeen.end(), [](int f) { return f >= 0; });
}

bool sharesReplicaHost(const Path& a, const Path& b, const ServiceChain& chain,
                       const std::vector<std::vector<NodeId>>& hosts) {
  for (std::size_t v = 0; v < hosts.size(); ++v) {
    if (!chain.vnfs[v].replicable) continue;
    for (NodeId h : hosts[v]) {
      if (a.contains(h) && b.contains(h)) return true;
    }
  }
  return false;
}

// One placement draw. The anchor and the first host of every VNF are drawn
// together and the draw is rejected unless some catalog path is admissible for
// them. Replica hosts then come round by round, each uniform over the free
// nodes that lie on a path admissible once the replica is added; a VNF with no
// such node gets no further replica. Every random choice comes from the
// attempt's own stream in a fixed order, so a draw with a larger rMax extends
// the draw with a smaller one.
std::optional<ChainSolution> drawChain(const Network& net, const ServiceChain& chain, const NodeMask& used,
                                       Rng& rng, Rng& routing) {
  const NodeId anchor = nodeAt(rng.below(net.nodeCount()));
  if (anchor == chain.egress || used.test(anchor)) return std::nullopt;
  const auto catalog = net.paths(anchor, chain.egress);
  if (catalog.empty()) return std::nullopt;
  std::vector<std::uint64_t> keys(catalog.size());
  for (auto& k : keys) k = rng.next();

  NodeMask taken = used;
  taken.set(anchor);
  std::vector<NodeId> pool;
  for (std::size_t i = 0; i < net.nodeCount(); ++i) {
    if (!taken.test(nodeAt(i))) pool.push_back(nodeAt(i));
  }
  std::vector<std::vector<NodeId>> hosts(chain.vnfs.size());
  hosts[0] = {anchor};
  for (std::size_t v = 1; v < chain.vnfs.size(); ++v) {
    if (pool.empty()) return std::nullopt;
    const std::size_t pick = rng.below(pool.size());
    hosts[v].push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  const bool anyAdmissible =
      std::any_of(catalog.begin(), catalog.end(), [&](const Path& p) { return admissible(p, hosts); });
  if (!anyAdmissible) return std::nullopt;

  std::size_t rounds = 0;
  for (std::size_t v = 1; v < chain.vnfs.size(); ++v) rounds = std::max(rounds, chain.hostLimit(v));
  for (std::size_t j = 1; j < rounds; ++j) {
    for (std::size_t v = 1; v < chain.vnfs.size(); ++v) {
      if (j >= chain.hostLimit(v)) continue;
      std::vector<std::size_t> fits;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        hosts[v].push_back(pool[i]);
        const bool fit = std::any_of(catalog.begin(), catalog.end(),
                                     [&](const Path& p) { return p.contains(pool[i]) && admissible(p, hosts); });
        hosts[v].pop_back();
        if (fit) fits.push_back(i);
      }
      if (fits.empty()) continue;
      const std::size_t pick = fits[rng.below(fits.size())];
      hosts[v].push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (admissible(catalog[i], hosts)) keyed.emplace_back(keys[i], i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Path> chosen;
  for (const auto& [key, i] : keyed) {
    if (chosen.size() == chain.rMax + 1) break;
    const Path& p = catalog[i];
    const bool clash = std::any_of(chosen.begin(), chosen.end(),
                                   [&](const Path& q) { return sharesReplicaHost(p, q, chain, hosts); });
    if (!clash) chosen.push_back(p);
  }

  ChainSolution cs;
  for (auto& hv : hosts) {
    std::vector<NodeId> kept;
    for (NodeId h : hv) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](const Path& p) { return p.contains(h); })) kept.push_back(h);
    }
    cs.placements.push_back(std::move(kept));
  }
  for (std::size_t d = 0; d < chain.demands.size(); ++d) {
    cs.demandPaths.push_back(chosen[static_cast<std::size_t>(routing.unit() * static_cast<double>(chosen.size()))]);
  }
  cs.selectedPaths = std::move(chosen);
  return cs;
}

}  // namespace

RfpaResult runRfpa(const Network& net, const CostFunctionSet& costSet, std::span<const ServiceChain> chains,
                   std::span<const double> backgroundLoad, std::uint64_t seed, std::size_t maxAttempts) {
  if (backgroundLoad.size() != net.linkCount()) throw Error("background load vector does not match the link count");
  NodeMask used = detail::gatewayMask(net, chains);
  RfpaResult result;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const ServiceChain& chain = chains[c];
    chain.check();
    const std::uint64_t chainSeed = deriveSeed(seed, c);
    Rng routing(deriveSeed(chainSeed, maxAttempts));
    std::optional<ChainSolution> cs;
    for (std::size_t attempt = 0; attempt < maxAttempts && !cs; ++attempt) {
      ++result.attempts;
      Rng rng(deriveSeed(chainSeed, attempt));
      cs = drawChain(net, chain, used, rng, routing);
    }
    if (!cs) {
      throw InfeasibleError("random placement found no valid layout for chain '" + chain.id + "' in " +
                            std::to_string(maxAttempts) + " attempts");
    }
    for (const auto& hv : cs->placements) {
      for (NodeId h : hv) used.set(h);
    }
    result.solution.chains.push_back(std::move(*cs));
  }
  result.cost = objective(net, costSet,
                          LoadLedger{std::vector<double>(backgroundLoad.begin(), backgroundLoad.end()),
                                     chainLoads(net, chains, result.solution)});
  return result;
}

}  // namespace vnfp
