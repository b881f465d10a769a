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

#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace vnfp::testing {

namespace {

using Mask = std::uint32_t;

Mask bit(NodeId n) { return Mask{1} << index(n); }

Mask nodesOf(const Path& p) {
  Mask m = 0;
  for (NodeId n : p.nodes) m |= bit(n);
  return m;
}

// The constraints a single chain's decisions must meet on their own.
bool chainValid(const ServiceChain& chain, const std::vector<const Path*>& paths, const std::vector<Mask>& hosts) {
  for (const Path* p : paths) {
    for (std::size_t v = 0; v < hosts.size(); ++v) {
      if ((nodesOf(*p) & hosts[v]) == 0) return false;  // every function on every path
    }
    for (std::size_t pos = 0; pos < p->nodes.size(); ++pos) {
      for (std::size_t v = 1; v < hosts.size(); ++v) {
        if (!(hosts[v] & bit(p->nodes[pos]))) continue;
        bool preceded = false;
        for (std::size_t q = 0; q < pos; ++q) preceded = preceded || (hosts[v - 1] & bit(p->nodes[q]));
        if (!preceded) return false;  // order along the path
      }
    }
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const Mask shared = nodesOf(*paths[i]) & nodesOf(*paths[j]);
      for (std::size_t v = 0; v < hosts.size(); ++v) {
        if (chain.vnfs[v].replicable && (shared & hosts[v])) return false;
      }
    }
  }
  return true;
}

// For every node set a chain can occupy, the distinct per-link load vectors
// its demands can produce.
std::map<Mask, std::set<std::vector<double>>> chainOptions(const Network& net, const ServiceChain& chain,
                                                           Mask gateways) {
  std::map<Mask, std::set<std::vector<double>>> out;
  const std::size_t n = net.nodeCount();
  for (std::size_t a = 0; a < n; ++a) {
    const NodeId anchor = nodeAt(a);
    if ((gateways & bit(anchor)) || anchor == chain.egress) continue;
    const auto catalog = net.paths(anchor, chain.egress);
    const std::size_t m = catalog.size();
    for (Mask subset = 1; subset < (Mask{1} << m); ++subset) {
      if (static_cast<std::size_t>(std::popcount(subset)) > chain.rMax + 1) continue;
      std::vector<const Path*> paths;
      Mask covered = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (subset & (Mask{1} << i)) {
          paths.push_back(&catalog[i]);
          covered |= nodesOf(catalog[i]);
        }
      }
      // Hosts off every selected path never help, so only covered nodes are tried.
      const Mask candidates = covered & ~gateways & ~bit(anchor);
      std::vector<Mask> hosts(chain.vnfs.size(), 0);
      hosts[0] = bit(anchor);

      std::function<void(std::size_t, Mask)> place = [&](std::size_t v, Mask used) {
        if (v == chain.vnfs.size()) {
          if (!chainValid(chain, paths, hosts)) return;
          auto& loads = out[used];
          std::vector<std::size_t> assign(chain.demands.size(), 0);
          while (true) {
            std::vector<double> load(net.linkCount(), 0.0);
            for (std::size_t d = 0; d < assign.size(); ++d) {
              for (LinkId l : paths[assign[d]]->links) load[index(l)] += chain.demands[d].bandwidth;
            }
            loads.insert(std::move(load));
            std::size_t d = 0;
            while (d < assign.size() && ++assign[d] == paths.size()) assign[d++] = 0;
            if (d == assign.size()) break;
          }
          return;
        }
        const Mask free = candidates & ~used;
        for (Mask h = free; h; h = (h - 1) & free) {
          if (static_cast<std::size_t>(std::popcount(h)) > chain.hostLimit(v)) continue;
          hosts[v] = h;
          place(v + 1, used | h);
        }
        hosts[v] = 0;
      };
      place(1, bit(anchor));
    }
  }
  return out;
}

}  // namespace

double referenceCost(const Network& net, const CostFunctionSet& set, std::span<const double> load) {
  const auto fs = set.functions();
  double total = 0.0;
  for (std::size_t i = 0; i < net.linkCount(); ++i) {
    const double u = load[i] / net.link(linkAt(i)).capacity;
    double best = fs[0].slope * u - fs[0].intercept;
    for (std::size_t j = 1; j < fs.size(); ++j) best = std::max(best, fs[j].slope * u - fs[j].intercept);
    total += best;
  }
  return total;
}

double exhaustiveTeOptimum(const Network& net, const CostFunctionSet& set, std::span<const Demand> demands) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> load(net.linkCount(), 0.0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == demands.size()) {
      best = std::min(best, referenceCost(net, set, load));
      return;
    }
    for (const Path& p : net.paths(demands[i].source, demands[i].destination)) {
      for (LinkId l : p.links) load[index(l)] += demands[i].bandwidth;
      go(i + 1);
      for (LinkId l : p.links) load[index(l)] -= demands[i].bandwidth;
    }
  };
  go(0);
  return best;
}

std::optional<double> exhaustiveRaOptimum(const Network& net, const CostFunctionSet& set,
                                          std::span<const ServiceChain> chains,
                                          std::span<const double> backgroundLoad) {
  Mask gateways = 0;
  for (const auto& c : chains) gateways |= bit(c.egress);
  std::vector<std::map<Mask, std::set<std::vector<double>>>> options;
  for (const auto& c : chains) options.push_back(chainOptions(net, c, gateways));

  std::optional<double> best;
  std::vector<double> chainLoad(net.linkCount(), 0.0);
  std::function<void(std::size_t, Mask)> go = [&](std::size_t s, Mask used) {
    if (s == chains.size()) {
      std::vector<double> total(net.linkCount());
      for (std::size_t l = 0; l < total.size(); ++l) total[l] = backgroundLoad[l] + chainLoad[l];
      const double c = referenceCost(net, set, total);
      if (!best || c < *best) best = c;
      return;
    }
    for (const auto& [mask, loads] : options[s]) {
      if (mask & used) continue;
      for (const auto& load : loads) {
        for (std::size_t l = 0; l < load.size(); ++l) chainLoad[l] += load[l];
        go(s + 1, used | mask);
        for (std::size_t l = 0; l < load.size(); ++l) chainLoad[l] -= load[l];
      }
    }
  };
  go(0, 0);
  return best;
}

std::vector<std::vector<NodeId>> allSimplePaths(const Network& net, NodeId src, NodeId dst) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> stack{src};
  std::vector<bool> seen(net.nodeCount(), false);
  seen[index(src)] = true;
  std::function<void()> go = [&] {
    const NodeId at = stack.back();
    if (at == dst) {
      out.push_back(stack);
      return;
    }
    for (const Link& l : net.links()) {
      if (l.a != at && l.b != at) continue;
      const NodeId next = l.a == at ? l.b : l.a;
      if (seen[index(next)]) continue;
      seen[index(next)] = true;
      stack.push_back(next);
      go();
      stack.pop_back();
      seen[index(next)] = false;
    }
  };
  go();
  return out;
}

}  // namespace vnfp::testing
