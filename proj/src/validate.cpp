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
#include <map>
#include <set>
#include <sstream>

#include "vnfp/solution.hpp"

namespace vnfp {

namespace {

std::string describe(const Network& net, const Path& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (i) out += ",";
    out += index(p.nodes[i]) < net.nodeCount() ? net.nodeName(p.nodes[i]) : "?";
  }
  return out + "]";
}

bool wellFormed(const Network& net, const Path& p) {
  if (p.nodes.size() < 2 || p.links.size() + 1 != p.nodes.size()) return false;
  std::set<NodeId> seen;
  for (NodeId n : p.nodes) {
    if (index(n) >= net.nodeCount() || !seen.insert(n).second) return false;
  }
  for (std::size_t i = 0; i < p.links.size(); ++i) {
    if (index(p.links[i]) >= net.linkCount()) return false;
    const Link& l = net.link(p.links[i]);
    const bool joins = (l.a == p.nodes[i] && l.b == p.nodes[i + 1]) || (l.b == p.nodes[i] && l.a == p.nodes[i + 1]);
    if (!joins) return false;
  }
  return true;
}

class Checker {
 public:
  Checker(const Network& net, ValidationReport& report) : net_(net), report_(report) {}

  void flag(Constraint c, std::string detail) { report_.violations.push_back({c, std::move(detail)}); }

  void checkTe(std::span<const Demand> demands, const TeSolution& te) {
    if (te.assignment.size() != demands.size()) {
      flag(Constraint::SinglePathRouting, "TE solution routes " + std::to_string(te.assignment.size()) + " of " +
                                              std::to_string(demands.size()) + " background demands");
    }
    const std::size_t n = std::min(te.assignment.size(), demands.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Path& p = te.assignment[i];
      const Demand& d = demands[i];
      if (!wellFormed(net_, p)) {
        flag(Constraint::SinglePathRouting, "demand '" + d.id + "' uses malformed path " + describe(net_, p));
      } else if (p.source() != d.source || p.target() != d.destination) {
        flag(Constraint::SinglePathRouting,
             "demand '" + d.id + "' path " + describe(net_, p) + " does not join its endpoints");
      }
    }
  }

  void checkChains(std::span<const ServiceChain> chains, const RaSolution& ra) {
    if (ra.chains.size() != chains.size()) {
      flag(Constraint::SinglePathRouting, "RA solution covers " + std::to_string(ra.chains.size()) + " of " +
                                              std::to_string(chains.size()) + " chains");
    }
    std::set<NodeId> gateways;
    for (const auto& c : chains) gateways.insert(c.egress);
    std::map<NodeId, std::vector<std::string>> occupants;

    const std::size_t count = std::min(ra.chains.size(), chains.size());
    for (std::size_t s = 0; s < count; ++s) {
      const ServiceChain& chain = chains[s];
      const ChainSolution& cs = ra.chains[s];
      const std::string tag = "chain '" + chain.id + "'";

      // Host sets per VNF.
      if (cs.placements.size() != chain.vnfs.size()) {
        flag(Constraint::FunctionsOnPath, tag + " places " + std::to_string(cs.placements.size()) + " of " +
                                              std::to_string(chain.vnfs.size()) + " VNFs");
      }
      std::vector<std::set<NodeId>> hosts(chain.vnfs.size());
      for (std::size_t v = 0; v < std::min(cs.placements.size(), hosts.size()); ++v) {
        for (NodeId n : cs.placements[v]) {
          if (index(n) >= net_.nodeCount()) {
            flag(Constraint::NodeCapacity, tag + " places VNF " + std::to_string(v) + " on an unknown node");
            continue;
          }
          if (!hosts[v].insert(n).second) {
            flag(Constraint::NodeCapacity, tag + " lists node '" + net_.nodeName(n) + "' twice for VNF " +
                                               std::to_string(v));
            continue;
          }
          occupants[n].push_back(chain.id + ":" + std::to_string(v));
        }
        if (hosts[v].size() > chain.hostLimit(v)) {
          flag(Constraint::ReplicaCap, tag + " VNF " + std::to_string(v) + " has " + std::to_string(hosts[v].size()) +
                                           " hosts, limit " + std::to_string(chain.hostLimit(v)));
        }
      }
      auto hostsOf = [&](std::size_t v) -> const std::set<NodeId>& { return hosts[v]; };
      auto isAnchorHost = [&](NodeId n) { return !hosts.empty() && hosts[0].contains(n); };

      // Selected paths.
      const auto& selected = cs.selectedPaths;
      if (selected.empty() || selected.size() > chain.rMax + 1) {
        flag(Constraint::PathCount, tag + " selects " + std::to_string(selected.size()) + " paths, allowed 1.." +
                                        std::to_string(chain.rMax + 1));
      }
      for (std::size_t i = 0; i < selected.size(); ++i) {
        for (std::size_t j = i + 1; j < selected.size(); ++j) {
          if (selected[i] == selected[j]) {
            flag(Constraint::PathCount, tag + " selects path " + describe(net_, selected[i]) + " twice");
          }
        }
      }
      std::vector<bool> usable(selected.size(), true);
      for (std::size_t i = 0; i < selected.size(); ++i) {
        const Path& p = selected[i];
        if (!wellFormed(net_, p)) {
          flag(Constraint::SinglePathRouting, tag + " selects malformed path " + describe(net_, p));
          usable[i] = false;
          continue;
        }
        if (!isAnchorHost(p.source()) || p.target() != chain.egress) {
          flag(Constraint::SinglePathRouting,
               tag + " path " + describe(net_, p) + " must run from the anchor host to the egress");
        }
        for (std::size_t v = 0; v < hosts.size(); ++v) {
          const bool visits = std::any_of(p.nodes.begin(), p.nodes.end(), [&](NodeId n) { return hostsOf(v).contains(n); });
          if (!visits) {
            flag(Constraint::FunctionsOnPath,
                 tag + " path " + describe(net_, p) + " visits no host of VNF " + std::to_string(v));
          }
        }
        for (std::size_t pos = 0; pos < p.nodes.size(); ++pos) {
          for (std::size_t v = 1; v < hosts.size(); ++v) {
            if (!hostsOf(v).contains(p.nodes[pos])) continue;
            const bool preceded = std::any_of(p.nodes.begin(), p.nodes.begin() + static_cast<std::ptrdiff_t>(pos),
                                              [&](NodeId m) { return hostsOf(v - 1).contains(m); });
            if (!preceded) {
              flag(Constraint::SequenceOrder, tag + " path " + describe(net_, p) + ": VNF " + std::to_string(v) +
                                                  " at '" + net_.nodeName(p.nodes[pos]) +
                                                  "' is not preceded by VNF " + std::to_string(v - 1));
            }
          }
        }
      }
      for (std::size_t i = 0; i < selected.size(); ++i) {
        for (std::size_t j = i + 1; j < selected.size(); ++j) {
          if (!usable[i] || !usable[j] || selected[i] == selected[j]) continue;
          for (NodeId n : selected[i].nodes) {
            if (!selected[j].contains(n)) continue;
            for (std::size_t v = 0; v < hosts.size(); ++v) {
              if (chain.vnfs[v].replicable && hostsOf(v).contains(n)) {
                flag(Constraint::ReplicaDistinctness, tag + " paths " + describe(net_, selected[i]) + " and " +
                                                          describe(net_, selected[j]) + " share '" + net_.nodeName(n) +
                                                          "' hosting replicable VNF " + std::to_string(v));
              }
            }
          }
        }
      }

      // Demand routing.
      if (cs.demandPaths.size() != chain.demands.size()) {
        flag(Constraint::SinglePathRouting, tag + " routes " + std::to_string(cs.demandPaths.size()) + " of " +
                                                std::to_string(chain.demands.size()) + " demands");
      }
      for (std::size_t d = 0; d < std::min(cs.demandPaths.size(), chain.demands.size()); ++d) {
        const Path& p = cs.demandPaths[d];
        if (std::find(selected.begin(), selected.end(), p) == selected.end()) {
          flag(Constraint::ChainPathCoupling, tag + " demand '" + chain.demands[d].id + "' uses path " +
                                                  describe(net_, p) + " the chain did not select");
        }
      }
    }

    for (const auto& [node, who] : occupants) {
      if (who.size() > 1) {
        std::string list;
        for (const auto& w : who) list += (list.empty() ? "" : ", ") + w;
        flag(Constraint::NodeCapacity, "node '" + net_.nodeName(node) + "' hosts " + std::to_string(who.size()) +
                                           " VNFs (" + list + ")");
      }
      if (gateways.contains(node)) {
        flag(Constraint::NodeCapacity, "node '" + net_.nodeName(node) + "' is a border gateway and cannot host a VNF");
      }
    }
  }

  void checkCapacity(std::span<const double> background, std::span<const double> chain) {
    for (std::size_t i = 0; i < net_.linkCount(); ++i) {
      const double load = background[i] + chain[i];
      const Link& l = net_.links()[i];
      if (load > l.capacity) {
        std::ostringstream os;
        os << "link '" << l.id << "' carries " << load << " Mbps over capacity " << l.capacity;
        flag(Constraint::LinkCapacity, os.str());
      }
    }
  }

 private:
  const Network& net_;
  ValidationReport& report_;
};

// Loads from whatever part of the solution is routable; malformed pieces were
// already reported.
std::vector<double> tolerantChainLoads(const Network& net, std::span<const ServiceChain> chains, const RaSolution& ra) {
  std::vector<double> loads(net.linkCount(), 0.0);
  for (std::size_t s = 0; s < std::min(chains.size(), ra.chains.size()); ++s) {
    const auto& paths = ra.chains[s].demandPaths;
    for (std::size_t d = 0; d < std::min(paths.size(), chains[s].demands.size()); ++d) {
      if (wellFormed(net, paths[d])) addPathLoad(loads, paths[d], chains[s].demands[d].bandwidth);
    }
  }
  return loads;
}

std::vector<double> tolerantBackgroundLoads(const Network& net, std::span<const Demand> demands, const TeSolution& te) {
  std::vector<double> loads(net.linkCount(), 0.0);
  for (std::size_t i = 0; i < std::min(demands.size(), te.assignment.size()); ++i) {
    if (wellFormed(net, te.assignment[i])) addPathLoad(loads, te.assignment[i], demands[i].bandwidth);
  }
  return loads;
}

}  // namespace

std::string_view constraintName(Constraint c) noexcept {
  switch (c) {
    case Constraint::SinglePathRouting:
      return "single-path-routing";
    case Constraint::ChainPathCoupling:
      return "chain-path-coupling";
    case Constraint::PathCount:
      return "path-count";
    case Constraint::FunctionsOnPath:
      return "functions-on-path";
    case Constraint::ReplicaDistinctness:
      return "replica-distinctness";
    case Constraint::SequenceOrder:
      return "sequence-order";
    case Constraint::NodeCapacity:
      return "node-capacity";
    case Constraint::ReplicaCap:
      return "replica-cap";
    case Constraint::LinkCapacity:
      return "link-capacity";
  }
  return "unknown";
}

bool ValidationReport::has(Constraint c) const noexcept {
  return std::any_of(violations.begin(), violations.end(), [c](const Violation& v) { return v.constraint == c; });
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    out += std::string(constraintName(v.constraint)) + ": " + v.detail + "\n";
  }
  return out;
}

ValidationReport validate(const Network& net, std::span<const Demand> demands, const TeSolution& te,
                          ValidationOptions options) {
  ValidationReport report;
  Checker checker(net, report);
  checker.checkTe(demands, te);
  if (options.enforceCapacity) {
    const std::vector<double> zero(net.linkCount(), 0.0);
    checker.checkCapacity(tolerantBackgroundLoads(net, demands, te), zero);
  }
  return report;
}

ValidationReport validate(const Network& net, std::span<const Demand> demands, const TeSolution& te,
                          std::span<const ServiceChain> chains, const RaSolution& ra, ValidationOptions options) {
  ValidationReport report;
  Checker checker(net, report);
  checker.checkTe(demands, te);
  checker.checkChains(chains, ra);
  if (options.enforceCapacity) {
    checker.checkCapacity(tolerantBackgroundLoads(net, demands, te), tolerantChainLoads(net, chains, ra));
  }
  return report;
}

ValidationReport validateChains(const Network& net, std::span<const double> backgroundLoad,
                                std::span<const ServiceChain> chains, const RaSolution& ra, ValidationOptions options) {
  ValidationReport report;
  Checker checker(net, report);
  checker.checkChains(chains, ra);
  if (options.enforceCapacity) checker.checkCapacity(backgroundLoad, tolerantChainLoads(net, chains, ra));
  return report;
}

}  // namespace vnfp
