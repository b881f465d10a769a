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
#include <cmath>
#include <limits>
#include <optional>

#include "vnfp/detail/genetic.hpp"
#include "vnfp/detail/placement.hpp"
#include "vnfp/error.hpp"
#include "vnfp/ga.hpp"
#include "vnfp/rng.hpp"

namespace vnfp {

namespace {

using detail::GeneticEngine;
using detail::Genes;
using detail::NodeMask;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Picks desired.size() increasing entries of `free`, each as close as possible
// to its desired path position while leaving room for the ones after it.
bool pickPositions(std::span<const std::size_t> free, std::span<const std::uint32_t> desired,
                   std::vector<std::size_t>& out) {
  if (free.size() < desired.size()) return false;
  std::size_t lo = 0;
  for (std::size_t k = 0; k < desired.size(); ++k) {
    const std::size_t hi = free.size() - (desired.size() - k);
    std::size_t pick = lo;
    std::size_t gap = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = lo; i <= hi; ++i) {
      const std::size_t d = free[i] > desired[k] ? free[i] - desired[k] : desired[k] - free[i];
      if (d < gap) {
        gap = d;
        pick = i;
      }
    }
    out.push_back(free[pick]);
    lo = pick + 1;
  }
  return true;
}

// Cost increase on the links of `p` when `bw` more Mbps is routed over it,
// and the highest utilization it leaves behind.
std::pair<double, double> marginal(const Network& net, const CostFunctionSet& set, std::span<const double> total,
                                   const Path& p, double bw) {
  double delta = 0.0;
  double peak = 0.0;
  for (LinkId l : p.links) {
    const double cap = net.link(l).capacity;
    const double before = total[index(l)];
    const double after = before + bw;
    delta += linkCost(set, after / cap) - linkCost(set, before / cap);
    peak = std::max(peak, after / cap);
  }
  return {delta, peak};
}

// Greedy spread of a chain's demands over `paths`: each demand, in order, goes
// where it raises the cost least, then where it leaves the lowest peak
// utilization. `total` must exclude the chain's own load and is updated.
std::vector<std::size_t> spreadDemands(const Network& net, const CostFunctionSet& set, std::span<double> total,
                                       const ServiceChain& chain, std::span<const Path> paths) {
  std::vector<std::size_t> assign(chain.demands.size(), 0);
  for (std::size_t d = 0; d < chain.demands.size(); ++d) {
    const double bw = chain.demands[d].bandwidth;
    std::size_t best = 0;
    std::pair<double, double> bestKey{kInf, kInf};
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto key = marginal(net, set, total, paths[i], bw);
      if (key < bestKey) {
        bestKey = key;
        best = i;
      }
    }
    assign[d] = best;
    addPathLoad(total, paths[best], bw);
  }
  return assign;
}

}  // namespace

// ---------------------------------------------------------------------------

TeGaResult runTeGa(const Network& net, const CostFunctionSet& costSet, std::span<const Demand> demands,
                   const GaParams& params) {
  std::vector<std::uint32_t> ranges;
  for (const auto& d : demands) {
    const auto paths = net.paths(d.source, d.destination);
    if (paths.empty()) throw InfeasibleError("background demand '" + d.id + "' has no candidate path");
    ranges.push_back(static_cast<std::uint32_t>(paths.size()));
  }
  const CostEvaluator cost(net, costSet);
  auto fitness = [&](std::span<const std::uint32_t> g) {
    std::vector<double> load(net.linkCount(), 0.0);
    for (std::size_t i = 0; i < demands.size(); ++i) {
      addPathLoad(load, net.paths(demands[i].source, demands[i].destination)[g[i]], demands[i].bandwidth);
    }
    return cost(load);
  };
  GeneticEngine engine(ranges, params, fitness);
  engine.seed(Genes(ranges.size(), 0));
  auto outcome = engine.run();

  TeGaResult result;
  for (std::size_t i = 0; i < demands.size(); ++i) {
    result.solution.assignment.push_back(net.paths(demands[i].source, demands[i].destination)[outcome.best[i]]);
  }
  result.cost = objective(cost, accumulateLoads(net, demands, result.solution));
  result.trace = std::move(outcome.trace);
  return result;
}

// ---------------------------------------------------------------------------

namespace {

struct RaLayout {
  std::vector<Path> paths;
  std::uint32_t maxLen = 1;
  std::size_t offset = 0;  // first gene of the chain
};

struct RaChoice {
  std::size_t path = 0;
  std::vector<NodeId> hosts;  // one per VNF
};

class RaDecoder {
 public:
  RaDecoder(const Network& net, std::span<const ServiceChain> chains) : net_(net), chains_(chains) {
    gateways_ = detail::gatewayMask(net, chains);
    std::size_t offset = 0;
    for (const auto& c : chains) {
      RaLayout lay;
      lay.paths = detail::chainCandidatePaths(net, c, gateways_);
      if (lay.paths.empty()) {
        throw InfeasibleError("chain '" + c.id + "' has no candidate path to its egress '" + net.nodeName(c.egress) +
                              "'");
      }
      for (const auto& p : lay.paths) lay.maxLen = std::max(lay.maxLen, static_cast<std::uint32_t>(p.nodes.size()));
      lay.offset = offset;
      offset += c.vnfs.size();
      layouts_.push_back(std::move(lay));
    }
  }

  std::vector<std::uint32_t> ranges() const {
    std::vector<std::uint32_t> r;
    for (std::size_t s = 0; s < chains_.size(); ++s) {
      r.push_back(static_cast<std::uint32_t>(layouts_[s].paths.size()));
      for (std::size_t v = 1; v < chains_[s].vnfs.size(); ++v) r.push_back(layouts_[s].maxLen);
    }
    return r;
  }

  std::optional<std::vector<RaChoice>> decode(std::span<const std::uint32_t> g) const {
    NodeMask used = gateways_;
    std::vector<RaChoice> out;
    std::vector<std::size_t> free;
    std::vector<std::size_t> picked;
    for (std::size_t s = 0; s < chains_.size(); ++s) {
      const RaLayout& lay = layouts_[s];
      const std::size_t extra = chains_[s].vnfs.size() - 1;
      const auto desired = g.subspan(lay.offset + 1, extra);
      bool placed = false;
      for (std::size_t t = 0; t < lay.paths.size() && !placed; ++t) {
        const std::size_t pi = (g[lay.offset] + t) % lay.paths.size();
        const Path& p = lay.paths[pi];
        if (used.test(p.source())) continue;
        free.clear();
        for (std::size_t q = 1; q + 1 < p.nodes.size(); ++q) {
          if (!used.test(p.nodes[q])) free.push_back(q);
        }
        picked.clear();
        if (!pickPositions(free, desired, picked)) continue;
        RaChoice choice{pi, {p.source()}};
        used.set(p.source());
        for (std::size_t q : picked) {
          choice.hosts.push_back(p.nodes[q]);
          used.set(p.nodes[q]);
        }
        out.push_back(std::move(choice));
        placed = true;
      }
      if (!placed) return std::nullopt;
    }
    return out;
  }

  std::vector<double> loads(const std::vector<RaChoice>& choice) const {
    std::vector<double> load(net_.linkCount(), 0.0);
    for (std::size_t s = 0; s < chains_.size(); ++s) {
      addPathLoad(load, layouts_[s].paths[choice[s].path], chains_[s].totalBandwidth());
    }
    return load;
  }

  RaSolution solution(const std::vector<RaChoice>& choice) const {
    RaSolution ra;
    for (std::size_t s = 0; s < chains_.size(); ++s) {
      const Path& p = layouts_[s].paths[choice[s].path];
      ChainSolution cs;
      cs.selectedPaths = {p};
      for (NodeId h : choice[s].hosts) cs.placements.push_back({h});
      cs.demandPaths.assign(chains_[s].demands.size(), p);
      ra.chains.push_back(std::move(cs));
    }
    return ra;
  }

 private:
  const Network& net_;
  std::span<const ServiceChain> chains_;
  NodeMask gateways_;
  std::vector<RaLayout> layouts_;
};

void checkBackground(const Network& net, std::span<const double> bg) {
  if (bg.size() != net.linkCount()) throw Error("background load vector does not match the link count");
}

}  // namespace

RaGaResult runRaGa(const Network& net, const CostFunctionSet& costSet, std::span<const ServiceChain> chains,
                   std::span<const double> backgroundLoad, const GaParams& params) {
  checkBackground(net, backgroundLoad);
  for (const auto& c : chains) c.check();
  const RaDecoder decoder(net, chains);
  const CostEvaluator cost(net, costSet);
  auto fitness = [&](std::span<const std::uint32_t> g) {
    const auto choice = decoder.decode(g);
    if (!choice) return kInf;
    return cost(backgroundLoad, decoder.loads(*choice));
  };
  const auto ranges = decoder.ranges();
  GeneticEngine engine(ranges, params, fitness);
  engine.seed(Genes(ranges.size(), 0));
  auto outcome = engine.run();
  const auto best = decoder.decode(outcome.best);
  if (!best) throw InfeasibleError("no placement keeps every chain's hosts on distinct free nodes");

  RaGaResult result;
  result.solution = decoder.solution(*best);
  result.cost = objective(cost, LoadLedger{std::vector<double>(backgroundLoad.begin(), backgroundLoad.end()),
                                           chainLoads(net, chains, result.solution)});
  result.trace = std::move(outcome.trace);
  return result;
}

// ---------------------------------------------------------------------------

namespace {

struct ChainState {
  std::vector<Path> paths;
  std::vector<std::vector<NodeId>> hosts;
  std::vector<std::size_t> demandPath;
};

struct LevelSlot {
  std::size_t chain = 0;
  std::vector<Path> alternatives;
  std::uint32_t maxLen = 1;
  std::size_t offset = 0;
  std::size_t replicable = 0;  // position genes
  NodeMask onSelected;         // nodes on the chain's current paths
};

struct Extension {
  std::size_t chain = 0;
  Path path;
  std::vector<std::pair<std::size_t, NodeId>> newHosts;  // (vnf, node)
  std::vector<std::size_t> demandPath;
};

class ReplicaLevel {
 public:
  ReplicaLevel(const Network& net, const CostFunctionSet& set, std::span<const ServiceChain> chains,
               const std::vector<ChainState>& state, std::size_t level)
      : net_(net), set_(set), chains_(chains), state_(state) {
    used_ = detail::gatewayMask(net, chains);
    for (const auto& st : state) {
      for (const auto& hs : st.hosts) {
        for (NodeId h : hs) used_.set(h);
      }
    }
    std::size_t offset = 0;
    for (std::size_t s = 0; s < chains.size(); ++s) {
      if (chains[s].rMax < level) continue;
      LevelSlot slot;
      slot.chain = s;
      slot.onSelected = NodeMask(net.nodeCount());
      for (const Path& p : state[s].paths) {
        for (NodeId n : p.nodes) slot.onSelected.set(n);
      }
      slot.alternatives = alternatives(s);
      if (slot.alternatives.empty()) continue;
      for (const auto& p : slot.alternatives) {
        slot.maxLen = std::max(slot.maxLen, static_cast<std::uint32_t>(p.nodes.size()));
      }
      for (const auto& v : chains[s].vnfs) slot.replicable += v.replicable ? 1 : 0;
      slot.offset = offset;
      offset += 1 + slot.replicable;
      slots_.push_back(std::move(slot));
    }
  }

  bool empty() const { return slots_.empty(); }

  std::vector<std::uint32_t> ranges() const {
    std::vector<std::uint32_t> r;
    for (const auto& slot : slots_) {
      r.push_back(static_cast<std::uint32_t>(slot.alternatives.size() + 1));
      r.insert(r.end(), slot.replicable, slot.maxLen);
    }
    return r;
  }

  /// Genes that add no replica anywhere.
  Genes idle() const {
    Genes g;
    for (const auto& slot : slots_) {
      g.push_back(static_cast<std::uint32_t>(slot.alternatives.size()));
      g.insert(g.end(), slot.replicable, 0);
    }
    return g;
  }

  /// Extensions encoded by `g`; `total` receives the resulting per-link load.
  std::vector<Extension> decode(std::span<const std::uint32_t> g, std::span<const double> baseTotal,
                                std::vector<double>& total) const {
    NodeMask used = used_;
    std::vector<Extension> out;
    for (const auto& slot : slots_) {
      const std::size_t alt = g[slot.offset];
      if (alt == slot.alternatives.size()) continue;
      const auto desired = g.subspan(slot.offset + 1, slot.replicable);
      for (std::size_t t = 0; t < slot.alternatives.size(); ++t) {
        const Path& p = slot.alternatives[(alt + t) % slot.alternatives.size()];
        auto hosts = embed(slot, p, desired, used);
        if (!hosts) continue;
        for (const auto& [v, n] : *hosts) used.set(n);
        out.push_back({slot.chain, p, std::move(*hosts), {}});
        break;
      }
    }
    total.assign(baseTotal.begin(), baseTotal.end());
    for (auto& ext : out) {
      const ChainState& st = state_[ext.chain];
      const ServiceChain& c = chains_[ext.chain];
      for (std::size_t d = 0; d < c.demands.size(); ++d) {
        addPathLoad(total, st.paths[st.demandPath[d]], -c.demands[d].bandwidth);
      }
    }
    for (auto& ext : out) {
      std::vector<Path> paths = state_[ext.chain].paths;
      paths.push_back(ext.path);
      ext.demandPath = spreadDemands(net_, set_, total, chains_[ext.chain], paths);
    }
    return out;
  }

 private:
  // Paths from the anchor to the egress that are not selected yet, pass the
  // non-replicable hosts in order and avoid the chain's replicable hosts.
  std::vector<Path> alternatives(std::size_t s) const {
    const ServiceChain& c = chains_[s];
    const ChainState& st = state_[s];
    std::vector<Path> out;
    for (const Path& p : net_.paths(st.hosts[0].front(), c.egress)) {
      if (std::find(st.paths.begin(), st.paths.end(), p) != st.paths.end()) continue;
      bool ok = true;
      std::size_t prev = 0;
      for (std::size_t v = 1; v < c.vnfs.size() && ok; ++v) {
        if (c.vnfs[v].replicable) {
          for (NodeId h : st.hosts[v]) ok = ok && !p.contains(h);
        } else {
          const auto pos = p.position(st.hosts[v].front());
          ok = pos && *pos > prev;
          if (ok) prev = *pos;
        }
      }
      if (ok) out.push_back(p);
    }
    return out;
  }

  std::optional<std::vector<std::pair<std::size_t, NodeId>>> embed(const LevelSlot& slot, const Path& p,
                                                                    std::span<const std::uint32_t> desired,
                                                                    const NodeMask& used) const {
    const ServiceChain& c = chains_[slot.chain];
    const ChainState& st = state_[slot.chain];
    std::vector<std::pair<std::size_t, NodeId>> hosts;
    std::vector<std::size_t> free;
    std::vector<std::size_t> picked;
    std::size_t prev = 0;
    std::size_t gene = 0;
    std::size_t v = 1;
    while (v < c.vnfs.size()) {
      if (!c.vnfs[v].replicable) {
        prev = *p.position(st.hosts[v].front());
        ++v;
        continue;
      }
      std::size_t w = v;
      while (w < c.vnfs.size() && c.vnfs[w].replicable) ++w;
      const std::size_t upper = w < c.vnfs.size() ? *p.position(st.hosts[w].front()) : p.nodes.size() - 1;
      free.clear();
      for (std::size_t q = prev + 1; q < upper; ++q) {
        const NodeId n = p.nodes[q];
        if (!used.test(n) && !slot.onSelected.test(n)) free.push_back(q);
      }
      picked.clear();
      if (!pickPositions(free, desired.subspan(gene, w - v), picked)) return std::nullopt;
      for (std::size_t k = 0; k < picked.size(); ++k) hosts.emplace_back(v + k, p.nodes[picked[k]]);
      gene += w - v;
      prev = picked.empty() ? prev : picked.back();
      v = w;
    }
    return hosts;
  }

  const Network& net_;
  const CostFunctionSet& set_;
  std::span<const ServiceChain> chains_;
  const std::vector<ChainState>& state_;
  NodeMask used_;
  std::vector<LevelSlot> slots_;
};

std::vector<ChainState> stateFrom(std::span<const ServiceChain> chains, const RaSolution& base) {
  if (base.chains.size() != chains.size()) throw Error("base placement does not cover every chain");
  std::vector<ChainState> state;
  for (std::size_t s = 0; s < chains.size(); ++s) {
    const ChainSolution& cs = base.chains[s];
    if (cs.placements.size() != chains[s].vnfs.size() || cs.demandPaths.size() != chains[s].demands.size() ||
        cs.selectedPaths.empty()) {
      throw Error("base placement for chain '" + chains[s].id + "' is incomplete");
    }
    ChainState st{cs.selectedPaths, cs.placements, {}};
    for (const Path& p : cs.demandPaths) {
      const auto it = std::find(st.paths.begin(), st.paths.end(), p);
      if (it == st.paths.end()) throw Error("base demand path of chain '" + chains[s].id + "' is not selected");
      st.demandPath.push_back(static_cast<std::size_t>(it - st.paths.begin()));
    }
    state.push_back(std::move(st));
  }
  return state;
}

RaSolution solutionFrom(const std::vector<ChainState>& state) {
  RaSolution ra;
  for (const auto& st : state) {
    ChainSolution cs{st.paths, st.hosts, {}};
    for (std::size_t i : st.demandPath) cs.demandPaths.push_back(st.paths[i]);
    ra.chains.push_back(std::move(cs));
  }
  return ra;
}

}  // namespace

RrGaResult runRrGa(const Network& net, const CostFunctionSet& costSet, std::span<const ServiceChain> chains,
                   std::span<const double> backgroundLoad, const RaSolution& base, const GaParams& params) {
  checkBackground(net, backgroundLoad);
  for (const auto& c : chains) c.check();
  const CostEvaluator cost(net, costSet);
  std::vector<ChainState> state = stateFrom(chains, base);
  const std::vector<double> bg(backgroundLoad.begin(), backgroundLoad.end());
  auto canonical = [&](const RaSolution& ra) { return objective(cost, LoadLedger{bg, chainLoads(net, chains, ra)}); };

  RrGaResult result;
  result.solution = solutionFrom(state);
  result.cost = canonical(result.solution);

  std::size_t maxLevel = 0;
  for (const auto& c : chains) maxLevel = std::max(maxLevel, c.rMax);

  for (std::size_t level = 1; level <= maxLevel; ++level) {
    if (result.cost <= 1e-9) break;  // costs are never negative
    const ReplicaLevel lv(net, costSet, chains, state, level);
    if (lv.empty()) break;
    std::vector<double> baseTotal = chainLoads(net, chains, result.solution);
    for (std::size_t l = 0; l < baseTotal.size(); ++l) baseTotal[l] += bg[l];

    auto fitness = [&](std::span<const std::uint32_t> g) {
      std::vector<double> total;
      lv.decode(g, baseTotal, total);
      return cost(total);
    };
    GaParams levelParams = params;
    levelParams.seed = deriveSeed(params.seed, level);
    GeneticEngine engine(lv.ranges(), levelParams, fitness);
    engine.seed(lv.idle());
    auto outcome = engine.run();
    result.traces.push_back(std::move(outcome.trace));

    std::vector<double> total;
    const auto extensions = lv.decode(outcome.best, baseTotal, total);
    if (extensions.empty()) break;
    std::vector<ChainState> next = state;
    for (const auto& ext : extensions) {
      ChainState& st = next[ext.chain];
      st.paths.push_back(ext.path);
      for (const auto& [v, n] : ext.newHosts) st.hosts[v].push_back(n);
      st.demandPath = ext.demandPath;
    }
    RaSolution candidate = solutionFrom(next);
    const double c = canonical(candidate);
    if (!(c < result.cost - 1e-9)) break;
    state = std::move(next);
    result.solution = std::move(candidate);
    result.cost = c;
  }
  for (const auto& st : state) result.replicaCounts.push_back(st.paths.size() - 1);
  return result;
}

}  // namespace vnfp
