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
#include <limits>
#include <map>
#include <set>

#include "vnfp/detail/budget.hpp"
#include "vnfp/detail/placement.hpp"
#include "vnfp/error.hpp"
#include "vnfp/exact.hpp"

namespace vnfp {

namespace {

using detail::ChainPlacement;
using detail::NodeMask;

struct DemandGroup {
  double bandwidth = 0.0;
  std::vector<std::size_t> demands;
};

struct SubsetOption {
  std::vector<std::size_t> pathIdx;
  std::vector<ChainPlacement> placements;
  double score = 0.0;
};

struct ChainSpace {
  std::vector<Path> paths;
  std::vector<SubsetOption> options;
  std::vector<DemandGroup> groups;
};

// All ways to put `items` interchangeable demands on `bins` paths.
void compositions(std::size_t items, std::size_t bins, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == bins) {
    cur.push_back(items);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= items; ++k) {
    cur.push_back(k);
    compositions(items - k, bins, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> compositions(std::size_t items, std::size_t bins) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  compositions(items, bins, cur, out);
  return out;
}

std::vector<DemandGroup> groupDemands(const ServiceChain& chain) {
  std::vector<DemandGroup> groups;
  for (std::size_t d = 0; d < chain.demands.size(); ++d) {
    const double bw = chain.demands[d].bandwidth;
    auto it = std::find_if(groups.begin(), groups.end(), [bw](const DemandGroup& g) { return g.bandwidth == bw; });
    if (it == groups.end()) {
      groups.push_back({bw, {d}});
    } else {
      it->demands.push_back(d);
    }
  }
  return groups;
}

ChainSpace buildChainSpace(const Network& net, const ServiceChain& chain, const NodeMask& gateways,
                           const CostEvaluator& cost, std::span<const double> background) {
  ChainSpace space;
  space.paths = detail::chainCandidatePaths(net, chain, gateways);
  space.groups = groupDemands(chain);

  std::map<NodeId, std::vector<std::size_t>> byOrigin;
  for (std::size_t i = 0; i < space.paths.size(); ++i) byOrigin[space.paths[i].source()].push_back(i);

  std::vector<double> loads(net.linkCount());
  for (const auto& [origin, idx] : byOrigin) {
    const std::size_t maxSize = std::min(idx.size(), chain.rMax + 1);
    for (std::size_t size = 1; size <= maxSize; ++size) {
      // Lexicographic combinations of `size` paths from this origin.
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        SubsetOption option;
        std::vector<Path> chosen;
        for (std::size_t i : pick) {
          option.pathIdx.push_back(idx[i]);
          chosen.push_back(space.paths[idx[i]]);
        }
        option.placements = detail::enumerateChainPlacements(net, chain, chosen, gateways);
        if (!option.placements.empty()) {
          // Ordering score: cost of an even round-robin split.
          std::fill(loads.begin(), loads.end(), 0.0);
          std::size_t next = 0;
          for (const auto& g : space.groups) {
            for (std::size_t k = 0; k < g.demands.size(); ++k) {
              addPathLoad(loads, chosen[next++ % chosen.size()], g.bandwidth);
            }
          }
          option.score = cost(background, loads);
          space.options.push_back(std::move(option));
        }
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == idx.size() - size + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  std::stable_sort(space.options.begin(), space.options.end(), [](const SubsetOption& a, const SubsetOption& b) {
    if (a.pathIdx.size() != b.pathIdx.size()) return a.pathIdx.size() < b.pathIdx.size();
    return a.score < b.score;
  });
  return space;
}

struct Combo {
  NodeMask used;
  std::vector<std::size_t> placement;  // per active chain
};

struct ChainChoice {
  std::size_t option = 0;
  std::vector<std::vector<std::size_t>> counts;  // per group, per path
};

// Depth-first branch-and-bound over a subset of chains.
class RaSearch {
 public:
  RaSearch(const CostEvaluator& cost, std::span<const double> background, std::span<const ChainSpace> spaces,
           std::vector<std::size_t> active, std::vector<double> minIncrease, detail::BudgetMeter& meter)
      : cost_(cost), background_(background), spaces_(spaces), active_(std::move(active)), meter_(meter),
        suffix_(active_.size() + 1, 0.0), levelLoads_(active_.size() + 1, std::vector<double>(cost.linkCount(), 0.0)),
        groupLoads_(active_.size()), combos_(active_.size()), current_(active_.size()) {
    for (std::size_t i = active_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + minIncrease[i];
    for (std::size_t c = 0; c < active_.size(); ++c) {
      const auto& space = spaces_[active_[c]];
      groupLoads_[c].assign(space.groups.size() + 1, std::vector<double>(cost.linkCount(), 0.0));
      current_[c].counts.resize(space.groups.size());
    }
    rootBound_ = cost_(background_, levelLoads_[0]) + suffix_[0];
  }

  void run() { chainLevel(0); }

  bool found() const noexcept { return found_; }
  double incumbent() const noexcept { return incumbent_; }
  const std::vector<ChainChoice>& best() const noexcept { return best_; }
  const std::vector<std::size_t>& bestPlacement() const noexcept { return bestPlacement_; }

 private:
  bool done() const { return meter_.exhausted() || (found_ && incumbent_ <= rootBound_); }

  double slack() const { return 1e-9 * std::max(1.0, std::abs(incumbent_)); }

  void chainLevel(std::size_t c) {
    if (c == active_.size()) {
      const double value = cost_(background_, levelLoads_[c]);
      if (value < incumbent_) {
        incumbent_ = value;
        found_ = true;
        best_ = current_;
        bestPlacement_ = combos_.empty() ? std::vector<std::size_t>{} : combos_.back().front().placement;
      }
      return;
    }
    const ChainSpace& space = spaces_[active_[c]];
    for (std::size_t oi = 0; oi < space.options.size(); ++oi) {
      if (done()) return;
      if (!buildCombos(c, space.options[oi])) continue;
      current_[c].option = oi;
      groupLoads_[c][0] = levelLoads_[c];
      groupLevel(c, 0);
    }
  }

  // Node-disjoint placement combinations for chains 0..c; false if none.
  bool buildCombos(std::size_t c, const SubsetOption& option) {
    std::vector<Combo> next;
    std::set<NodeMask> seen;
    if (c == 0) {
      for (std::size_t p = 0; p < option.placements.size(); ++p) {
        if (seen.insert(option.placements[p].used).second) next.push_back({option.placements[p].used, {p}});
      }
    } else {
      for (const Combo& prev : combos_[c - 1]) {
        for (std::size_t p = 0; p < option.placements.size(); ++p) {
          if (prev.used.intersects(option.placements[p].used)) continue;
          Combo combo{prev.used, prev.placement};
          combo.used |= option.placements[p].used;
          combo.placement.push_back(p);
          if (seen.insert(combo.used).second) next.push_back(std::move(combo));
        }
      }
    }
    combos_[c] = std::move(next);
    return !combos_[c].empty();
  }

  void groupLevel(std::size_t c, std::size_t g) {
    const ChainSpace& space = spaces_[active_[c]];
    const SubsetOption& option = space.options[current_[c].option];
    if (g == space.groups.size()) {
      levelLoads_[c + 1] = groupLoads_[c][g];
      chainLevel(c + 1);
      return;
    }
    const DemandGroup& group = space.groups[g];
    const std::size_t bins = option.pathIdx.size();
    auto comps = compositions(group.demands.size(), bins);
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(comps.size());
    std::vector<double>& next = groupLoads_[c][g + 1];
    for (std::size_t k = 0; k < comps.size(); ++k) {
      apply(next, groupLoads_[c][g], space, option, group.bandwidth, comps[k]);
      order.emplace_back(cost_(background_, next) + suffix_[c + 1], k);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [bound, k] : order) {
      if (done()) return;
      if (found_ && bound > incumbent_ + slack()) return;
      if (meter_.tick()) return;
      apply(next, groupLoads_[c][g], space, option, group.bandwidth, comps[k]);
      current_[c].counts[g] = comps[k];
      groupLevel(c, g + 1);
    }
  }

  static void apply(std::vector<double>& out, const std::vector<double>& base, const ChainSpace& space,
                    const SubsetOption& option, double bandwidth, const std::vector<std::size_t>& counts) {
    out = base;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 0) continue;
      addPathLoad(out, space.paths[option.pathIdx[i]], bandwidth * static_cast<double>(counts[i]));
    }
  }

  const CostEvaluator& cost_;
  std::span<const double> background_;
  std::span<const ChainSpace> spaces_;
  std::vector<std::size_t> active_;
  detail::BudgetMeter& meter_;
  std::vector<double> suffix_;
  std::vector<std::vector<double>> levelLoads_;
  std::vector<std::vector<std::vector<double>>> groupLoads_;
  std::vector<std::vector<Combo>> combos_;
  std::vector<ChainChoice> current_;
  std::vector<ChainChoice> best_;
  std::vector<std::size_t> bestPlacement_;
  double incumbent_ = std::numeric_limits<double>::infinity();
  double rootBound_ = 0.0;
  bool found_ = false;
};

// True if chains 0..last admit some choice of subsets with disjoint placements.
bool prefixFeasible(std::span<const ChainSpace> spaces, std::size_t last, std::size_t c, const NodeMask& used) {
  if (c > last) return true;
  for (const auto& option : spaces[c].options) {
    for (const auto& placement : option.placements) {
      if (used.intersects(placement.used)) continue;
      NodeMask merged = used;
      merged |= placement.used;
      if (prefixFeasible(spaces, last, c + 1, merged)) return true;
    }
  }
  return false;
}

}  // namespace

RaExactResult solveRaExact(const Network& net, const CostFunctionSet& costSet, std::span<const ServiceChain> chains,
                           std::span<const double> fixedBackgroundLoad, const SearchBudget& budget) {
  if (fixedBackgroundLoad.size() != net.linkCount()) throw Error("background load vector does not match the network");
  for (const auto& c : chains) c.check();

  detail::BudgetMeter meter(budget);
  const CostEvaluator cost(net, costSet);
  const NodeMask gateways = detail::gatewayMask(net, chains);
  std::vector<ChainSpace> spaces;
  for (const auto& chain : chains) spaces.push_back(buildChainSpace(net, chain, gateways, cost, fixedBackgroundLoad));
  for (std::size_t s = 0; s < chains.size(); ++s) {
    if (spaces[s].options.empty()) {
      throw InfeasibleError("chain '" + chains[s].id + "' has no admissible path with a valid VNF placement");
    }
  }

  // Standalone optimum of each chain: a lower bound on what it adds.
  const std::vector<double> zero(net.linkCount(), 0.0);
  const double baseCost = cost(fixedBackgroundLoad, zero);
  std::vector<double> minIncrease(chains.size(), 0.0);
  if (chains.size() > 1) {
    for (std::size_t s = 0; s < chains.size(); ++s) {
      RaSearch single(cost, fixedBackgroundLoad, spaces, {s}, {0.0}, meter);
      single.run();
      if (meter.exhausted()) break;
      minIncrease[s] = std::max(0.0, single.incumbent() - baseCost);
    }
    if (meter.exhausted()) std::fill(minIncrease.begin(), minIncrease.end(), 0.0);
  }

  std::vector<std::size_t> all(chains.size());
  for (std::size_t s = 0; s < chains.size(); ++s) all[s] = s;
  RaSearch search(cost, fixedBackgroundLoad, spaces, all, minIncrease, meter);
  if (!meter.exhausted()) search.run();

  if (!search.found()) {
    if (meter.exhausted()) {
      throw BudgetExhausted("RA search stopped after " + std::to_string(meter.explored()) +
                            " nodes without a feasible solution");
    }
    for (std::size_t s = 0; s < chains.size(); ++s) {
      if (!prefixFeasible(spaces, s, 0, NodeMask(net.nodeCount()))) {
        throw InfeasibleError("chain '" + chains[s].id + "' cannot be placed without sharing nodes with earlier chains");
      }
    }
    throw InfeasibleError("no feasible placement for the service chains");
  }
  if (meter.exhausted() && budget.optimalityRequired) {
    throw BudgetExhausted("RA search stopped after " + std::to_string(meter.explored()) +
                          " nodes before proving optimality");
  }

  RaExactResult result;
  for (std::size_t s = 0; s < chains.size(); ++s) {
    const ChainSpace& space = spaces[s];
    const ChainChoice& choice = search.best()[s];
    const SubsetOption& option = space.options[choice.option];
    ChainSolution cs;
    for (std::size_t i : option.pathIdx) cs.selectedPaths.push_back(space.paths[i]);
    cs.placements = option.placements[search.bestPlacement()[s]].hosts;
    cs.demandPaths.resize(chains[s].demands.size());
    for (std::size_t g = 0; g < space.groups.size(); ++g) {
      std::size_t k = 0;
      for (std::size_t p = 0; p < choice.counts[g].size(); ++p) {
        for (std::size_t n = 0; n < choice.counts[g][p]; ++n) {
          cs.demandPaths[space.groups[g].demands[k++]] = cs.selectedPaths[p];
        }
      }
    }
    result.solution.chains.push_back(std::move(cs));
  }

  const auto report = validateChains(net, fixedBackgroundLoad, chains, result.solution, {.enforceCapacity = false});
  if (!report.ok()) throw Error("exact RA search produced an invalid solution:\n" + report.summary());

  const std::vector<double> background(fixedBackgroundLoad.begin(), fixedBackgroundLoad.end());
  result.cost = objective(cost, LoadLedger{background, chainLoads(net, chains, result.solution)});
  result.provenOptimal = !meter.exhausted();
  result.explored = meter.explored();
  result.elapsedSeconds = meter.seconds();
  return result;
}

}  // namespace vnfp
