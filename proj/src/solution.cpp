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

#include "vnfp/solution.hpp"

#include "vnfp/error.hpp"

namespace vnfp {

std::vector<double> LoadLedger::totals() const {
  std::vector<double> out(background.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = background[i] + chain[i];
  return out;
}

void addPathLoad(std::span<double> loads, const Path& path, double bandwidth) {
  for (LinkId l : path.links) loads[index(l)] += bandwidth;
}

std::vector<double> backgroundLoads(const Network& net, std::span<const Demand> demands, const TeSolution& te) {
  if (te.assignment.size() != demands.size()) {
    throw Error("TE solution assigns " + std::to_string(te.assignment.size()) + " paths for " +
                std::to_string(demands.size()) + " demands");
  }
  std::vector<double> loads(net.linkCount(), 0.0);
  for (std::size_t i = 0; i < demands.size(); ++i) addPathLoad(loads, te.assignment[i], demands[i].bandwidth);
  return loads;
}

std::vector<double> chainLoads(const Network& net, std::span<const ServiceChain> chains, const RaSolution& ra) {
  if (ra.chains.size() != chains.size()) throw Error("RA solution does not cover every service chain");
  std::vector<double> loads(net.linkCount(), 0.0);
  for (std::size_t s = 0; s < chains.size(); ++s) {
    const auto& demands = chains[s].demands;
    const auto& paths = ra.chains[s].demandPaths;
    if (paths.size() != demands.size()) throw Error("chain '" + chains[s].id + "' has demands without a path");
    for (std::size_t d = 0; d < demands.size(); ++d) addPathLoad(loads, paths[d], demands[d].bandwidth);
  }
  return loads;
}

LoadLedger accumulateLoads(const Network& net, std::span<const Demand> demands, const TeSolution& te) {
  return LoadLedger{backgroundLoads(net, demands, te), std::vector<double>(net.linkCount(), 0.0)};
}

LoadLedger accumulateLoads(const Network& net, std::span<const Demand> demands, const TeSolution& te,
                           std::span<const ServiceChain> chains, const RaSolution& ra) {
  return LoadLedger{backgroundLoads(net, demands, te), chainLoads(net, chains, ra)};
}

double objective(const CostEvaluator& cost, const LoadLedger& ledger) { return cost(ledger.background, ledger.chain); }

double objective(const Network& net, const CostFunctionSet& costSet, const LoadLedger& ledger) {
  return objective(CostEvaluator(net, costSet), ledger);
}

std::vector<double> utilization(const Network& net, const LoadLedger& ledger) {
  std::vector<double> u(net.linkCount());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = (ledger.background[i] + ledger.chain[i]) / net.links()[i].capacity;
  return u;
}

}  // namespace vnfp
