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
#include <numeric>

#include "vnfp/detail/budget.hpp"
#include "vnfp/error.hpp"
#include "vnfp/exact.hpp"

namespace vnfp {

namespace {

class TeSearch {
 public:
  TeSearch(const Network& net, const CostEvaluator& cost, std::span<const Demand> demands, const SearchBudget& budget)
      : net_(net), cost_(cost), demands_(demands), meter_(budget), order_(demands.size()),
        loads_(demands.size() + 1, std::vector<double>(net.linkCount(), 0.0)), choice_(demands.size(), 0) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return demands_[a].bandwidth > demands_[b].bandwidth; });
    rootBound_ = cost_(loads_[0]);
  }

  void run() { descend(0); }

  bool found() const noexcept { return found_; }
  bool complete() const noexcept { return !meter_.exhausted(); }
  const std::vector<std::size_t>& bestChoice() const noexcept { return best_; }
  const detail::BudgetMeter& meter() const noexcept { return meter_; }

 private:
  bool done() const { return meter_.exhausted() || (found() && incumbent_ <= rootBound_); }

  void descend(std::size_t depth) {
    if (depth == demands_.size()) {
      const double c = cost_(loads_[depth]);
      if (c < incumbent_) {
        incumbent_ = c;
        found_ = true;
        best_.resize(demands_.size());
        for (std::size_t i = 0; i < demands_.size(); ++i) best_[order_[i]] = choice_[i];
      }
      return;
    }
    const Demand& d = demands_[order_[depth]];
    const auto paths = net_.paths(d.source, d.destination);
    std::vector<std::pair<double, std::size_t>> children;
    children.reserve(paths.size());
    std::vector<double>& next = loads_[depth + 1];
    for (std::size_t i = 0; i < paths.size(); ++i) {
      next = loads_[depth];
      addPathLoad(next, paths[i], d.bandwidth);
      children.emplace_back(cost_(next), i);
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [bound, i] : children) {
      if (done()) return;
      // Completions only add load, so their cost is at least `bound`.
      if (found() && bound >= incumbent_) return;
      if (meter_.tick()) return;
      next = loads_[depth];
      addPathLoad(next, paths[i], d.bandwidth);
      choice_[depth] = i;
      descend(depth + 1);
    }
  }

  const Network& net_;
  const CostEvaluator& cost_;
  std::span<const Demand> demands_;
  detail::BudgetMeter meter_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<double>> loads_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> best_;
  double incumbent_ = std::numeric_limits<double>::infinity();
  double rootBound_ = 0.0;
  bool found_ = false;
};

}  // namespace

TeExactResult solveTeExact(const Network& net, const CostFunctionSet& costSet, std::span<const Demand> demands,
                           const SearchBudget& budget) {
  for (const auto& d : demands) {
    if (net.paths(d.source, d.destination).empty()) {
      throw InfeasibleError("background demand '" + d.id + "' has no candidate path from '" + net.nodeName(d.source) +
                            "' to '" + net.nodeName(d.destination) + "'");
    }
  }
  const CostEvaluator cost(net, costSet);
  TeSearch search(net, cost, demands, budget);
  search.run();
  if (!search.found() || (!search.complete() && budget.optimalityRequired)) {
    throw BudgetExhausted("TE search stopped after " + std::to_string(search.meter().explored()) +
                          " nodes without " + (search.found() ? "proving optimality" : "a solution"));
  }

  TeExactResult result;
  result.solution.assignment.reserve(demands.size());
  for (std::size_t i = 0; i < demands.size(); ++i) {
    result.solution.assignment.push_back(net.paths(demands[i].source, demands[i].destination)[search.bestChoice()[i]]);
  }
  result.cost = objective(cost, accumulateLoads(net, demands, result.solution));
  result.provenOptimal = search.complete();
  result.explored = search.meter().explored();
  result.elapsedSeconds = search.meter().seconds();
  return result;
}

}  // namespace vnfp
