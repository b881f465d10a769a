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

#include "vnfp/cost_model.hpp"

#include <algorithm>
#include <cmath>

#include "vnfp/error.hpp"

namespace vnfp {

CostFunctionSet::CostFunctionSet(std::vector<LinearCostFunction> functions) : functions_(std::move(functions)) {
  if (functions_.empty()) throw Error("cost function set is empty");
  bool hasZero = false;
  for (const auto& f : functions_) {
    if (!(f.slope >= 0.0) || !std::isfinite(f.slope) || !std::isfinite(f.intercept)) {
      throw Error("cost function slopes must be finite and non-negative");
    }
    hasZero = hasZero || (f.slope == 0.0 && f.intercept == 0.0);
    slopes_.push_back(f.slope);
    intercepts_.push_back(f.intercept);
  }
  if (!hasZero) throw Error("cost function set must contain the zero function");
}

double defaultCostCurve(double utilization) {
  if (utilization <= 0.6) return 0.0;
  return std::expm1(10.0 * (utilization - 0.6)) / std::expm1(4.0);
}

CostFunctionSet defaultCostSet() {
  std::vector<LinearCostFunction> pieces{{0.0, 0.0}};
  for (int i = 0; i < 4; ++i) {
    const double u0 = 0.6 + 0.1 * i;
    const double u1 = 0.6 + 0.1 * (i + 1);
    const double f0 = defaultCostCurve(u0);
    const double f1 = defaultCostCurve(u1);
    const double slope = (f1 - f0) / 0.1;
    pieces.push_back({slope, slope * u0 - f0});
  }
  return CostFunctionSet(std::move(pieces));
}

double linkCost(const CostFunctionSet& set, double utilization) {
  const auto slopes = set.slopes();
  const auto intercepts = set.intercepts();
  double best = slopes[0] * utilization - intercepts[0];
  for (std::size_t j = 1; j < slopes.size(); ++j) best = std::max(best, slopes[j] * utilization - intercepts[j]);
  return best;
}

double totalNetworkCost(const Network& net, const CostFunctionSet& set, std::span<const double> perLinkLoad) {
  if (perLinkLoad.size() != net.linkCount()) throw Error("load vector does not match the link count");
  return CostEvaluator(net, set)(perLinkLoad);
}

double totalNetworkCost(const Network& net, const CostFunctionSet& set, const std::map<LinkId, double>& perLinkLoad) {
  std::vector<double> dense(net.linkCount(), 0.0);
  for (const auto& [link, load] : perLinkLoad) {
    if (index(link) >= dense.size()) throw Error("load given for a link outside the network");
    dense[index(link)] = load;
  }
  return totalNetworkCost(net, set, dense);
}

CostEvaluator::CostEvaluator(const Network& net, const CostFunctionSet& set, const simd::CostKernels& kernels)
    : set_(set), capacity_(net.capacities()), kernels_(&kernels) {}

double CostEvaluator::operator()(std::span<const double> load) const {
  return kernels_->costSum(load, capacity_, set_.slopes(), set_.intercepts());
}

double CostEvaluator::operator()(std::span<const double> base, std::span<const double> extra) const {
  return kernels_->costSumSplit(base, extra, capacity_, set_.slopes(), set_.intercepts());
}

}  // namespace vnfp
