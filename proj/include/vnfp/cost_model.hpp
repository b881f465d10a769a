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

#include <map>
#include <span>
#include <vector>

#include "vnfp/simd/cost_kernels.hpp"
#include "vnfp/topology.hpp"

namespace vnfp {

/// y(U) = slope * U - intercept.
struct LinearCostFunction {
  double slope = 0.0;
  double intercept = 0.0;

  double operator()(double utilization) const noexcept { return slope * utilization - intercept; }
  bool operator==(const LinearCostFunction&) const = default;
};

/// The family of linear pieces whose upper envelope prices a link.
///
/// Always contains the zero function, so link costs are never negative.
class CostFunctionSet {
 public:
  /// Throws Error if empty, if any slope is negative, or if the zero function
  /// is missing.
  explicit CostFunctionSet(std::vector<LinearCostFunction> functions);

  std::span<const LinearCostFunction> functions() const noexcept { return functions_; }
  std::span<const double> slopes() const noexcept { return slopes_; }
  std::span<const double> intercepts() const noexcept { return intercepts_; }

  bool operator==(const CostFunctionSet& other) const { return functions_ == other.functions_; }

 private:
  std::vector<LinearCostFunction> functions_;
  std::vector<double> slopes_;
  std::vector<double> intercepts_;
};

/// Zero function plus the four secants of
/// f(U) = (exp(10 (U - 0.6)) - 1) / (exp(4) - 1) over U = 0.6, 0.7, ..., 1.0.
CostFunctionSet defaultCostSet();

/// The smooth curve the default secants interpolate (0 below 60%).
double defaultCostCurve(double utilization);

/// max_i y_i(U). Values above 1 extrapolate along the steepest piece.
double linkCost(const CostFunctionSet& set, double utilization);

/// Sum of link costs for a dense per-link load vector (Mbps, indexed by LinkId).
double totalNetworkCost(const Network& net, const CostFunctionSet& set, std::span<const double> perLinkLoad);

/// Sparse variant; links absent from the map carry no load.
double totalNetworkCost(const Network& net, const CostFunctionSet& set, const std::map<LinkId, double>& perLinkLoad);

/// Objective evaluator with capacities cached, for solver inner loops.
class CostEvaluator {
 public:
  CostEvaluator(const Network& net, const CostFunctionSet& set,
                const simd::CostKernels& kernels = simd::activeKernels());

  double operator()(std::span<const double> load) const;
  /// Cost of the element-wise sum base + extra.
  double operator()(std::span<const double> base, std::span<const double> extra) const;

  std::size_t linkCount() const noexcept { return capacity_.size(); }
  std::span<const double> capacities() const noexcept { return capacity_; }
  const CostFunctionSet& costSet() const noexcept { return set_; }

 private:
  CostFunctionSet set_;
  std::vector<double> capacity_;
  const simd::CostKernels* kernels_;
};

}  // namespace vnfp
