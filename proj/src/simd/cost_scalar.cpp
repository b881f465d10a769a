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

#include "vnfp/simd/cost_kernels.hpp"

namespace vnfp::simd::scalar {

namespace {

inline double pieceMax(double u, std::span<const double> slopes, std::span<const double> intercepts) {
  double best = slopes[0] * u - intercepts[0];
  for (std::size_t j = 1; j < slopes.size(); ++j) best = std::max(best, slopes[j] * u - intercepts[j]);
  return best;
}

}  // namespace

double costSum(std::span<const double> load, std::span<const double> capacity,
               std::span<const double> slopes, std::span<const double> intercepts) {
  double acc = 0.0;
  for (std::size_t i = 0; i < load.size(); ++i) acc += pieceMax(load[i] / capacity[i], slopes, intercepts);
  return acc;
}

double costSumSplit(std::span<const double> base, std::span<const double> extra,
                    std::span<const double> capacity, std::span<const double> slopes,
                    std::span<const double> intercepts) {
  double acc = 0.0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    acc += pieceMax((base[i] + extra[i]) / capacity[i], slopes, intercepts);
  }
  return acc;
}

std::size_t countAbove(std::span<const double> load, std::span<const double> capacity, double threshold) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < load.size(); ++i) n += (load[i] / capacity[i] > threshold) ? 1 : 0;
  return n;
}

}  // namespace vnfp::simd::scalar
