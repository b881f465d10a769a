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

// Per-link cost reductions shared by every solver's objective.
//
// Each kernel exists as a scalar reference and an AVX2 variant. The AVX2
// variant vectorizes the per-link work (utilization, max over cost pieces)
// but folds the per-link results into the sum in link order, so both
// variants return bit-identical values.

#include <cstddef>
#include <span>
#include <string_view>

namespace vnfp::simd {

enum class Isa { Scalar, Avx2 };

struct CostKernels {
  Isa isa;
  /// Sum over links of max_j(slope_j * load/capacity - intercept_j).
  double (*costSum)(std::span<const double> load, std::span<const double> capacity,
                    std::span<const double> slopes, std::span<const double> intercepts);
  /// Same as costSum with load = base + extra, element-wise.
  double (*costSumSplit)(std::span<const double> base, std::span<const double> extra,
                         std::span<const double> capacity, std::span<const double> slopes,
                         std::span<const double> intercepts);
  /// Number of links with load/capacity strictly above `threshold`.
  std::size_t (*countAbove)(std::span<const double> load, std::span<const double> capacity,
                            double threshold);
};

bool isaAvailable(Isa isa) noexcept;
std::string_view isaName(Isa isa) noexcept;

/// Kernels for a specific ISA; throws vnfp::Error if the CPU lacks it.
const CostKernels& kernelsFor(Isa isa);

/// Best available kernels. Setting VNFP_SIMD=scalar in the environment forces
/// the scalar reference.
const CostKernels& activeKernels();

namespace scalar {
double costSum(std::span<const double> load, std::span<const double> capacity,
               std::span<const double> slopes, std::span<const double> intercepts);
double costSumSplit(std::span<const double> base, std::span<const double> extra,
                    std::span<const double> capacity, std::span<const double> slopes,
                    std::span<const double> intercepts);
std::size_t countAbove(std::span<const double> load, std::span<const double> capacity,
                       double threshold);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define VNFP_HAVE_AVX2_KERNELS 1
namespace avx2 {
double costSum(std::span<const double> load, std::span<const double> capacity,
               std::span<const double> slopes, std::span<const double> intercepts);
double costSumSplit(std::span<const double> base, std::span<const double> extra,
                    std::span<const double> capacity, std::span<const double> slopes,
                    std::span<const double> intercepts);
std::size_t countAbove(std::span<const double> load, std::span<const double> capacity,
                       double threshold);
}  // namespace avx2
#else
#define VNFP_HAVE_AVX2_KERNELS 0
#endif

}  // namespace vnfp::simd
