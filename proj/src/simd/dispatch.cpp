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

#include <cstdlib>
#include <string>

#include "vnfp/error.hpp"
#include "vnfp/simd/cost_kernels.hpp"

namespace vnfp::simd {

namespace {

constexpr CostKernels kScalar{Isa::Scalar, &scalar::costSum, &scalar::costSumSplit, &scalar::countAbove};
#if VNFP_HAVE_AVX2_KERNELS
constexpr CostKernels kAvx2{Isa::Avx2, &avx2::costSum, &avx2::costSumSplit, &avx2::countAbove};
#endif

const CostKernels& selectActive() {
  const char* forced = std::getenv("VNFP_SIMD");
  if (forced != nullptr && std::string(forced) == "scalar") return kScalar;
#if VNFP_HAVE_AVX2_KERNELS
  if (isaAvailable(Isa::Avx2)) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

bool isaAvailable(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if VNFP_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isaName(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

const CostKernels& kernelsFor(Isa isa) {
  if (!isaAvailable(isa)) throw Error("instruction set '" + std::string(isaName(isa)) + "' is not available");
#if VNFP_HAVE_AVX2_KERNELS
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const CostKernels& activeKernels() {
  static const CostKernels& active = selectActive();
  return active;
}

}  // namespace vnfp::simd
