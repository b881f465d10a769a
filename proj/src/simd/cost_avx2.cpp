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

// Compiled with -mavx2 only; dispatch guarantees these run on AVX2 hardware.
// No FMA: products and differences must round exactly like the scalar path.

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "vnfp/simd/cost_kernels.hpp"

namespace vnfp::simd::avx2 {

namespace {

inline __m256d pieceMax(__m256d u, std::span<const double> slopes, std::span<const double> intercepts) {
  __m256d best = _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(slopes[0]), u), _mm256_set1_pd(intercepts[0]));
  for (std::size_t j = 1; j < slopes.size(); ++j) {
    __m256d v = _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(slopes[j]), u), _mm256_set1_pd(intercepts[j]));
    // (v > best) ? v : best, matching std::max(best, v).
    best = _mm256_max_pd(v, best);
  }
  return best;
}

inline double pieceMaxScalar(double u, std::span<const double> slopes, std::span<const double> intercepts) {
  double best = slopes[0] * u - intercepts[0];
  for (std::size_t j = 1; j < slopes.size(); ++j) best = std::max(best, slopes[j] * u - intercepts[j]);
  return best;
}

inline double foldInOrder(double acc, __m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  acc += lanes[0];
  acc += lanes[1];
  acc += lanes[2];
  acc += lanes[3];
  return acc;
}

}  // namespace

double costSum(std::span<const double> load, std::span<const double> capacity,
               std::span<const double> slopes, std::span<const double> intercepts) {
  const std::size_t n = load.size();
  double acc = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d u = _mm256_div_pd(_mm256_loadu_pd(load.data() + i), _mm256_loadu_pd(capacity.data() + i));
    acc = foldInOrder(acc, pieceMax(u, slopes, intercepts));
  }
  for (; i < n; ++i) acc += pieceMaxScalar(load[i] / capacity[i], slopes, intercepts);
  return acc;
}

double costSumSplit(std::span<const double> base, std::span<const double> extra,
                    std::span<const double> capacity, std::span<const double> slopes,
                    std::span<const double> intercepts) {
  const std::size_t n = base.size();
  double acc = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d load = _mm256_add_pd(_mm256_loadu_pd(base.data() + i), _mm256_loadu_pd(extra.data() + i));
    __m256d u = _mm256_div_pd(load, _mm256_loadu_pd(capacity.data() + i));
    acc = foldInOrder(acc, pieceMax(u, slopes, intercepts));
  }
  for (; i < n; ++i) acc += pieceMaxScalar((base[i] + extra[i]) / capacity[i], slopes, intercepts);
  return acc;
}

std::size_t countAbove(std::span<const double> load, std::span<const double> capacity, double threshold) {
  const std::size_t n = load.size();
  const __m256d t = _mm256_set1_pd(threshold);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d u = _mm256_div_pd(_mm256_loadu_pd(load.data() + i), _mm256_loadu_pd(capacity.data() + i));
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(u, t, _CMP_GT_OQ));
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) count += (load[i] / capacity[i] > threshold) ? 1 : 0;
  return count;
}

}  // namespace vnfp::simd::avx2
