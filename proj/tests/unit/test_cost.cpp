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

#include <cmath>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "vnfp/cost_model.hpp"
#include "vnfp/error.hpp"
#include "vnfp/rng.hpp"

using namespace vnfp;
using namespace vnfp::testing;

TEST_CASE("default cost set interpolates the curve at its breakpoints") {
  const auto set = defaultCostSet();
  CHECK(set.functions().size() == 5);
  CHECK(linkCost(set, 0.0) == 0.0);
  CHECK(linkCost(set, 0.6) == doctest::Approx(0.0).epsilon(1e-12));
  for (double u : {0.7, 0.8, 0.9, 1.0}) {
    CHECK(linkCost(set, u) == doctest::Approx(defaultCostCurve(u)).epsilon(1e-12));
  }
  CHECK(defaultCostCurve(0.7) == doctest::Approx((std::exp(1.0) - 1.0) / (std::exp(4.0) - 1.0)));
  CHECK(linkCost(set, 1.0) == doctest::Approx(1.0));
  // Between breakpoints the secants lie above the convex curve.
  CHECK(linkCost(set, 0.85) >= defaultCostCurve(0.85));
  // Beyond 100% the steepest piece continues.
  CHECK(linkCost(set, 1.1) > 1.0);
}

TEST_CASE("cost set construction rules") {
  CHECK_THROWS_AS(CostFunctionSet({}), Error);
  CHECK_THROWS_AS(CostFunctionSet({{1.0, 0.5}}), Error);
  CHECK_THROWS_AS(CostFunctionSet({{0.0, 0.0}, {-1.0, 0.0}}), Error);
  CHECK_NOTHROW(CostFunctionSet({{0.0, 0.0}, {2.0, 1.0}}));
}

TEST_CASE("network cost sums link costs") {
  const Network net = diamond(100.0);
  const auto set = defaultCostSet();
  std::vector<double> load{70.0, 0.0, 100.0, 10.0};
  const double expected = linkCost(set, 0.7) + linkCost(set, 1.0);
  CHECK(totalNetworkCost(net, set, load) == doctest::Approx(expected));
  CHECK(totalNetworkCost(net, set, load) == referenceCost(net, set, load));
  const std::map<LinkId, double> sparse{{linkAt(0), 70.0}, {linkAt(2), 100.0}};
  CHECK(totalNetworkCost(net, set, sparse) == totalNetworkCost(net, set, load));
  const CostEvaluator eval(net, set);
  const std::vector<double> base{35.0, 0.0, 50.0, 10.0};
  const std::vector<double> extra{35.0, 0.0, 50.0, 0.0};
  CHECK(eval(base, extra) == eval(load));
}

TEST_CASE("scalar and AVX2 kernels agree bit for bit") {
  if (!simd::isaAvailable(simd::Isa::Avx2)) {
    MESSAGE("AVX2 not available; only the scalar kernel is exercised");
    return;
  }
  const auto& s = simd::kernelsFor(simd::Isa::Scalar);
  const auto& v = simd::kernelsFor(simd::Isa::Avx2);
  const auto set = defaultCostSet();
  Rng rng(11);
  for (std::size_t n = 0; n <= 37; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> load(n), extra(n), cap(n);
      for (std::size_t i = 0; i < n; ++i) {
        cap[i] = 50.0 + 2500.0 * rng.unit();
        load[i] = cap[i] * 1.3 * rng.unit();
        extra[i] = rep % 3 == 0 ? 0.0 : cap[i] * 0.4 * rng.unit();
      }
      CHECK(s.costSum(load, cap, set.slopes(), set.intercepts()) ==
            v.costSum(load, cap, set.slopes(), set.intercepts()));
      CHECK(s.costSumSplit(load, extra, cap, set.slopes(), set.intercepts()) ==
            v.costSumSplit(load, extra, cap, set.slopes(), set.intercepts()));
      CHECK(s.countAbove(load, cap, 0.6) == v.countAbove(load, cap, 0.6));
    }
  }
}

TEST_CASE("active kernels can be forced to scalar") {
  CHECK(simd::isaName(simd::Isa::Scalar) == "scalar");
  CHECK(simd::kernelsFor(simd::Isa::Scalar).isa == simd::Isa::Scalar);
  const auto isa = simd::activeKernels().isa;
  CHECK(simd::isaAvailable(isa));
}
