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

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "vnfp/error.hpp"
#include "vnfp/exact.hpp"
#include "vnfp/rng.hpp"

using namespace vnfp;
using namespace vnfp::testing;

TEST_CASE("exact TE spreads load across the diamond") {
  const Network net = diamond(100.0);
  const auto set = defaultCostSet();
  const std::vector<Demand> demands{{"d1", net.node("S"), net.node("G"), 70.0},
                                    {"d2", net.node("S"), net.node("G"), 70.0}};
  const auto r = solveTeExact(net, set, demands);
  CHECK(r.provenOptimal);
  CHECK(r.solution.assignment[0] != r.solution.assignment[1]);
  CHECK(r.cost == doctest::Approx(4 * linkCost(set, 0.7)));
  CHECK(r.cost == exhaustiveTeOptimum(net, set, demands));
  CHECK(validate(net, demands, r.solution).ok());
}

TEST_CASE("exact TE on random small networks matches brute force") {
  Rng rng(5);
  const auto set = defaultCostSet();
  const Network net = withCatalog(
      makeNetwork({"A", "B", "C", "D", "E"}, {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "E"}, {"E", "A"}, {"A", "C"}}),
      3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Demand> demands;
    for (int i = 0; i < 4; ++i) {
      const auto s = nodeAt(rng.below(5));
      const auto d = nodeAt((index(s) + 1 + rng.below(4)) % 5);
      demands.push_back({"d" + std::to_string(i), s, d, static_cast<double>(20 + rng.below(60))});
    }
    CHECK(solveTeExact(net, set, demands).cost == exhaustiveTeOptimum(net, set, demands));
  }
}

TEST_CASE("exact RA: one replica removes the bottleneck") {
  const Network net = diamond(100.0);
  const auto set = defaultCostSet();
  const std::vector<double> bg(net.linkCount(), 0.0);
  const std::vector<ServiceChain> r0{makeChain(net, "c", "G", 2, {40.0, 40.0}, 0)};
  const std::vector<ServiceChain> r1{makeChain(net, "c", "G", 2, {40.0, 40.0}, 1)};
  const auto a = solveRaExact(net, set, r0, bg);
  const auto b = solveRaExact(net, set, r1, bg);
  CHECK(a.provenOptimal);
  CHECK(a.cost == doctest::Approx(2 * linkCost(set, 0.8)));
  CHECK(a.cost == *exhaustiveRaOptimum(net, set, r0, bg));
  CHECK(b.cost == 0.0);
  CHECK(b.solution.chains[0].replicaCount() == 1);
  CHECK(validateChains(net, bg, r0, a.solution).ok());
  CHECK(validateChains(net, bg, r1, b.solution).ok());
}

TEST_CASE("exact RA is non-increasing in rMax") {
  const Network net = withCatalog(makeNetwork(
      {"A", "B", "C", "D", "E", "F"}, {{"A", "B"}, {"B", "C"}, {"C", "F"}, {"A", "D"}, {"D", "E"}, {"E", "F"}, {"B", "E"}}));
  const auto set = defaultCostSet();
  std::vector<double> bg(net.linkCount(), 30.0);
  double previous = 1e300;
  for (std::size_t r = 0; r <= 2; ++r) {
    const std::vector<ServiceChain> chains{makeChain(net, "c1", "F", 2, {30.0, 30.0, 30.0}, r),
                                           makeChain(net, "c2", "A", 2, {20.0, 20.0}, r)};
    const auto res = solveRaExact(net, set, chains, bg);
    CHECK(res.cost <= previous);
    CHECK(validateChains(net, bg, chains, res.solution, {.enforceCapacity = false}).ok());
    CHECK(res.cost == *exhaustiveRaOptimum(net, set, chains, bg));
    previous = res.cost;
  }
}

TEST_CASE("exact RA reports infeasibility and budget exhaustion") {
  const Network line = withCatalog(makeNetwork({"A", "B", "G"}, {{"A", "B"}, {"B", "G"}}));
  const std::vector<double> bg(line.linkCount(), 0.0);
  const std::vector<ServiceChain> tooLong{makeChain(line, "c", "G", 4, {1.0}, 0)};
  CHECK_THROWS_AS(solveRaExact(line, defaultCostSet(), tooLong, bg), InfeasibleError);
  CHECK_FALSE(exhaustiveRaOptimum(line, defaultCostSet(), tooLong, bg));

  const Network net = diamond(100.0);
  const std::vector<double> bg2(net.linkCount(), 0.0);
  const std::vector<ServiceChain> chains{makeChain(net, "c", "G", 2, {40.0, 40.0}, 1)};
  CHECK_THROWS_AS(solveRaExact(net, defaultCostSet(), chains, bg2, {1, 1800.0, true}), BudgetExhausted);
  // Small budgets either stop before any incumbent or return one no better
  // than the optimum.
  const double optimum = solveRaExact(net, defaultCostSet(), chains, bg2).cost;
  bool sawUnproven = false;
  for (std::uint64_t nodes = 1; nodes <= 64; ++nodes) {
    try {
      const auto r = solveRaExact(net, defaultCostSet(), chains, bg2, {nodes, 1800.0, false});
      CHECK(r.cost >= optimum);
      if (r.provenOptimal) CHECK(r.cost == optimum);
      sawUnproven = sawUnproven || !r.provenOptimal;
    } catch (const BudgetExhausted&) {
    }
  }
  CHECK(sawUnproven);
}
