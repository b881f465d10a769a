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
#include "vnfp/error.hpp"
#include "vnfp/exact.hpp"
#include "vnfp/ga.hpp"

using namespace vnfp;
using namespace vnfp::testing;

namespace {

GaParams small(std::uint64_t seed) {
  GaParams p;
  p.populationSize = 30;
  p.generations = 40;
  p.seed = seed;
  return p;
}

Network sixNodes() {
  return withCatalog(makeNetwork({"A", "B", "C", "D", "E", "F"},
                                 {{"A", "B"}, {"B", "C"}, {"C", "F"}, {"A", "D"}, {"D", "E"}, {"E", "F"}, {"B", "E"}}));
}

}  // namespace

TEST_CASE("GA parameters are checked") {
  GaParams p;
  CHECK_NOTHROW(p.check());
  p.populationSize = 1;
  CHECK_THROWS_AS(p.check(), Error);
  p = {};
  p.crossoverRate = 1.5;
  CHECK_THROWS_AS(p.check(), Error);
  p = {};
  p.eliteCount = p.populationSize + 1;
  CHECK_THROWS_AS(p.check(), Error);
}

TEST_CASE("TE-GA is deterministic, thread-independent and bracketed by the optimum") {
  const Network net = diamond(100.0);
  const auto set = defaultCostSet();
  const std::vector<Demand> demands{{"d1", net.node("S"), net.node("G"), 70.0},
                                    {"d2", net.node("S"), net.node("G"), 70.0},
                                    {"d3", net.node("A"), net.node("B"), 30.0}};
  const auto a = runTeGa(net, set, demands, small(3));
  auto threaded = small(3);
  threaded.threads = 4;
  const auto b = runTeGa(net, set, demands, threaded);
  CHECK(a.solution == b.solution);
  CHECK(a.cost == b.cost);
  CHECK(a.cost >= solveTeExact(net, set, demands).cost);
  CHECK(validate(net, demands, a.solution).ok());
  REQUIRE(a.trace.size() == 41);
  for (std::size_t g = 1; g < a.trace.size(); ++g) CHECK(a.trace[g].bestCost <= a.trace[g - 1].bestCost);
  CHECK(a.trace.back().bestCost == a.cost);
}

TEST_CASE("RA-GA and RR-GA produce valid, bracketed solutions") {
  const Network net = sixNodes();
  const auto set = defaultCostSet();
  const std::vector<double> bg(net.linkCount(), 30.0);
  for (std::size_t r = 0; r <= 2; ++r) {
    CAPTURE(r);
    const std::vector<ServiceChain> chains{makeChain(net, "c1", "F", 2, {30.0, 30.0, 30.0}, r),
                                           makeChain(net, "c2", "A", 2, {20.0, 20.0}, r)};
    const auto ra = runRaGa(net, set, chains, bg, small(1));
    CHECK(validateChains(net, bg, withReplicaBudget(chains, 0), ra.solution, {.enforceCapacity = false}).ok());
    const auto rr = runRrGa(net, set, chains, bg, ra.solution, small(1));
    CHECK(validateChains(net, bg, chains, rr.solution, {.enforceCapacity = false}).ok());
    CHECK(rr.cost <= ra.cost);
    CHECK(rr.cost >= solveRaExact(net, set, chains, bg).cost);
    CHECK(rr.replicaCounts.size() == 2);
    for (std::size_t c : rr.replicaCounts) CHECK(c <= r);
    CHECK(rr.traces.size() <= r);
    const auto again = runRrGa(net, set, chains, bg, ra.solution, small(1));
    CHECK(again.solution == rr.solution);
  }
}

TEST_CASE("RR-GA finds the replica on the diamond") {
  const Network net = diamond(100.0);
  const auto set = defaultCostSet();
  const std::vector<double> bg(net.linkCount(), 0.0);
  const std::vector<ServiceChain> chains{makeChain(net, "c", "G", 2, {40.0, 40.0}, 1)};
  const auto ra = runRaGa(net, set, chains, bg, small(2));
  CHECK(ra.cost > 0.0);
  const auto rr = runRrGa(net, set, chains, bg, ra.solution, small(2));
  CHECK(rr.cost == 0.0);
  CHECK(rr.replicaCounts == std::vector<std::size_t>{1});
}

TEST_CASE("RA-GA reports an unplaceable chain") {
  const Network line = withCatalog(makeNetwork({"A", "B", "G"}, {{"A", "B"}, {"B", "G"}}));
  const std::vector<double> bg(line.linkCount(), 0.0);
  const std::vector<ServiceChain> chains{makeChain(line, "c", "G", 4, {1.0}, 0)};
  CHECK_THROWS_AS(runRaGa(line, defaultCostSet(), chains, bg, small(1)), InfeasibleError);
}

TEST_CASE("trace CSV") {
  const std::vector<GaTracePoint> t{{0, 2.0, 3.0}, {1, 1.5, 2.5}};
  CHECK(traceCsv(t) == "generation,bestCost,meanCost\n0,2,3\n1,1.5,2.5\n");
}
