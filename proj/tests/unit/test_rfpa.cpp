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

#include <map>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "vnfp/error.hpp"
#include "vnfp/exact.hpp"
#include "vnfp/rfpa.hpp"

using namespace vnfp;
using namespace vnfp::testing;

TEST_CASE("RFPA is deterministic and valid") {
  // A 2x4 ladder: roomy enough that the first chain's replicas never crowd
  // out the second chain (random placement does not backtrack).
  const Network net = withCatalog(makeNetwork({"A", "B", "C", "D", "E", "F", "G", "H"},
                                              {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"E", "F"}, {"F", "G"}, {"G", "H"},
                                               {"A", "E"}, {"B", "F"}, {"C", "G"}, {"D", "H"}}));
  const auto set = defaultCostSet();
  const std::vector<double> bg(net.linkCount(), 30.0);
  for (std::size_t r = 0; r <= 2; ++r) {
    const std::vector<ServiceChain> chains{makeChain(net, "c1", "H", 2, {30.0, 30.0, 30.0}, r),
                                           makeChain(net, "c2", "A", 2, {20.0, 20.0}, r)};
    const double optimum = solveRaExact(net, set, chains, bg).cost;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto a = runRfpa(net, set, chains, bg, seed);
      const auto b = runRfpa(net, set, chains, bg, seed);
      CHECK(a.solution == b.solution);
      CHECK(a.attempts >= 2);
      CHECK(validateChains(net, bg, chains, a.solution, {.enforceCapacity = false}).ok());
      CHECK(a.cost >= optimum);
    }
  }
}

TEST_CASE("RFPA picks anchors and paths uniformly") {
  const Network net = diamond(100.0);
  const std::vector<double> bg(net.linkCount(), 0.0);
  const std::vector<ServiceChain> chains{makeChain(net, "c", "G", 1, {1.0}, 0)};
  std::map<std::string, int> anchors;
  int viaA = 0;
  int fromS = 0;
  const int runs = 1000;
  for (int seed = 0; seed < runs; ++seed) {
    const auto r = runRfpa(net, defaultCostSet(), chains, bg, static_cast<std::uint64_t>(seed));
    const auto& cs = r.solution.chains[0];
    ++anchors[net.nodeName(cs.placements[0][0])];
    if (cs.placements[0][0] == net.node("S")) {
      ++fromS;
      if (cs.selectedPaths[0].contains(net.node("A"))) ++viaA;
    }
  }
  CHECK(anchors.size() == 3);
  for (const auto& [name, count] : anchors) {
    CAPTURE(name);
    CHECK(count > runs / 4);
    CHECK(count < runs * 5 / 12);
  }
  CHECK(viaA > fromS * 35 / 100);
  CHECK(viaA < fromS * 65 / 100);
}

TEST_CASE("RFPA gives up on an unplaceable chain") {
  const Network line = withCatalog(makeNetwork({"A", "B", "G"}, {{"A", "B"}, {"B", "G"}}));
  const std::vector<double> bg(line.linkCount(), 0.0);
  const std::vector<ServiceChain> chains{makeChain(line, "c", "G", 4, {1.0}, 0)};
  CHECK_THROWS_AS(runRfpa(line, defaultCostSet(), chains, bg, 1, 200), InfeasibleError);
}
