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

#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "vnfp/error.hpp"
#include "vnfp/traffic.hpp"

using namespace vnfp;
using namespace vnfp::testing;

TEST_CASE("background traffic is deterministic and within bounds") {
  const Network net = diamond();
  TrafficProfile p;
  p.connectionCount = 10;
  p.bgBandwidthMax = 50.0;
  p.seed = 3;
  const auto a = generateBackgroundTraffic(net, p);
  CHECK(a == generateBackgroundTraffic(net, p));
  REQUIRE(a.size() == 10);
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const auto& d : a) {
    CHECK(d.source != d.destination);
    CHECK(d.bandwidth > 0.0);
    CHECK(d.bandwidth <= 50.0);
    pairs.insert({d.source, d.destination});
  }
  CHECK(pairs.size() == 10);
  p.seed = 4;
  CHECK(generateBackgroundTraffic(net, p) != a);
  p.connectionCount = 13;
  CHECK_THROWS_AS(generateBackgroundTraffic(net, p), Error);
}

TEST_CASE("service chains get distinct egress nodes") {
  const Network net = diamond();
  TrafficProfile p;
  p.demandsPerChain = 4;
  p.dcBandwidth = 12.5;
  const auto chains = buildServiceChains(net, 2, 3, p, 9, 1);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0].egress != chains[1].egress);
  for (const auto& c : chains) {
    CHECK_NOTHROW(c.check());
    CHECK(c.vnfs.size() == 3);
    CHECK_FALSE(c.vnfs[0].replicable);
    CHECK(c.vnfs[1].replicable);
    CHECK(c.rMax == 1);
    CHECK(c.hostLimit(0) == 1);
    CHECK(c.hostLimit(2) == 2);
    CHECK(c.demands.size() == 4);
    CHECK(c.totalBandwidth() == 50.0);
  }
  CHECK(buildServiceChains(net, 2, 3, p, 9, 1) == chains);
  CHECK(withReplicaBudget(chains, 2)[1].rMax == 2);
  CHECK_THROWS_AS(buildServiceChains(net, 5, 2, p, 9), Error);
}

TEST_CASE("chain structural checks") {
  const Network net = diamond();
  auto c = makeChain(net, "c", "G", 2, {1.0}, 0);
  CHECK_NOTHROW(c.check());
  c.vnfs[0].replicable = true;
  CHECK_THROWS_AS(c.check(), Error);
  c = makeChain(net, "c", "G", 2, {0.0}, 0);
  CHECK_THROWS_AS(c.check(), Error);
}

TEST_CASE("evaluation profiles") {
  CHECK(evaluationProfiles().size() == 5);
  const auto nobel = findProfile("nobel-us");
  REQUIRE(nobel);
  CHECK(nobel->nodes == 14);
  CHECK(nobel->connections == 30);
  CHECK(nobel->bgBandwidthMax == 160.0);
  CHECK(findProfile("ta2")->dcBandwidth == 45.0);
  CHECK_FALSE(findProfile("nowhere"));
}
