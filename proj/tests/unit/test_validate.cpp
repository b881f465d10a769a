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
#include "support/violations.hpp"
#include "vnfp/solution.hpp"

using namespace vnfp;
using namespace vnfp::testing;

TEST_CASE("validator fixtures report exactly their constraint") {
  for (const auto& f : validatorFixtures()) {
    CAPTURE(f.name);
    const auto report = validate(f.network, f.demands, f.te, f.chains, f.ra);
    CAPTURE(report.summary());
    CHECK(report.ok() == f.expected.empty());
    for (Constraint c : f.expected) CHECK(report.has(c));
    for (const auto& v : report.violations) {
      CHECK(std::find(f.expected.begin(), f.expected.end(), v.constraint) != f.expected.end());
    }
  }
}

TEST_CASE("link capacity is optional") {
  auto f = validatorFixtures().front();
  f.demands[0].bandwidth = 95.0;  // S-X now carries 105 of 100
  CHECK(validate(f.network, f.demands, f.te, f.chains, f.ra).has(Constraint::LinkCapacity));
  CHECK(validate(f.network, f.demands, f.te, f.chains, f.ra, {.enforceCapacity = false}).ok());
  CHECK(validate(f.network, f.demands, f.te).ok());
}

TEST_CASE("loads and objective") {
  const auto f = validatorFixtures().front();
  const auto ledger = accumulateLoads(f.network, f.demands, f.te, f.chains, f.ra);
  const auto sx = *f.network.linkBetween(f.network.node("S"), f.network.node("X"));
  const auto sy = *f.network.linkBetween(f.network.node("S"), f.network.node("Y"));
  CHECK(ledger.background[index(sx)] == 20.0);
  CHECK(ledger.chain[index(sx)] == 10.0);
  CHECK(ledger.total(sy) == 10.0);
  CHECK(objective(f.network, defaultCostSet(), ledger) == 0.0);
  const auto u = utilization(f.network, ledger);
  CHECK(u[index(sx)] == doctest::Approx(0.3));
}

TEST_CASE("chains validated against fixed background") {
  const auto f = validatorFixtures().front();
  const std::vector<double> bg(f.network.linkCount(), 0.0);
  CHECK(validateChains(f.network, bg, f.chains, f.ra).ok());
  RaSolution missing;
  CHECK(validateChains(f.network, bg, f.chains, missing).has(Constraint::SinglePathRouting));
  CHECK_FALSE(constraintName(Constraint::SequenceOrder).empty());
}
