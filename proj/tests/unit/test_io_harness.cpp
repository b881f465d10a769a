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

#include <filesystem>

#include "doctest.h"
#include "support/violations.hpp"
#include "vnfp/error.hpp"
#include "vnfp/harness.hpp"
#include "vnfp/io.hpp"

using namespace vnfp;
using namespace vnfp::testing;

namespace {

RunRecord record(SolverKind s, std::size_t r, double cost, std::vector<double> util) {
  RunRecord rec;
  rec.topology = "t";
  rec.nodeCount = 4;
  rec.solver = s;
  rec.rMax = r;
  rec.cost = cost;
  rec.replicaCounts = {r, 0};
  rec.perLinkUtilization = std::move(util);
  rec.solution = RaSolution{};
  rec.elapsedSeconds = 0.5;
  return rec;
}

}  // namespace

TEST_CASE("JSON round trips") {
  const auto f = validatorFixtures().front();
  const io::SolutionDocument doc{f.network, defaultCostSet(), f.demands, f.chains, f.te, f.ra, 0.0};
  const io::Json j = io::documentToJson(doc);
  CHECK(j.at("perLinkUtilization").size() == f.network.linkCount());
  CHECK(j.at("chains").at(0).at("chainId") == "c1");
  const auto back = io::documentFromJson(io::Json::parse(j.dump()));
  CHECK(back.network == f.network);
  CHECK(back.costSet == defaultCostSet());
  CHECK(back.demands == f.demands);
  CHECK(back.chains == f.chains);
  CHECK(back.te == f.te);
  CHECK(back.ra == f.ra);
  CHECK(io::chainsFromJson(f.network, io::chainsToJson(f.network, f.chains)) == f.chains);
  CHECK_THROWS_AS(io::pathFromJson(f.network, io::Json::array({"S", "Q"})), Error);
}

TEST_CASE("experiment config parsing") {
  const auto j = io::Json::parse(R"({"topologyPath": "x/nobel-us.txt", "seeds": [4, 5], "solvers": ["rfpa"],
                                     "gaParams": {"populationSize": 20}, "rMaxSweep": [0, 2]})");
  const auto c = configFromJson(j);
  CHECK(c.resolvedTopologyName() == "nobel-us");
  CHECK(c.seeds == std::vector<std::uint64_t>{4, 5});
  CHECK(c.solvers == std::vector<SolverKind>{SolverKind::Rfpa});
  CHECK(c.gaParams.populationSize == 20);
  CHECK(c.resolvedTrafficProfile().bgBandwidthMax == 160.0);
  CHECK(configFromJson(toJson(c)).seeds == c.seeds);
  CHECK_THROWS_AS(configFromJson(io::Json::parse(R"({"solvers": ["magic"]})")), Error);
  CHECK_THROWS_AS(configFromJson(io::Json::parse(R"({"topologyPath": "a", "seeds": []})")).check(), Error);
  CHECK(parseSolver("ga") == SolverKind::Ga);
  CHECK_FALSE(parseSolver("nope"));
}

TEST_CASE("tables") {
  SUBCASE("empty input gives headers only") {
    CHECK(emitCostTable({}) == "topology,solver,rMax,meanCost,stdCost,meanReplicas\n");
    CHECK(emitUtilizationCdf({}) == "solver,rMax,utilizationBin,linkFraction\n");
    CHECK(emitRuntimeTable({}) == "topology,nodeCount,solver,rMax,meanElapsed\n");
  }
  SUBCASE("single record") {
    const std::vector<RunRecord> recs{record(SolverKind::Ga, 1, 0.25, {0.1, 0.7})};
    CHECK(emitCostTable(recs) == "topology,solver,rMax,meanCost,stdCost,meanReplicas\nt,ga,1,0.25,0,1\n");
    const std::string cdf = emitUtilizationCdf(recs);
    CHECK(cdf.find("ga,1,0.05,0\n") != std::string::npos);
    CHECK(cdf.find("ga,1,0.10,0.5\n") != std::string::npos);
    CHECK(cdf.find("ga,1,0.70,1\n") != std::string::npos);
    CHECK(cdf.find("ga,1,1.20,1\n") != std::string::npos);
    CHECK(emitRuntimeTable(recs) == "topology,nodeCount,solver,rMax,meanElapsed\nt,4,ga,1,0.5\n");
  }
  SUBCASE("population deviation and infeasible rows") {
    auto a = record(SolverKind::Rfpa, 0, 1.0, {0.2});
    auto b = record(SolverKind::Rfpa, 0, 3.0, {0.9});
    auto c = record(SolverKind::Rfpa, 0, 0.0, {});
    c.solution.reset();
    c.status = RunStatus::Infeasible;
    const std::vector<RunRecord> recs{a, b, c};
    CHECK(emitCostTable(recs) == "topology,solver,rMax,meanCost,stdCost,meanReplicas\nt,rfpa,0,2,1,0\n");
    CHECK(emitRuntimeTable(recs) == "topology,nodeCount,solver,rMax,meanElapsed\nt,4,rfpa,0,0.5\n");
  }
}

TEST_CASE("a small experiment runs end to end") {
  ExperimentConfig c;
  c.topologyPath = std::string(VNFP_DATA_DIR) + "/topologies/nobel-us.txt";
  c.rMaxSweep = {0, 1};
  c.seeds = {1};
  c.gaParams.populationSize = 20;
  c.gaParams.generations = 10;
  c.outputDir = (std::filesystem::temp_directory_path() / "vnfp_unit_experiment").string();
  const auto records = runExperiment(c);
  REQUIRE(records.size() == 6);
  for (const auto& r : records) {
    CAPTURE(solverName(r.solver));
    CHECK(r.status == RunStatus::Ok);
    CHECK(r.topology == "nobel-us");
    CHECK(r.perLinkUtilization.size() == 21);
    const auto doc = r.document();
    CHECK(validate(doc.network, doc.demands, doc.te, doc.chains, doc.ra, {.enforceCapacity = false}).ok());
  }
  CHECK(records[0].cost <= records[1].cost);  // exact vs GA, rMax 0
  writeExperimentOutputs(c, records, "{}");
  const std::filesystem::path dir(c.outputDir);
  CHECK(std::filesystem::exists(dir / "cost_table.csv"));
  CHECK(std::filesystem::exists(dir / "solutions" / "nobel-us_ga_r1_s1.json"));
  CHECK(std::filesystem::exists(dir / "traces" / "nobel-us_ga_r0_s1_ra.csv"));
  std::filesystem::remove_all(dir);
}
