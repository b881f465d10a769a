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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnfp/cost_model.hpp"
#include "vnfp/exact.hpp"
#include "vnfp/ga.hpp"
#include "vnfp/io.hpp"
#include "vnfp/solution.hpp"
#include "vnfp/topology.hpp"
#include "vnfp/traffic.hpp"

namespace vnfp {

enum class SolverKind { Exact, Ga, Rfpa };

std::string_view solverName(SolverKind s) noexcept;
std::optional<SolverKind> parseSolver(std::string_view name);

struct ExperimentConfig {
  std::string topologyPath;
  /// Reported topology name; defaults to the file name without extension.
  std::string topologyName;
  std::optional<double> capacityOverride = 2500.0;
  /// When absent, the evaluation profile matching the topology name is used.
  std::optional<TrafficProfile> trafficProfile;
  std::size_t chainCount = 2;
  std::size_t vnfsPerChain = 2;
  std::vector<std::size_t> rMaxSweep{0, 1, 2};
  std::vector<SolverKind> solvers{SolverKind::Exact, SolverKind::Ga, SolverKind::Rfpa};
  GaParams gaParams;
  std::vector<std::uint64_t> seeds{1};
  std::string outputDir = "out";
  std::size_t pathsPerPair = 5;
  /// Defaults to diameter + 2.
  std::optional<std::size_t> maxHops;
  SearchBudget teBudget{2'000'000, 1800.0, false};
  SearchBudget raBudget{20'000'000, 1800.0, false};

  /// Throws Error when the sweep or seed list is empty or a value is out of range.
  void check() const;
  /// Topology name after applying the default.
  std::string resolvedTopologyName() const;
  /// Traffic profile after applying the per-topology default.
  TrafficProfile resolvedTrafficProfile() const;
};

ExperimentConfig configFromJson(const io::Json& j);
io::Json toJson(const ExperimentConfig& config);

/// Loads the topology, applies the capacity override and builds the path catalog.
Network prepareNetwork(const ExperimentConfig& config);

/// One seed's inputs: background traffic routed by the TE stage, plus the
/// service chains (rMax 0; cells raise it).
struct Instance {
  Network network;
  CostFunctionSet costSet = defaultCostSet();
  std::vector<Demand> background;
  TeSolution te;
  std::string teMethod;  ///< "exact" or "ga"
  double teCost = 0.0;
  bool teProvenOptimal = false;
  std::vector<ServiceChain> chains;
  std::uint64_t seed = 0;

  std::vector<double> backgroundLoad() const { return backgroundLoads(network, background, te); }
};

/// Generates traffic and chains for `seed` and solves the TE stage: the exact
/// solver within config.teBudget, falling back to TE-GA (keeping the cheaper
/// routing) when the budget runs out.
Instance prepareInstance(const ExperimentConfig& config, const Network& net, std::uint64_t seed,
                         const CostFunctionSet& costSet = defaultCostSet());

enum class RunStatus { Ok, BudgetExhausted, Infeasible };
std::string_view statusName(RunStatus s) noexcept;

struct RunRecord {
  std::string topology;
  std::size_t nodeCount = 0;
  SolverKind solver = SolverKind::Exact;
  std::size_t rMax = 0;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::Ok;
  std::string detail;  ///< reason when status is not Ok
  double cost = 0.0;   ///< background plus chain traffic
  std::vector<std::size_t> replicaCounts;
  std::vector<double> perLinkUtilization;
  double elapsedSeconds = 0.0;
  bool provenOptimal = false;
  std::optional<RaSolution> solution;
  std::vector<std::vector<GaTracePoint>> gaTraces;  ///< RA-GA, then one per replica level
  std::shared_ptr<const Instance> instance;

  bool hasSolution() const noexcept { return solution.has_value(); }
  std::vector<ServiceChain> chains() const { return withReplicaBudget(instance->chains, rMax); }
  io::SolutionDocument document() const;
};

/// Runs one solver at one rMax on a prepared instance. The solution is
/// validated (capacity not enforced); a violation throws Error.
RunRecord runCell(const ExperimentConfig& config, const std::shared_ptr<const Instance>& instance,
                  SolverKind solver, std::size_t rMax);

/// Every seed, then every rMax, then every solver, in config order; cells run
/// one after another so elapsed times are not skewed by each other.
std::vector<RunRecord> runExperiment(const ExperimentConfig& config,
                                     const CostFunctionSet& costSet = defaultCostSet());

/// solver,rMax,utilizationBin,linkFraction: for bins with upper edges
/// 0.05, 0.10, ..., 1.20, the share of links (pooled over seeds) whose
/// utilization is at most the edge.
std::string emitUtilizationCdf(std::span<const RunRecord> records);

/// topology,solver,rMax,meanCost,stdCost,meanReplicas over records with a
/// solution; stdCost is the population deviation, meanReplicas the mean of
/// the per-run replica total.
std::string emitCostTable(std::span<const RunRecord> records);

/// topology,nodeCount,solver,rMax,meanElapsed sorted by node count.
std::string emitRuntimeTable(std::span<const RunRecord> records);

/// Writes the three tables, one solution JSON per solved record, GA traces and
/// `configText` (the config as given) into config.outputDir.
void writeExperimentOutputs(const ExperimentConfig& config, std::span<const RunRecord> records,
                            const std::string& configText);

}  // namespace vnfp
