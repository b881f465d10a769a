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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnfp/cost_model.hpp"
#include "vnfp/topology.hpp"
#include "vnfp/traffic.hpp"

namespace vnfp {

/// Background routing: assignment[i] is the path of background demand i.
struct TeSolution {
  std::vector<Path> assignment;

  bool operator==(const TeSolution&) const = default;
};

/// Decisions for one service chain.
struct ChainSolution {
  std::vector<Path> selectedPaths;              ///< paths the chain may use
  std::vector<std::vector<NodeId>> placements;  ///< placements[v]: nodes hosting VNF v
  std::vector<Path> demandPaths;                ///< demandPaths[d]: path of chain demand d

  /// Number of extra paths beyond the first.
  std::size_t replicaCount() const noexcept { return selectedPaths.empty() ? 0 : selectedPaths.size() - 1; }
  bool operator==(const ChainSolution&) const = default;
};

/// Placement and chain routing; chains[s] belongs to service chain s.
struct RaSolution {
  std::vector<ChainSolution> chains;

  bool operator==(const RaSolution&) const = default;
};

/// Per-link load in Mbps, split by traffic class.
struct LoadLedger {
  std::vector<double> background;
  std::vector<double> chain;

  double total(LinkId l) const { return background.at(index(l)) + chain.at(index(l)); }
  std::vector<double> totals() const;
};

/// Adds `bandwidth` to every link of `path`.
void addPathLoad(std::span<double> loads, const Path& path, double bandwidth);

/// Background loads from a TE solution. Throws Error when a demand has no path.
std::vector<double> backgroundLoads(const Network& net, std::span<const Demand> demands, const TeSolution& te);

/// Chain loads from an RA solution. Throws Error when a chain demand has no path.
std::vector<double> chainLoads(const Network& net, std::span<const ServiceChain> chains, const RaSolution& ra);

LoadLedger accumulateLoads(const Network& net, std::span<const Demand> demands, const TeSolution& te);
LoadLedger accumulateLoads(const Network& net, std::span<const Demand> demands, const TeSolution& te,
                           std::span<const ServiceChain> chains, const RaSolution& ra);

/// Sum of link costs over background plus chain loads.
double objective(const CostEvaluator& cost, const LoadLedger& ledger);
double objective(const Network& net, const CostFunctionSet& costSet, const LoadLedger& ledger);

/// Per-link utilization (total load / capacity).
std::vector<double> utilization(const Network& net, const LoadLedger& ledger);

// ---------------------------------------------------------------------------
// Validation

enum class Constraint {
  SinglePathRouting,    ///< each demand on exactly one well-formed path with the right endpoints
  ChainPathCoupling,    ///< a chain demand only uses paths its chain selected
  PathCount,            ///< between 1 and rMax + 1 distinct selected paths per chain
  FunctionsOnPath,      ///< every selected path visits a host of every VNF
  ReplicaDistinctness,  ///< two selected paths never share a node hosting a replicable VNF
  SequenceOrder,        ///< a host of VNF v is preceded on the path by a host of VNF v-1
  NodeCapacity,         ///< at most one VNF per node; border gateways host none
  ReplicaCap,           ///< at most 1 + rMax hosts for replicable VNFs, 1 otherwise
  LinkCapacity,         ///< load within capacity (optional)
};

std::string_view constraintName(Constraint c) noexcept;

struct Violation {
  Constraint constraint;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Constraint c) const noexcept;
  std::string summary() const;
};

struct ValidationOptions {
  bool enforceCapacity = true;
};

/// Checks a TE solution alone.
ValidationReport validate(const Network& net, std::span<const Demand> demands, const TeSolution& te,
                          ValidationOptions options = {});

/// Checks TE and RA decisions together; capacity is checked on their combined load.
ValidationReport validate(const Network& net, std::span<const Demand> demands, const TeSolution& te,
                          std::span<const ServiceChain> chains, const RaSolution& ra, ValidationOptions options = {});

/// Checks RA decisions against fixed background loads.
ValidationReport validateChains(const Network& net, std::span<const double> backgroundLoad,
                                std::span<const ServiceChain> chains, const RaSolution& ra,
                                ValidationOptions options = {});

}  // namespace vnfp
