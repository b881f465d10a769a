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

// JSON forms of cost sets, demands, chains and solutions.
//
// Solution document:
//   {
//     "teAssignment": [{"demandId", "pathNodes": [node...]}],
//     "chains": [{"chainId", "selectedPaths": [[node...]],
//                 "placements": [{"vnf", "nodes": [node...]}],
//                 "demandPaths": [{"demandId", "pathNodes": [node...]}]}],
//     "cost": number,
//     "perLinkUtilization": [{"link", "a", "b", "utilization"}],
//     "instance": {"network": <SNDlib native text>, "costSet": [...],
//                  "demands": [...], "chains": [...]}
//   }
// Nodes are referred to by name. "instance" makes the document self-contained
// so it can be re-validated without the original inputs.

#include <string>
#include <vector>

#include "json.hpp"
#include "vnfp/cost_model.hpp"
#include "vnfp/solution.hpp"
#include "vnfp/topology.hpp"
#include "vnfp/traffic.hpp"

namespace vnfp::io {

using Json = nlohmann::json;

/// [{"a": slope, "b": intercept}, ...] with y = a U - b.
Json toJson(const CostFunctionSet& set);
CostFunctionSet costSetFromJson(const Json& j);

Json pathToJson(const Network& net, const Path& path);
/// Throws Error for unknown nodes or a node sequence that is not a path.
Path pathFromJson(const Network& net, const Json& j);

/// [{"id", "source", "destination", "bandwidth"}]
Json demandsToJson(const Network& net, std::span<const Demand> demands);
std::vector<Demand> demandsFromJson(const Network& net, const Json& j);

/// [{"id", "egress", "rMax", "vnfs": [{"index", "replicable"}], "demands": [{"id", "bandwidth"}]}]
Json chainsToJson(const Network& net, std::span<const ServiceChain> chains);
std::vector<ServiceChain> chainsFromJson(const Network& net, const Json& j);

/// Everything needed to re-check a solution.
struct SolutionDocument {
  Network network;
  CostFunctionSet costSet = defaultCostSet();
  std::vector<Demand> demands;
  std::vector<ServiceChain> chains;
  TeSolution te;
  RaSolution ra;
  double cost = 0.0;
};

/// Fills in cost and perLinkUtilization from the decisions themselves.
Json documentToJson(const SolutionDocument& doc);
SolutionDocument documentFromJson(const Json& j);

Json readJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);
std::string readTextFile(const std::string& path);

}  // namespace vnfp::io
