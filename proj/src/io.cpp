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

#include "vnfp/io.hpp"

#include <fstream>
#include <sstream>

#include "vnfp/error.hpp"

namespace vnfp::io {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

const Json& array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw Error(std::string("JSON field '") + key + "' must be an array");
  }
  return j.at(key);
}

}  // namespace

Json toJson(const CostFunctionSet& set) {
  Json out = Json::array();
  for (const auto& f : set.functions()) out.push_back({{"a", f.slope}, {"b", f.intercept}});
  return out;
}

CostFunctionSet costSetFromJson(const Json& j) {
  if (!j.is_array()) throw Error("cost set must be a JSON array of {a, b}");
  std::vector<LinearCostFunction> fs;
  for (const auto& e : j) fs.push_back({field<double>(e, "a"), field<double>(e, "b")});
  return CostFunctionSet(std::move(fs));
}

Json pathToJson(const Network& net, const Path& path) {
  Json out = Json::array();
  for (NodeId n : path.nodes) out.push_back(net.nodeName(n));
  return out;
}

Path pathFromJson(const Network& net, const Json& j) {
  if (!j.is_array()) throw Error("a path must be a JSON array of node names");
  // Kept as written, even when it is not a valid walk, so the validator can
  // report what is wrong with it.
  Path p;
  for (const auto& name : j) p.nodes.push_back(net.node(name.get<std::string>()));
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    const auto l = net.linkBetween(p.nodes[i], p.nodes[i + 1]);
    if (!l) break;
    p.links.push_back(*l);
  }
  return p;
}

Json demandsToJson(const Network& net, std::span<const Demand> demands) {
  Json out = Json::array();
  for (const auto& d : demands) {
    out.push_back({{"id", d.id},
                   {"source", net.nodeName(d.source)},
                   {"destination", net.nodeName(d.destination)},
                   {"bandwidth", d.bandwidth}});
  }
  return out;
}

std::vector<Demand> demandsFromJson(const Network& net, const Json& j) {
  if (!j.is_array()) throw Error("demands must be a JSON array");
  std::vector<Demand> out;
  for (const auto& e : j) {
    out.push_back(Demand{field<std::string>(e, "id"), net.node(field<std::string>(e, "source")),
                         net.node(field<std::string>(e, "destination")), field<double>(e, "bandwidth")});
  }
  return out;
}

Json chainsToJson(const Network& net, std::span<const ServiceChain> chains) {
  Json out = Json::array();
  for (const auto& c : chains) {
    Json vnfs = Json::array();
    for (const auto& v : c.vnfs) vnfs.push_back({{"index", v.index}, {"replicable", v.replicable}});
    Json demands = Json::array();
    for (const auto& d : c.demands) demands.push_back({{"id", d.id}, {"bandwidth", d.bandwidth}});
    out.push_back({{"id", c.id},
                   {"egress", net.nodeName(c.egress)},
                   {"rMax", c.rMax},
                   {"vnfs", vnfs},
                   {"demands", demands}});
  }
  return out;
}

std::vector<ServiceChain> chainsFromJson(const Network& net, const Json& j) {
  if (!j.is_array()) throw Error("chains must be a JSON array");
  std::vector<ServiceChain> out;
  for (const auto& e : j) {
    ServiceChain c;
    c.id = field<std::string>(e, "id");
    c.egress = net.node(field<std::string>(e, "egress"));
    c.rMax = field<std::size_t>(e, "rMax");
    for (const auto& v : array(e, "vnfs")) c.vnfs.push_back({field<std::size_t>(v, "index"), field<bool>(v, "replicable")});
    for (const auto& d : array(e, "demands")) c.demands.push_back({field<std::string>(d, "id"), field<double>(d, "bandwidth")});
    c.check();
    out.push_back(std::move(c));
  }
  return out;
}

Json documentToJson(const SolutionDocument& doc) {
  const Network& net = doc.network;
  Json te = Json::array();
  for (std::size_t i = 0; i < doc.te.assignment.size(); ++i) {
    te.push_back({{"demandId", i < doc.demands.size() ? doc.demands[i].id : std::to_string(i)},
                  {"pathNodes", pathToJson(net, doc.te.assignment[i])}});
  }
  Json chains = Json::array();
  for (std::size_t s = 0; s < doc.ra.chains.size(); ++s) {
    const ChainSolution& cs = doc.ra.chains[s];
    const ServiceChain* chain = s < doc.chains.size() ? &doc.chains[s] : nullptr;
    Json selected = Json::array();
    for (const auto& p : cs.selectedPaths) selected.push_back(pathToJson(net, p));
    Json placements = Json::array();
    for (std::size_t v = 0; v < cs.placements.size(); ++v) {
      Json nodes = Json::array();
      for (NodeId n : cs.placements[v]) nodes.push_back(net.nodeName(n));
      placements.push_back({{"vnf", v}, {"nodes", nodes}});
    }
    Json demandPaths = Json::array();
    for (std::size_t d = 0; d < cs.demandPaths.size(); ++d) {
      const bool named = chain && d < chain->demands.size();
      demandPaths.push_back({{"demandId", named ? chain->demands[d].id : std::to_string(d)},
                             {"pathNodes", pathToJson(net, cs.demandPaths[d])}});
    }
    chains.push_back({{"chainId", chain ? chain->id : std::to_string(s)},
                      {"selectedPaths", selected},
                      {"placements", placements},
                      {"demandPaths", demandPaths}});
  }

  const LoadLedger ledger = doc.ra.chains.empty() ? accumulateLoads(net, doc.demands, doc.te)
                                                  : accumulateLoads(net, doc.demands, doc.te, doc.chains, doc.ra);
  const auto util = utilization(net, ledger);
  Json perLink = Json::array();
  for (std::size_t i = 0; i < net.linkCount(); ++i) {
    const Link& l = net.link(linkAt(i));
    perLink.push_back({{"link", l.id}, {"a", net.nodeName(l.a)}, {"b", net.nodeName(l.b)}, {"utilization", util[i]}});
  }
  return {{"teAssignment", te},
          {"chains", chains},
          {"cost", objective(net, doc.costSet, ledger)},
          {"perLinkUtilization", perLink},
          {"instance",
           {{"network", writeSndlibNative(net, "instance")},
            {"costSet", toJson(doc.costSet)},
            {"demands", demandsToJson(net, doc.demands)},
            {"chains", chainsToJson(net, doc.chains)}}}};
}

SolutionDocument documentFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("instance")) throw Error("solution document has no 'instance' section");
  const Json& inst = j.at("instance");
  SolutionDocument doc{parseSndlibNative(field<std::string>(inst, "network")),
                       costSetFromJson(inst.at("costSet")),
                       {},
                       {},
                       {},
                       {},
                       0.0};
  const Network& net = doc.network;
  doc.demands = demandsFromJson(net, inst.at("demands"));
  doc.chains = chainsFromJson(net, inst.at("chains"));

  const Json& te = array(j, "teAssignment");
  if (te.size() != doc.demands.size()) throw Error("teAssignment does not cover every background demand");
  for (std::size_t i = 0; i < te.size(); ++i) {
    if (field<std::string>(te[i], "demandId") != doc.demands[i].id) {
      throw Error("teAssignment entry " + std::to_string(i) + " does not match demand '" + doc.demands[i].id + "'");
    }
    doc.te.assignment.push_back(pathFromJson(net, te[i].at("pathNodes")));
  }
  for (const auto& c : array(j, "chains")) {
    ChainSolution cs;
    for (const auto& p : array(c, "selectedPaths")) cs.selectedPaths.push_back(pathFromJson(net, p));
    for (const auto& pl : array(c, "placements")) {
      const auto v = field<std::size_t>(pl, "vnf");
      if (v != cs.placements.size()) throw Error("placements must be listed by VNF index");
      std::vector<NodeId> nodes;
      for (const auto& n : array(pl, "nodes")) nodes.push_back(net.node(n.get<std::string>()));
      cs.placements.push_back(std::move(nodes));
    }
    for (const auto& dp : array(c, "demandPaths")) cs.demandPaths.push_back(pathFromJson(net, dp.at("pathNodes")));
    doc.ra.chains.push_back(std::move(cs));
  }
  doc.cost = field<double>(j, "cost");
  return doc;
}

Json readJsonFile(const std::string& path) {
  const std::string text = readTextFile(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("cannot parse JSON in '" + path + "': " + e.what());
  }
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace vnfp::io
