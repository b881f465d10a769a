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

#include "vnfp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <tuple>

#include "vnfp/detail/budget.hpp"
#include "vnfp/error.hpp"
#include "vnfp/rfpa.hpp"
#include "vnfp/rng.hpp"

namespace vnfp {

namespace {

constexpr std::size_t kCdfBins = 24;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Seed streams; the GA and RFPA streams do not depend on rMax so a sweep
// compares the solvers on common random numbers.
std::uint64_t trafficSeed(std::uint64_t seed) { return deriveSeed(seed, 1); }
std::uint64_t chainSeed(std::uint64_t seed) { return deriveSeed(seed, 2); }
std::uint64_t rfpaSeed(std::uint64_t seed) { return deriveSeed(seed, 3); }
std::uint64_t gaSeed(const GaParams& p, std::uint64_t seed, std::uint64_t stage) {
  return deriveSeed(deriveSeed(p.seed, seed), stage);
}

template <typename T>
T get(const io::Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad config field '") + key + "': " + e.what());
  }
}

SearchBudget budgetFromJson(const io::Json& j, SearchBudget b) {
  if (!j.is_object()) throw Error("budget must be a JSON object");
  b.maxNodesExplored = get(j, "maxNodesExplored", b.maxNodesExplored);
  b.timeLimitSeconds = get(j, "timeLimitSeconds", b.timeLimitSeconds);
  b.optimalityRequired = get(j, "optimalityRequired", b.optimalityRequired);
  return b;
}

io::Json toJson(const SearchBudget& b) {
  return {{"maxNodesExplored", b.maxNodesExplored},
          {"timeLimitSeconds", b.timeLimitSeconds},
          {"optimalityRequired", b.optimalityRequired}};
}

}  // namespace

std::string_view solverName(SolverKind s) noexcept {
  switch (s) {
    case SolverKind::Exact:
      return "exact";
    case SolverKind::Ga:
      return "ga";
    case SolverKind::Rfpa:
      return "rfpa";
  }
  return "unknown";
}

std::optional<SolverKind> parseSolver(std::string_view name) {
  for (auto s : {SolverKind::Exact, SolverKind::Ga, SolverKind::Rfpa}) {
    if (solverName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view statusName(RunStatus s) noexcept {
  switch (s) {
    case RunStatus::Ok:
      return "ok";
    case RunStatus::BudgetExhausted:
      return "budget-exhausted";
    case RunStatus::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Config

void ExperimentConfig::check() const {
  if (topologyPath.empty()) throw Error("config needs a topologyPath");
  if (rMaxSweep.empty()) throw Error("config rMaxSweep must not be empty");
  if (seeds.empty()) throw Error("config seeds must not be empty");
  if (solvers.empty()) throw Error("config needs at least one solver");
  if (chainCount == 0 || vnfsPerChain == 0) throw Error("config needs at least one chain with one VNF");
  if (pathsPerPair == 0) throw Error("pathsPerPair must be positive");
  if (capacityOverride && !(*capacityOverride > 0.0)) throw Error("capacityOverride must be positive");
  gaParams.check();
}

std::string ExperimentConfig::resolvedTopologyName() const {
  if (!topologyName.empty()) return topologyName;
  return std::filesystem::path(topologyPath).stem().string();
}

TrafficProfile ExperimentConfig::resolvedTrafficProfile() const {
  if (trafficProfile) return *trafficProfile;
  TrafficProfile tp;
  if (const auto p = findProfile(resolvedTopologyName())) {
    tp.connectionCount = p->connections;
    tp.dcBandwidth = p->dcBandwidth;
    tp.bgBandwidthMax = p->bgBandwidthMax;
  }
  return tp;
}

ExperimentConfig configFromJson(const io::Json& j) {
  if (!j.is_object()) throw Error("config must be a JSON object");
  ExperimentConfig c;
  c.topologyPath = get<std::string>(j, "topologyPath", "");
  c.topologyName = get<std::string>(j, "topologyName", "");
  if (j.contains("capacityOverride")) {
    if (j.at("capacityOverride").is_null()) {
      c.capacityOverride.reset();
    } else {
      c.capacityOverride = get<double>(j, "capacityOverride", 0.0);
    }
  }
  if (j.contains("trafficProfile") && !j.at("trafficProfile").is_null()) {
    const auto& t = j.at("trafficProfile");
    TrafficProfile tp = c.resolvedTrafficProfile();
    tp.connectionCount = get(t, "connectionCount", tp.connectionCount);
    tp.bgBandwidthMax = get(t, "bgBandwidthMax", tp.bgBandwidthMax);
    tp.dcBandwidth = get(t, "dcBandwidth", tp.dcBandwidth);
    tp.demandsPerChain = get(t, "demandsPerChain", tp.demandsPerChain);
    c.trafficProfile = tp;
  }
  c.chainCount = get(j, "chainCount", c.chainCount);
  c.vnfsPerChain = get(j, "vnfsPerChain", c.vnfsPerChain);
  c.rMaxSweep = get(j, "rMaxSweep", c.rMaxSweep);
  if (j.contains("solvers")) {
    c.solvers.clear();
    for (const auto& s : get<std::vector<std::string>>(j, "solvers", {})) {
      const auto kind = parseSolver(s);
      if (!kind) throw Error("unknown solver '" + s + "' (expected exact, ga or rfpa)");
      c.solvers.push_back(*kind);
    }
  }
  if (j.contains("gaParams")) {
    const auto& g = j.at("gaParams");
    GaParams& p = c.gaParams;
    p.populationSize = get(g, "populationSize", p.populationSize);
    p.generations = get(g, "generations", p.generations);
    p.tournamentSize = get(g, "tournamentSize", p.tournamentSize);
    p.crossoverRate = get(g, "crossoverRate", p.crossoverRate);
    p.mutationRate = get(g, "mutationRate", p.mutationRate);
    p.eliteCount = get(g, "eliteCount", p.eliteCount);
    p.seed = get(g, "seed", p.seed);
    p.threads = get(g, "threads", p.threads);
  }
  c.seeds = get(j, "seeds", c.seeds);
  c.outputDir = get(j, "outputDir", c.outputDir);
  c.pathsPerPair = get(j, "pathsPerPair", c.pathsPerPair);
  if (j.contains("maxHops") && !j.at("maxHops").is_null()) c.maxHops = get<std::size_t>(j, "maxHops", 0);
  if (j.contains("teBudget")) c.teBudget = budgetFromJson(j.at("teBudget"), c.teBudget);
  if (j.contains("raBudget")) c.raBudget = budgetFromJson(j.at("raBudget"), c.raBudget);
  c.check();
  return c;
}

io::Json toJson(const ExperimentConfig& c) {
  const TrafficProfile tp = c.resolvedTrafficProfile();
  std::vector<std::string> solvers;
  for (auto s : c.solvers) solvers.emplace_back(solverName(s));
  const GaParams& p = c.gaParams;
  return {{"topologyPath", c.topologyPath},
          {"topologyName", c.resolvedTopologyName()},
          {"capacityOverride", c.capacityOverride ? io::Json(*c.capacityOverride) : io::Json(nullptr)},
          {"trafficProfile",
           {{"connectionCount", tp.connectionCount},
            {"bgBandwidthMax", tp.bgBandwidthMax},
            {"dcBandwidth", tp.dcBandwidth},
            {"demandsPerChain", tp.demandsPerChain}}},
          {"chainCount", c.chainCount},
          {"vnfsPerChain", c.vnfsPerChain},
          {"rMaxSweep", c.rMaxSweep},
          {"solvers", solvers},
          {"gaParams",
           {{"populationSize", p.populationSize},
            {"generations", p.generations},
            {"tournamentSize", p.tournamentSize},
            {"crossoverRate", p.crossoverRate},
            {"mutationRate", p.mutationRate},
            {"eliteCount", p.eliteCount},
            {"seed", p.seed},
            {"threads", p.threads}}},
          {"seeds", c.seeds},
          {"outputDir", c.outputDir},
          {"pathsPerPair", c.pathsPerPair},
          {"maxHops", c.maxHops ? io::Json(*c.maxHops) : io::Json(nullptr)},
          {"teBudget", toJson(c.teBudget)},
          {"raBudget", toJson(c.raBudget)}};
}

// ---------------------------------------------------------------------------
// Instances and cells

Network prepareNetwork(const ExperimentConfig& config) {
  const Network raw = loadSndlibNative(config.topologyPath, config.capacityOverride);
  const std::size_t hops = config.maxHops.value_or(defaultMaxHops(raw));
  return buildPathCatalog(raw, allOrderedPairs(raw), config.pathsPerPair, hops).network;
}

Instance prepareInstance(const ExperimentConfig& config, const Network& net, std::uint64_t seed,
                         const CostFunctionSet& costSet) {
  Instance inst{net, costSet, {}, {}, {}, 0.0, false, {}, seed};
  TrafficProfile tp = config.resolvedTrafficProfile();
  tp.seed = trafficSeed(seed);
  inst.background = generateBackgroundTraffic(net, tp);
  inst.chains = buildServiceChains(net, config.chainCount, config.vnfsPerChain, tp, chainSeed(seed), 0);

  std::optional<TeExactResult> exact;
  try {
    exact = solveTeExact(net, costSet, inst.background, config.teBudget);
  } catch (const BudgetExhausted&) {
  }
  if (exact && exact->provenOptimal) {
    inst.te = std::move(exact->solution);
    inst.teCost = exact->cost;
    inst.teMethod = "exact";
    inst.teProvenOptimal = true;
    return inst;
  }
  GaParams gp = config.gaParams;
  gp.seed = gaSeed(config.gaParams, seed, 10);
  TeGaResult ga = runTeGa(net, costSet, inst.background, gp);
  if (exact && exact->cost <= ga.cost) {
    inst.te = std::move(exact->solution);
    inst.teCost = exact->cost;
    inst.teMethod = "exact";
  } else {
    inst.te = std::move(ga.solution);
    inst.teCost = ga.cost;
    inst.teMethod = "ga";
  }
  return inst;
}

io::SolutionDocument RunRecord::document() const {
  if (!solution || !instance) throw Error("record has no solution");
  return io::SolutionDocument{instance->network, instance->costSet, instance->background, chains(),
                              instance->te,      *solution,         cost};
}

RunRecord runCell(const ExperimentConfig& config, const std::shared_ptr<const Instance>& instance,
                  SolverKind solver, std::size_t rMax) {
  const Instance& inst = *instance;
  const Network& net = inst.network;
  RunRecord rec;
  rec.topology = config.resolvedTopologyName();
  rec.nodeCount = net.nodeCount();
  rec.solver = solver;
  rec.rMax = rMax;
  rec.seed = inst.seed;
  rec.instance = instance;
  const auto chains = rec.chains();
  const auto bg = inst.backgroundLoad();

  detail::Stopwatch clock;
  try {
    switch (solver) {
      case SolverKind::Exact: {
        auto r = solveRaExact(net, inst.costSet, chains, bg, config.raBudget);
        rec.solution = std::move(r.solution);
        rec.provenOptimal = r.provenOptimal;
        if (!r.provenOptimal) {
          rec.status = RunStatus::BudgetExhausted;
          rec.detail = "search budget ran out after " + std::to_string(r.explored) + " nodes; incumbent reported";
        }
        break;
      }
      case SolverKind::Ga: {
        GaParams gp = config.gaParams;
        gp.seed = gaSeed(config.gaParams, inst.seed, 20);
        auto ra = runRaGa(net, inst.costSet, chains, bg, gp);
        rec.gaTraces.push_back(std::move(ra.trace));
        rec.solution = std::move(ra.solution);
        if (rMax > 0) {
          gp.seed = gaSeed(config.gaParams, inst.seed, 30);
          auto rr = runRrGa(net, inst.costSet, chains, bg, *rec.solution, gp);
          for (auto& t : rr.traces) rec.gaTraces.push_back(std::move(t));
          rec.solution = std::move(rr.solution);
        }
        break;
      }
      case SolverKind::Rfpa: {
        rec.solution = runRfpa(net, inst.costSet, chains, bg, rfpaSeed(inst.seed)).solution;
        break;
      }
    }
  } catch (const InfeasibleError& e) {
    rec.status = RunStatus::Infeasible;
    rec.detail = e.what();
  } catch (const BudgetExhausted& e) {
    rec.status = RunStatus::BudgetExhausted;
    rec.detail = e.what();
  }
  rec.elapsedSeconds = clock.seconds();
  if (!rec.solution) return rec;

  const auto report = validate(net, inst.background, inst.te, chains, *rec.solution, {.enforceCapacity = false});
  if (!report.ok()) {
    throw Error(std::string(solverName(solver)) + " produced an invalid solution (rMax " + std::to_string(rMax) +
                ", seed " + std::to_string(inst.seed) + "): " + report.summary());
  }
  const LoadLedger ledger = accumulateLoads(net, inst.background, inst.te, chains, *rec.solution);
  rec.cost = objective(net, inst.costSet, ledger);
  rec.perLinkUtilization = utilization(net, ledger);
  for (const auto& cs : rec.solution->chains) rec.replicaCounts.push_back(cs.replicaCount());
  return rec;
}

std::vector<RunRecord> runExperiment(const ExperimentConfig& config, const CostFunctionSet& costSet) {
  config.check();
  const Network net = prepareNetwork(config);
  std::vector<RunRecord> records;
  for (std::uint64_t seed : config.seeds) {
    auto inst = std::make_shared<const Instance>(prepareInstance(config, net, seed, costSet));
    for (std::size_t r : config.rMaxSweep) {
      for (SolverKind s : config.solvers) records.push_back(runCell(config, inst, s, r));
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// Tables

std::string emitUtilizationCdf(std::span<const RunRecord> records) {
  std::map<std::pair<SolverKind, std::size_t>, std::vector<double>> pooled;
  for (const auto& r : records) {
    if (!r.hasSolution()) continue;
    auto& u = pooled[{r.solver, r.rMax}];
    u.insert(u.end(), r.perLinkUtilization.begin(), r.perLinkUtilization.end());
  }
  std::ostringstream out;
  out << "solver,rMax,utilizationBin,linkFraction\n";
  for (const auto& [key, utils] : pooled) {
    for (std::size_t b = 1; b <= kCdfBins; ++b) {
      const double edge = static_cast<double>(b) / 20.0;
      const auto below = std::count_if(utils.begin(), utils.end(), [&](double u) { return u <= edge; });
      const double frac = utils.empty() ? 0.0 : static_cast<double>(below) / static_cast<double>(utils.size());
      char bin[16];
      std::snprintf(bin, sizeof bin, "%.2f", edge);
      out << solverName(key.first) << ',' << key.second << ',' << bin << ',' << num(frac) << '\n';
    }
  }
  return out.str();
}

std::string emitCostTable(std::span<const RunRecord> records) {
  struct Acc {
    std::vector<double> costs;
    double replicas = 0.0;
  };
  std::map<std::tuple<std::string, SolverKind, std::size_t>, Acc> groups;
  for (const auto& r : records) {
    if (!r.hasSolution()) continue;
    auto& a = groups[{r.topology, r.solver, r.rMax}];
    a.costs.push_back(r.cost);
    std::size_t total = 0;
    for (auto c : r.replicaCounts) total += c;
    a.replicas += static_cast<double>(total);
  }
  std::ostringstream out;
  out << "topology,solver,rMax,meanCost,stdCost,meanReplicas\n";
  for (const auto& [key, a] : groups) {
    const double n = static_cast<double>(a.costs.size());
    double mean = 0.0;
    for (double c : a.costs) mean += c;
    mean /= n;
    double var = 0.0;
    for (double c : a.costs) var += (c - mean) * (c - mean);
    out << std::get<0>(key) << ',' << solverName(std::get<1>(key)) << ',' << std::get<2>(key) << ',' << num(mean)
        << ',' << num(std::sqrt(var / n)) << ',' << num(a.replicas / n) << '\n';
  }
  return out.str();
}

std::string emitRuntimeTable(std::span<const RunRecord> records) {
  struct Acc {
    double sum = 0.0;
    std::size_t n = 0;
  };
  std::map<std::tuple<std::size_t, std::string, SolverKind, std::size_t>, Acc> groups;
  for (const auto& r : records) {
    if (r.status == RunStatus::Infeasible) continue;
    auto& a = groups[{r.nodeCount, r.topology, r.solver, r.rMax}];
    a.sum += r.elapsedSeconds;
    ++a.n;
  }
  std::ostringstream out;
  out << "topology,nodeCount,solver,rMax,meanElapsed\n";
  for (const auto& [key, a] : groups) {
    out << std::get<1>(key) << ',' << std::get<0>(key) << ',' << solverName(std::get<2>(key)) << ','
        << std::get<3>(key) << ',' << num(a.sum / static_cast<double>(a.n)) << '\n';
  }
  return out.str();
}

void writeExperimentOutputs(const ExperimentConfig& config, std::span<const RunRecord> records,
                            const std::string& configText) {
  namespace fs = std::filesystem;
  const fs::path dir(config.outputDir);
  fs::create_directories(dir / "solutions");
  fs::create_directories(dir / "traces");
  io::writeTextFile((dir / "config.json").string(), configText);
  io::writeTextFile((dir / "utilization_cdf.csv").string(), emitUtilizationCdf(records));
  io::writeTextFile((dir / "cost_table.csv").string(), emitCostTable(records));
  io::writeTextFile((dir / "runtime_table.csv").string(), emitRuntimeTable(records));

  io::Json index = io::Json::array();
  for (const auto& r : records) {
    const std::string stem = r.topology + "_" + std::string(solverName(r.solver)) + "_r" + std::to_string(r.rMax) +
                             "_s" + std::to_string(r.seed);
    io::Json entry{{"topology", r.topology},
                   {"solver", solverName(r.solver)},
                   {"rMax", r.rMax},
                   {"seed", r.seed},
                   {"status", statusName(r.status)},
                   {"detail", r.detail},
                   {"provenOptimal", r.provenOptimal},
                   {"teMethod", r.instance ? r.instance->teMethod : ""},
                   {"replicaCounts", r.replicaCounts}};
    if (r.hasSolution()) {
      entry["cost"] = r.cost;
      entry["solutionFile"] = "solutions/" + stem + ".json";
      io::writeTextFile((dir / "solutions" / (stem + ".json")).string(), io::documentToJson(r.document()).dump(1));
    }
    for (std::size_t t = 0; t < r.gaTraces.size(); ++t) {
      const std::string stage = t == 0 ? "ra" : "rr" + std::to_string(t);
      io::writeTextFile((dir / "traces" / (stem + "_" + stage + ".csv")).string(), traceCsv(r.gaTraces[t]));
    }
    index.push_back(std::move(entry));
  }
  io::writeTextFile((dir / "records.json").string(), index.dump(1) + "\n");
}

}  // namespace vnfp
