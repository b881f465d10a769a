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

// vnfp: command-line front end for the placement solvers and the experiment
// harness. Exit status: 0 success, 2 infeasible instance, 1 any other error
// (including a solution that fails validation).

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "vnfp/error.hpp"
#include "vnfp/harness.hpp"
#include "vnfp/io.hpp"

namespace fs = std::filesystem;
using namespace vnfp;

namespace {

struct Options {
  std::string topology;
  std::string config;
  std::string solver = "ga";
  std::size_t rmax = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string solutionFile;
};

ExperimentConfig loadConfig(const Options& o) {
  io::Json j = io::Json::object();
  if (!o.config.empty()) {
    j = io::readJsonFile(o.config);
    if (!j.is_object()) throw Error("config must be a JSON object");
    // Relative topology paths are taken from the config file's directory when
    // they do not resolve from the working directory.
    if (j.contains("topologyPath") && j["topologyPath"].is_string()) {
      const fs::path p = j["topologyPath"].get<std::string>();
      const fs::path besideConfig = fs::path(o.config).parent_path() / p;
      if (p.is_relative() && !fs::exists(p) && fs::exists(besideConfig)) j["topologyPath"] = besideConfig.string();
    }
  }
  if (!o.topology.empty()) j["topologyPath"] = o.topology;
  if (o.seed) j["seeds"] = {*o.seed};
  if (!o.out.empty()) j["outputDir"] = o.out;
  return configFromJson(j);
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::writeTextFile(out, text);
  }
}

int solveTe(const Options& o) {
  ExperimentConfig cfg = loadConfig(o);
  const Network net = prepareNetwork(cfg);
  const Instance inst = prepareInstance(cfg, net, cfg.seeds.front());
  const io::SolutionDocument doc{inst.network, inst.costSet, inst.background, {}, inst.te, {}, inst.teCost};
  emit(o.out, io::documentToJson(doc).dump(1) + "\n");
  std::cerr << "TE (" << inst.teMethod << (inst.teProvenOptimal ? ", optimal" : "") << ") cost " << inst.teCost
            << '\n';
  return 0;
}

int solveRa(const Options& o) {
  const auto solver = parseSolver(o.solver);
  if (!solver) throw Error("unknown solver '" + o.solver + "' (expected exact, ga or rfpa)");
  ExperimentConfig cfg = loadConfig(o);
  const Network net = prepareNetwork(cfg);
  auto inst = std::make_shared<const Instance>(prepareInstance(cfg, net, cfg.seeds.front()));
  const RunRecord rec = runCell(cfg, inst, *solver, o.rmax);
  if (rec.status == RunStatus::Infeasible) {
    std::cerr << "infeasible: " << rec.detail << '\n';
    return 2;
  }
  if (!rec.hasSolution()) throw Error(rec.detail);
  emit(o.out, io::documentToJson(rec.document()).dump(1) + "\n");
  std::cerr << solverName(rec.solver) << " rMax " << rec.rMax << " cost " << rec.cost << " ("
            << statusName(rec.status) << ", " << rec.elapsedSeconds << " s)\n";
  return 0;
}

int experiment(const Options& o) {
  if (o.config.empty()) throw Error("experiment needs --config");
  const ExperimentConfig cfg = loadConfig(o);
  const auto records = runExperiment(cfg);
  writeExperimentOutputs(cfg, records, io::readTextFile(o.config));
  std::size_t infeasible = 0;
  for (const auto& r : records) {
    if (r.status == RunStatus::Infeasible) ++infeasible;
    if (r.status != RunStatus::Ok) {
      std::cerr << solverName(r.solver) << " rMax " << r.rMax << " seed " << r.seed << ": " << statusName(r.status)
                << " (" << r.detail << ")\n";
    }
  }
  std::cerr << records.size() << " runs written to " << cfg.outputDir << '\n';
  return infeasible == records.size() ? 2 : 0;
}

int validateFile(const Options& o) {
  const io::SolutionDocument doc = io::documentFromJson(io::readJsonFile(o.solutionFile));
  const auto report = doc.ra.chains.empty()
                           ? validate(doc.network, doc.demands, doc.te, {.enforceCapacity = false})
                           : validate(doc.network, doc.demands, doc.te, doc.chains, doc.ra, {.enforceCapacity = false});
  if (!report.ok()) {
    std::cout << report.summary() << '\n';
    return 1;
  }
  const LoadLedger ledger = doc.ra.chains.empty()
                                ? accumulateLoads(doc.network, doc.demands, doc.te)
                                : accumulateLoads(doc.network, doc.demands, doc.te, doc.chains, doc.ra);
  std::cout << "valid; cost " << objective(doc.network, doc.costSet, ledger) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VNF placement with replication"};
  app.require_subcommand(1);
  Options o;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--topology", o.topology, "SNDlib native topology file");
    sub->add_option("--config", o.config, "experiment config JSON");
    sub->add_option("--seed", o.seed, "instance seed");
    sub->add_option("--out", o.out, "output file (solve-*) or directory (experiment)");
  };
  auto* te = app.add_subcommand("solve-te", "route background traffic");
  addCommon(te);
  auto* ra = app.add_subcommand("solve-ra", "place and route service chains");
  addCommon(ra);
  ra->add_option("--solver", o.solver, "exact, ga or rfpa")->check(CLI::IsMember({"exact", "ga", "rfpa"}));
  ra->add_option("--rmax", o.rmax, "replica budget per chain");
  auto* ex = app.add_subcommand("experiment", "run a configured experiment");
  addCommon(ex);
  auto* va = app.add_subcommand("validate", "check a solution document");
  va->add_option("solution", o.solutionFile, "solution JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    if (*te) return solveTe(o);
    if (*ra) return solveRa(o);
    if (*ex) return experiment(o);
    if (*va) return validateFile(o);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
