// Copyright 2026 The mogkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace mogkit::cli;

void AddGen(CLI::App& app, GenOptions& o) {
  auto* cmd = app.add_subcommand("gen", "Generate a random game file");
  cmd->add_option("--kind", o.kind, "normal, symmetric, graphical-grid or potential")
      ->check(CLI::IsMember({"normal", "symmetric", "graphical-grid", "potential"}));
  cmd->add_option("--n", o.n, "Number of agents");
  cmd->add_option("--alpha", o.alpha, "Actions per agent");
  cmd->add_option("--d", o.d, "Number of objectives");
  cmd->add_option("--range", o.range, "Integer payoff range lo:hi");
  cmd->add_option("--grid-n1", o.grid_n1, "Grid rows (default n / grid-n2)");
  cmd->add_option("--grid-n2", o.grid_n2, "Grid columns (default 1)");
  cmd->add_option("--seed", o.seed, "Random seed")->required();
  cmd->add_flag("--identical-interest", o.identical_interest,
                "Potential games without dummy terms");
  cmd->add_option("-o,--output", o.output, "Game file (default stdout)");
  cmd->add_option("--phi", o.phi_output, "Potential sidecar file for --kind potential");
  cmd->callback([&o] { RunGen(o); });
}

void AddSolve(CLI::App& app, SolveOptions& o) {
  auto* cmd = app.add_subcommand("solve", "Enumerate pure Pareto-Nash equilibria");
  cmd->add_option("game", o.game, "Game file")->required();
  cmd->add_option("--emit", o.emit, "pn, E, effE, wstE, F or all")
      ->check(CLI::IsMember({"pn", "E", "effE", "wstE", "F", "all"}));
  cmd->add_option("-o,--output", o.output, "Result file (default stdout)");
  cmd->callback([&o] { RunSolve(o); });
}

void AddMocr(CLI::App& app, MocrOptions& o) {
  auto* cmd = app.add_subcommand("mocr", "Exact multi-objective coordination ratio");
  cmd->add_option("game", o.game, "Game file");
  cmd->add_option("--wst-e", o.wst_e, "JSON array of worst equilibrium outcomes");
  cmd->add_option("--frontier", o.frontier, "JSON array of efficient outcomes");
  cmd->add_flag("--oracle", o.oracle, "Enumerate every path instead of layering");
  cmd->add_option("-o,--output", o.output, "Result file (default stdout)");
  cmd->callback([&o] { RunMocr(o); });
}

void AddApprox(CLI::App& app, ApproxOptions& o) {
  auto* cmd = app.add_subcommand("approx", "Two-phase pipeline on covered outcome sets");
  cmd->add_option("games", o.games, "Game files, one CSV row each");
  cmd->add_option("--eps1", o.eps1, "Under-cover precision, e.g. 0.065 or 13/200");
  cmd->add_option("--eps2", o.eps2, "Stick-cover precision, e.g. 0.035 or 7/200");
  cmd->add_flag("--exact", o.exact, "Skip the coverings");
  cmd->add_option("--kind", o.kind, "Generated kind: normal, symmetric or graphical-grid")
      ->check(CLI::IsMember({"normal", "symmetric", "graphical-grid"}));
  cmd->add_option("--n", o.n_values, "Comma separated agent counts")->delimiter(',');
  cmd->add_option("--alpha", o.alpha, "Actions per agent");
  cmd->add_option("--d", o.d, "Number of objectives");
  cmd->add_option("--range", o.range, "Integer payoff range lo:hi");
  cmd->add_option("--grid-n2", o.grid_n2, "Grid width for graphical-grid");
  cmd->add_option("--seed", o.seed, "Random seed for generated instances")
      ->each([&o](const std::string&) { o.has_seed = true; });
  cmd->add_option("--repeat", o.repeat, "Instances averaged per n");
  cmd->add_flag("--no-times", o.no_times, "Print '-' instead of wall times");
  cmd->add_option("-o,--output", o.output, "CSV file (default stdout)");
  cmd->add_option("--summary", o.summary, "Summary JSON file (default stderr)");
  cmd->callback([&o] { RunApprox(o); });
}

void AddMonteCarlo(CLI::App& app, MonteCarloOptions& o) {
  auto* cmd = app.add_subcommand("montecarlo", "Random-model estimators");
  cmd->add_option("--mode", o.mode, "z: equilibrium count, beta: simplex front size")
      ->check(CLI::IsMember({"z", "beta"}));
  cmd->add_option("--n", o.n, "Number of agents (mode z)");
  cmd->add_option("--alpha", o.alpha, "Actions per agent, or points per trial");
  cmd->add_option("--beta", o.beta, "Efficient responses per cell (mode z)");
  cmd->add_option("--d", o.d, "Dimension (mode beta)");
  cmd->add_option("--trials", o.trials, "Number of trials");
  cmd->add_option("--gammas", o.gammas, "Comma separated band widths (mode z)")
      ->delimiter(',');
  cmd->add_option("--seed", o.seed, "Random seed")->required();
  cmd->add_option("--threads", o.threads, "Worker threads; results do not depend on it");
  cmd->add_option("-o,--output", o.output, "CSV file (default stdout)");
  cmd->add_option("--summary", o.summary, "Summary JSON file (default stderr)");
  cmd->callback([&o] { RunMonteCarlo(o); });
}

void AddCheckPotential(CLI::App& app, CheckPotentialOptions& o) {
  auto* cmd = app.add_subcommand("check-potential",
                                 "Compare Pareto-Nash equilibria with LOC(phi)");
  cmd->add_option("game", o.game, "Game file")->required();
  cmd->add_option("--phi", o.phi, "Potential sidecar file")->required();
  cmd->add_option("-o,--output", o.output, "Result file (default stdout)");
  cmd->callback([&o] { RunCheckPotential(o); });
}

void AddMixed(CLI::App& app, MixedOptions& o) {
  auto* cmd = app.add_subcommand("mixed", "Check a mixed profile against both definitions");
  cmd->add_option("game", o.game, "Game file")->required();
  cmd->add_option("--profile", o.profile, "Mixed profile file")->required();
  cmd->add_option("-o,--output", o.output, "Result file (default stdout)");
  cmd->callback([&o] { RunMixed(o); });
}

void AddMembershipGrid(CLI::App& app, MembershipGridOptions& o) {
  auto* cmd = app.add_subcommand("membership-grid",
                                 "Sample ratio membership on a lattice over [0,max]^2");
  cmd->add_option("game", o.game, "Game file");
  cmd->add_option("--wst-e", o.wst_e, "JSON array of equilibrium outcomes");
  cmd->add_option("--frontier", o.frontier, "JSON array of efficient outcomes");
  cmd->add_option("--resolution", o.resolution, "Lattice steps per axis");
  cmd->add_option("--max", o.max, "Upper corner of the lattice");
  cmd->add_option("-o,--output", o.output, "CSV file (default stdout)");
  cmd->callback([&o] { RunMembershipGrid(o); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective game analysis"};
  app.require_subcommand(1);
  GenOptions gen;
  SolveOptions solve;
  MocrOptions mocr;
  ApproxOptions approx;
  MonteCarloOptions montecarlo;
  CheckPotentialOptions potential;
  MixedOptions mixed;
  MembershipGridOptions grid;
  AddGen(app, gen);
  AddSolve(app, solve);
  AddMocr(app, mocr);
  AddApprox(app, approx);
  AddMonteCarlo(app, montecarlo);
  AddCheckPotential(app, potential);
  AddMixed(app, mixed);
  AddMembershipGrid(app, grid);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "mogkit: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
