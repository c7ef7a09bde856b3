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

#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "mogkit/approx.hpp"
#include "mogkit/equilibria.hpp"
#include "mogkit/errors.hpp"
#include "mogkit/experiment.hpp"
#include "mogkit/game_io.hpp"
#include "mogkit/mixed.hpp"
#include "mogkit/mocr.hpp"
#include "mogkit/potential.hpp"
#include "mogkit/randgames.hpp"
#include "result_json.hpp"

namespace mogkit::cli {
namespace {

using nlohmann::json;

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
  } else {
    write_text_file(path, text);
  }
}

void EmitSummary(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cerr << Render(doc);
  } else {
    write_text_file(path, Render(doc));
  }
}

std::pair<long, long> ParseRange(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("--range must look like lo:hi");
  long lo = 0;
  long hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stol(text.substr(0, colon), &used);
    if (used != colon) throw InvalidArgument("");
    const std::string rest = text.substr(colon + 1);
    hi = std::stol(rest, &used);
    if (used != rest.size()) throw InvalidArgument("");
  } catch (const std::exception&) {
    throw InvalidArgument("--range must look like lo:hi, got '" + text + "'");
  }
  if (lo > hi) throw InvalidArgument("--range needs lo <= hi");
  return {lo, hi};
}

std::pair<std::size_t, std::size_t> GridShape(std::size_t n, std::size_t n1,
                                              std::size_t n2) {
  if (n2 == 0) n2 = 1;
  if (n1 == 0) {
    if (n == 0 || n % n2 != 0) {
      throw InvalidArgument("grid needs n divisible by --grid-n2");
    }
    n1 = n / n2;
  }
  return {n1, n2};
}

Game Generate(const std::string& kind, std::size_t n, std::size_t alpha, std::size_t d,
              std::pair<long, long> range, std::size_t grid_n1, std::size_t grid_n2,
              std::uint64_t seed) {
  const auto [lo, hi] = range;
  if (kind == "normal") return gen_uniform_normal(n, alpha, d, lo, hi, seed);
  if (kind == "symmetric") return gen_uniform_symmetric(n, alpha, d, lo, hi, seed);
  if (kind == "graphical-grid") {
    const auto [n1, n2] = GridShape(n, grid_n1, grid_n2);
    return gen_uniform_grid_graphical(n1, n2, alpha, d, lo, hi, seed);
  }
  throw InvalidArgument("unknown game kind '" + kind + "'");
}

std::pair<VectorSet, VectorSet> LoadRatioInputs(const std::string& game_path,
                                                const std::string& wst_path,
                                                const std::string& frontier_path,
                                                bool full_outcomes) {
  if (!game_path.empty()) {
    if (!wst_path.empty() || !frontier_path.empty()) {
      throw InvalidArgument("give either a game file or --wst-e/--frontier, not both");
    }
    SolveResult solved = pareto_nash(load_game(game_path));
    if (solved.outcomes.empty()) {
      throw InvalidArgument("the game has no pure Pareto-Nash equilibrium");
    }
    return {full_outcomes ? solved.outcomes : solved.wst_outcomes, solved.frontier};
  }
  if (wst_path.empty() || frontier_path.empty()) {
    throw InvalidArgument("need a game file or both --wst-e and --frontier");
  }
  return {vector_set_from_json(read_text_file(wst_path), full_outcomes ? "E" : "wstE"),
          vector_set_from_json(read_text_file(frontier_path), "F")};
}

std::string FormatStat(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

std::string FormatSeconds(double value, bool omit) {
  if (omit) return "-";
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << value;
  return out.str();
}

}  // namespace

void RunGen(const GenOptions& opts) {
  const auto range = ParseRange(opts.range);
  if (opts.kind == "potential") {
    if (opts.phi_output.empty()) throw InvalidArgument("--kind potential needs --phi FILE");
    PotentialGame pg = gen_potential_game(opts.n, opts.alpha, opts.d, range.first,
                                          range.second, opts.seed, opts.identical_interest);
    Emit(game_to_json(pg.game), opts.output);
    write_text_file(opts.phi_output, potential_to_json(pg.phi));
    return;
  }
  Emit(game_to_json(Generate(opts.kind, opts.n, opts.alpha, opts.d, range, opts.grid_n1,
                             opts.grid_n2, opts.seed)),
       opts.output);
}

void RunSolve(const SolveOptions& opts) {
  const Game game = load_game(opts.game);
  const SolveResult solved = pareto_nash(game);
  const bool all = opts.emit == "all";
  json doc = {{"kind", kind_name(game)},
              {"n", num_agents(game)},
              {"d", dim(game)},
              {"representation_length", representation_length(game)},
              {"pn_are_configurations", solved.pn_are_configurations},
              {"num_pn", solved.pn.size()}};
  if (all || opts.emit == "pn") doc["pn"] = ProfilesJson(solved.pn);
  if (all || opts.emit == "E") doc["E"] = ToJson(solved.outcomes);
  if (all || opts.emit == "effE") doc["effE"] = ToJson(solved.eff_outcomes);
  if (all || opts.emit == "wstE") doc["wstE"] = ToJson(solved.wst_outcomes);
  if (all || opts.emit == "F") doc["F"] = ToJson(solved.frontier);
  Emit(Render(doc), opts.output);
}

void RunMocr(const MocrOptions& opts) {
  const auto [worst, frontier] =
      LoadRatioInputs(opts.game, opts.wst_e, opts.frontier, false);
  const VectorSet ratios = opts.oracle ? mocr_oracle(worst, frontier) : mocr(worst, frontier);
  json doc = {{"q", worst.size()}, {"m", frontier.size()}, {"mocr", ToJson(ratios)}};
  Emit(Render(doc), opts.output);
}

void RunApprox(const ApproxOptions& opts) {
  std::optional<CoveringPrecision> precision;
  json summary;
  if (opts.exact) {
    summary = {{"exact", true}, {"guarantee", "1"}};
  } else {
    if (opts.eps1.empty() || opts.eps2.empty()) {
      throw InvalidArgument("approx needs --eps1 and --eps2, or --exact");
    }
    precision = CoveringPrecision{parse_rational(opts.eps1), parse_rational(opts.eps2)};
    if (precision->eps1 <= 0 || precision->eps2 <= 0) {
      throw InvalidArgument("--eps1 and --eps2 must be positive");
    }
    const Rational guarantee = (1 + precision->eps1) * (1 + precision->eps2);
    summary = {{"exact", false},
               {"eps1", to_string(precision->eps1)},
               {"eps2", to_string(precision->eps2)},
               {"guarantee", to_string(guarantee)},
               {"guarantee_decimal", guarantee.get_d()}};
  }

  std::vector<std::vector<PipelineRun>> groups;
  if (!opts.games.empty()) {
    for (const auto& path : opts.games) {
      groups.push_back({run_pipeline(load_game(path), precision)});
    }
  } else {
    if (!opts.has_seed) throw InvalidArgument("generated instances need --seed");
    if (opts.n_values.empty()) throw InvalidArgument("approx needs --n or game files");
    if (opts.repeat == 0) throw InvalidArgument("--repeat must be >= 1");
    const auto range = ParseRange(opts.range);
    for (std::size_t n : opts.n_values) {
      std::vector<PipelineRun> runs;
      for (std::size_t rep = 0; rep < opts.repeat; ++rep) {
        const std::uint64_t seed = mix_seed(mix_seed(opts.seed) ^ (n << 20) ^ rep);
        runs.push_back(run_pipeline(
            Generate(opts.kind, n, opts.alpha, opts.d, range, 0, opts.grid_n2, seed),
            precision));
      }
      groups.push_back(std::move(runs));
    }
  }

  std::ostringstream csv;
  csv << "n,T(P1),m,q,m_eps,q_eps,T(P2),#MO-CR\n";
  for (const auto& runs : groups) {
    const PipelineAverage avg = average_runs(runs);
    csv << FormatStat(avg.n) << ',' << FormatSeconds(avg.phase1_seconds, opts.no_times)
        << ',' << FormatStat(avg.m) << ',' << FormatStat(avg.q) << ','
        << FormatStat(avg.m_eps) << ',' << FormatStat(avg.q_eps) << ','
        << FormatSeconds(avg.phase2_seconds, opts.no_times) << ','
        << FormatStat(avg.mocr_size) << '\n';
  }
  summary["rows"] = groups.size();
  Emit(csv.str(), opts.output);
  EmitSummary(summary, opts.summary);
}

void RunMonteCarlo(const MonteCarloOptions& opts) {
  if (opts.trials == 0) throw InvalidArgument("--trials must be >= 1");
  std::ostringstream csv;
  json summary = {{"mode", opts.mode}, {"trials", opts.trials}, {"seed", opts.seed}};
  if (opts.mode == "z") {
    std::vector<double> gammas;
    for (const auto& g : opts.gammas) gammas.push_back(parse_rational(g).get_d());
    const ZMoments z = estimate_z_moments(opts.n, opts.alpha, opts.beta, opts.trials,
                                          opts.seed, gammas, opts.threads);
    csv << "trial,Z\n";
    for (std::size_t t = 0; t < z.samples.size(); ++t) csv << t << ',' << z.samples[t] << '\n';
    const double expected = std::pow(static_cast<double>(opts.beta), static_cast<double>(opts.n));
    json tails = json::array();
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      tails.push_back({{"gamma", gammas[g]},
                       {"band", {(1 - gammas[g]) * expected, (1 + gammas[g]) * expected}},
                       {"frequency", z.tail_freq[g]},
                       {"chebyshev_bound", chebyshev_tail_bound(opts.n, opts.beta, gammas[g])}});
    }
    summary.update({{"n", opts.n},
                    {"alpha", opts.alpha},
                    {"beta", opts.beta},
                    {"expected_mean", expected},
                    {"mean", z.mean},
                    {"variance", z.variance},
                    {"tails", tails}});
  } else if (opts.mode == "beta") {
    const FrontSizeEstimate est =
        simplex_front_size(opts.alpha, opts.d, opts.trials, opts.seed, opts.threads);
    csv << "trial,beta\n";
    for (std::size_t t = 0; t < est.samples.size(); ++t) {
      csv << t << ',' << est.samples[t] << '\n';
    }
    summary.update({{"alpha", opts.alpha},
                    {"d", opts.d},
                    {"mean", est.mean},
                    {"asymptote", simplex_front_asymptote(opts.alpha, opts.d)}});
  } else {
    throw InvalidArgument("--mode must be z or beta");
  }
  Emit(csv.str(), opts.output);
  EmitSummary(summary, opts.summary);
}

void RunCheckPotential(const CheckPotentialOptions& opts) {
  const NormalFormGame game = to_normal_form(load_game(opts.game));
  const PotentialAnnotation phi = load_potential(opts.phi);
  const PotentialReport report = check_potential_equivalence(game, phi);
  json doc = {{"exact_potential", true},
              {"pareto_nash", ProfilesJson(report.pareto_nash)},
              {"locally_efficient", ProfilesJson(report.locally_efficient)},
              {"sets_equal", report.sets_equal},
              {"nonempty", report.nonempty},
              {"holds", report.holds()}};
  Emit(Render(doc), opts.output);
}

void RunMixed(const MixedOptions& opts) {
  const Game game = load_game(opts.game);
  const MixedProfile profile = mixed_profile_from_json(read_text_file(opts.profile));
  json payoffs = json::array();
  for (std::size_t i = 0; i < num_agents(game); ++i) {
    payoffs.push_back(ToJson(expected_payoff(game, profile, i)));
  }
  json doc = {{"def4", is_def4_equilibrium(game, profile)},
              {"def5", is_def5_equilibrium(game, profile)},
              {"expected_payoffs", payoffs}};
  Emit(Render(doc), opts.output);
}

void RunMembershipGrid(const MembershipGridOptions& opts) {
  const auto [outcomes, frontier] =
      LoadRatioInputs(opts.game, opts.wst_e, opts.frontier, true);
  if (frontier.dim() != 2) throw InvalidArgument("membership-grid needs d = 2");
  if (opts.resolution == 0) throw InvalidArgument("--resolution must be >= 1");
  const Rational top = parse_rational(opts.max);
  if (top <= 0) throw InvalidArgument("--max must be positive");
  std::ostringstream csv;
  csv << "rho1,rho2,member\n";
  const Rational steps(static_cast<long>(opts.resolution));
  for (std::size_t i = 0; i <= opts.resolution; ++i) {
    const Rational x = top * Rational(static_cast<long>(i)) / steps;
    for (std::size_t j = 0; j <= opts.resolution; ++j) {
      const Rational y = top * Rational(static_cast<long>(j)) / steps;
      const bool member = ratio_member(PayoffVector{x, y}, outcomes, frontier);
      csv << to_string(x) << ',' << to_string(y) << ',' << (member ? 1 : 0) << '\n';
    }
  }
  Emit(csv.str(), opts.output);
}

}  // namespace mogkit::cli
