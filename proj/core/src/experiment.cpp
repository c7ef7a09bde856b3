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

#include "mogkit/experiment.hpp"

#include <chrono>

#include "mogkit/approx.hpp"
#include "mogkit/equilibria.hpp"
#include "mogkit/errors.hpp"
#include "mogkit/mocr.hpp"

namespace mogkit {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

PipelineRun run_pipeline(const Game& game,
                         const std::optional<CoveringPrecision>& precision) {
  PipelineRun run;
  run.n = num_agents(game);

  auto start = Clock::now();
  const SolveResult solved = pareto_nash(game);
  run.phase1_seconds = SecondsSince(start);
  run.m = solved.frontier.size();
  run.q = solved.wst_outcomes.size();
  run.m_eps = run.m;
  run.q_eps = run.q;
  if (solved.wst_outcomes.empty()) return run;

  start = Clock::now();
  if (precision) {
    ApproxResult approx = approx_mocr(solved.wst_outcomes, solved.frontier,
                                      precision->eps1, precision->eps2);
    run.m_eps = approx.frontier_cover.size();
    run.q_eps = approx.worst_cover.size();
    run.ratios = std::move(approx.ratios);
  } else {
    run.ratios = mocr(solved.wst_outcomes, solved.frontier);
  }
  run.phase2_seconds = SecondsSince(start);
  return run;
}

PipelineAverage average_runs(const std::vector<PipelineRun>& runs) {
  if (runs.empty()) throw InvalidArgument("average_runs needs at least one run");
  PipelineAverage avg;
  for (const auto& r : runs) {
    avg.n += static_cast<double>(r.n);
    avg.phase1_seconds += r.phase1_seconds;
    avg.m += static_cast<double>(r.m);
    avg.q += static_cast<double>(r.q);
    avg.m_eps += static_cast<double>(r.m_eps);
    avg.q_eps += static_cast<double>(r.q_eps);
    avg.phase2_seconds += r.phase2_seconds;
    avg.mocr_size += static_cast<double>(r.ratios.size());
  }
  const double count = static_cast<double>(runs.size());
  avg.n /= count;
  avg.phase1_seconds /= count;
  avg.m /= count;
  avg.q /= count;
  avg.m_eps /= count;
  avg.q_eps /= count;
  avg.phase2_seconds /= count;
  avg.mocr_size /= count;
  return avg;
}

}  // namespace mogkit
