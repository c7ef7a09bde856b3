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

#ifndef MOGKIT_TOOLS_COMMANDS_HPP_
#define MOGKIT_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace mogkit::cli {

struct GenOptions {
  std::string kind = "normal";
  std::size_t n = 2;
  std::size_t alpha = 2;
  std::size_t d = 2;
  std::string range = "1:16";
  std::size_t grid_n1 = 0;
  std::size_t grid_n2 = 0;
  std::uint64_t seed = 0;
  bool identical_interest = false;
  std::string output;
  std::string phi_output;
};

struct SolveOptions {
  std::string game;
  std::string emit = "all";
  std::string output;
};

struct MocrOptions {
  std::string game;
  std::string wst_e;
  std::string frontier;
  bool oracle = false;
  std::string output;
};

struct ApproxOptions {
  std::vector<std::string> games;
  std::string eps1;
  std::string eps2;
  bool exact = false;
  std::string kind = "graphical-grid";
  std::vector<std::size_t> n_values;
  std::size_t alpha = 2;
  std::size_t d = 2;
  std::string range = "1:16";
  std::size_t grid_n2 = 1;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::size_t repeat = 5;
  bool no_times = false;
  std::string output;
  std::string summary;
};

struct MonteCarloOptions {
  std::string mode = "z";
  std::size_t n = 5;
  std::size_t alpha = 4;
  std::size_t beta = 2;
  std::size_t d = 2;
  std::size_t trials = 2000;
  std::vector<std::string> gammas = {"1/2", "3/4"};
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
  std::string summary;
};

struct CheckPotentialOptions {
  std::string game;
  std::string phi;
  std::string output;
};

struct MixedOptions {
  std::string game;
  std::string profile;
  std::string output;
};

struct MembershipGridOptions {
  std::string game;
  std::string wst_e;
  std::string frontier;
  std::size_t resolution = 20;
  std::string max = "1";
  std::string output;
};

void RunGen(const GenOptions& opts);
void RunSolve(const SolveOptions& opts);
void RunMocr(const MocrOptions& opts);
void RunApprox(const ApproxOptions& opts);
void RunMonteCarlo(const MonteCarloOptions& opts);
void RunCheckPotential(const CheckPotentialOptions& opts);
void RunMixed(const MixedOptions& opts);
void RunMembershipGrid(const MembershipGridOptions& opts);

}  // namespace mogkit::cli

#endif  // MOGKIT_TOOLS_COMMANDS_HPP_
