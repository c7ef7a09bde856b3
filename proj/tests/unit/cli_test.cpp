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

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mogkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }

  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name));
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  Outcome Run(const std::string& args) const {
    const std::string err_path = Path("stderr.txt");
    const std::string cmd = std::string(MOGKIT_CLI_PATH) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out, Read("stderr.txt")};
  }

  fs::path dir_;
};

TEST_F(CliTest, GenerateThenSolveReportsRepresentationLength) {
  ASSERT_EQ(Run("gen --kind normal --n 4 --alpha 2 --d 3 --range 1:16 --seed 7 -o " +
                Path("g.json")).status, 0);
  const Outcome solved = Run("solve " + Path("g.json"));
  ASSERT_EQ(solved.status, 0) << solved.err;
  EXPECT_NE(solved.out.find("\"representation_length\": 192"), std::string::npos);
  EXPECT_NE(solved.out.find("\"wstE\""), std::string::npos);
  const Outcome only_f = Run("solve --emit F " + Path("g.json"));
  EXPECT_NE(only_f.out.find("\"F\""), std::string::npos);
  EXPECT_EQ(only_f.out.find("\"pn\""), std::string::npos);
}

TEST_F(CliTest, SameSeedSameBytes) {
  for (const char* kind : {"normal", "symmetric", "graphical-grid"}) {
    const std::string flags = std::string("gen --kind ") + kind + " --n 4 --alpha 2 --d 2 --seed 3";
    const Outcome a = Run(flags);
    const Outcome b = Run(flags);
    ASSERT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  const std::string mc = "montecarlo --mode z --n 4 --alpha 3 --beta 2 --trials 50 --seed 9";
  EXPECT_EQ(Run(mc).out, Run(mc + " --threads 3").out);
}

TEST_F(CliTest, RandomnessNeedsSeed) {
  EXPECT_NE(Run("gen --kind normal --n 2").status, 0);
  EXPECT_NE(Run("montecarlo --mode z").status, 0);
  EXPECT_NE(Run("approx --eps1 0.1 --eps2 0.1 --n 4").status, 0);
}

TEST_F(CliTest, MalformedInputFailsWithDiagnostic) {
  Write("bad.json", "{\"kind\":\"normal\",\"n\":1}");
  const Outcome r = Run("solve " + Path("bad.json"));
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("missing field"), std::string::npos);
  EXPECT_NE(Run("solve " + Path("absent.json")).status, 0);
  EXPECT_NE(Run("gen --kind normal --range 5:1 --seed 1").status, 0);
}

TEST_F(CliTest, OracleAndLayeredRatioAgree) {
  ASSERT_EQ(Run("gen --kind normal --n 3 --alpha 2 --d 2 --seed 12 -o " + Path("g.json")).status, 0);
  const Outcome layered = Run("mocr " + Path("g.json"));
  const Outcome oracle = Run("mocr --oracle " + Path("g.json"));
  ASSERT_EQ(layered.status, 0) << layered.err;
  EXPECT_EQ(layered.out, oracle.out);

  Write("e.json", "[[2,2],[3,1]]");
  Write("f.json", "{\"F\":[[4,1],[1,4]]}");
  const Outcome raw = Run("mocr --wst-e " + Path("e.json") + " --frontier " + Path("f.json"));
  ASSERT_EQ(raw.status, 0) << raw.err;
  EXPECT_NE(raw.out.find("\"3/4\""), std::string::npos);
  EXPECT_EQ(raw.out, Run("mocr --oracle --wst-e " + Path("e.json") + " --frontier " +
                         Path("f.json")).out);
}

TEST_F(CliTest, SolveOutputFeedsRatioCommand) {
  ASSERT_EQ(Run("gen --kind normal --n 3 --alpha 2 --d 2 --seed 12 -o " + Path("g.json")).status, 0);
  ASSERT_EQ(Run("solve " + Path("g.json") + " -o " + Path("s.json")).status, 0);
  const Outcome chained = Run("mocr --wst-e " + Path("s.json") + " --frontier " + Path("s.json"));
  ASSERT_EQ(chained.status, 0) << chained.err;
  EXPECT_EQ(chained.out, Run("mocr " + Path("g.json")).out);
}

TEST_F(CliTest, ApproxCsvAndGuarantee) {
  const Outcome r = Run("approx --eps1 0.065 --eps2 0.035 --n 4,6 --repeat 2 --seed 1");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,T(P1),m,q,m_eps,q_eps,T(P2),#MO-CR");
  EXPECT_NE(r.err.find("\"guarantee\": \"44091/40000\""), std::string::npos);
  const std::string flags = "approx --eps1 13/200 --eps2 7/200 --n 4 --seed 1 --no-times";
  EXPECT_EQ(Run(flags).out, Run(flags).out);
  ASSERT_EQ(Run(flags + " --summary " + Path("sum.json")).status, 0);
  EXPECT_NE(Read("sum.json").find("1.102275"), std::string::npos);
}

TEST_F(CliTest, MonteCarloModes) {
  const Outcome z = Run("montecarlo --mode z --n 3 --alpha 2 --beta 1 --trials 5 --seed 1");
  ASSERT_EQ(z.status, 0) << z.err;
  EXPECT_EQ(z.out.substr(0, 8), "trial,Z\n");
  EXPECT_NE(z.err.find("\"chebyshev_bound\""), std::string::npos);
  const Outcome beta = Run("montecarlo --mode beta --alpha 20 --d 2 --trials 5 --seed 1");
  ASSERT_EQ(beta.status, 0) << beta.err;
  EXPECT_EQ(beta.out.substr(0, 11), "trial,beta\n");
}

TEST_F(CliTest, PotentialAndMixedWrappers) {
  ASSERT_EQ(Run("gen --kind potential --n 3 --alpha 2 --d 2 --seed 4 -o " + Path("p.json") +
                " --phi " + Path("phi.json")).status, 0);
  const Outcome pot = Run("check-potential " + Path("p.json") + " --phi " + Path("phi.json"));
  ASSERT_EQ(pot.status, 0) << pot.err;
  EXPECT_NE(pot.out.find("\"holds\": true"), std::string::npos);
  ASSERT_EQ(Run("gen --kind potential --n 3 --alpha 2 --d 2 --seed 5 -o " + Path("q.json") +
                " --phi " + Path("phi2.json")).status, 0);
  EXPECT_NE(Run("check-potential " + Path("q.json") + " --phi " + Path("phi.json")).status, 0);

  Write("fig.json",
        R"({"kind":"normal","n":1,"d":2,"actions":[3],"payoffs":[[[1,4],[2,2],[4,1]]]})");
  Write("pure.json", R"({"profile":[[0,1,0]]})");
  const Outcome mixed = Run("mixed " + Path("fig.json") + " --profile " + Path("pure.json"));
  ASSERT_EQ(mixed.status, 0) << mixed.err;
  EXPECT_NE(mixed.out.find("\"def4\": false"), std::string::npos);
  EXPECT_NE(mixed.out.find("\"def5\": true"), std::string::npos);
}

TEST_F(CliTest, MembershipGrid) {
  Write("e.json", "[[2,2]]");
  Write("f.json", "[[4,1],[1,4]]");
  const Outcome r = Run("membership-grid --wst-e " + Path("e.json") + " --frontier " +
                        Path("f.json") + " --resolution 4 --max 2");
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "rho1,rho2,member");
  int rows = 0;
  bool saw_half_two = false;
  bool saw_one_one = false;
  while (std::getline(lines, line)) {
    ++rows;
    if (line == "1/2,2,1") saw_half_two = true;
    if (line == "1,1,0") saw_one_one = true;
  }
  EXPECT_EQ(rows, 25);
  EXPECT_TRUE(saw_half_two);
  EXPECT_TRUE(saw_one_one);
}

}  // namespace
