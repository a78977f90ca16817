/*
   Copyright 2026 The hypergeo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypergeo/catalog.hpp"
#include "hypergeo/cli.hpp"

namespace {

struct Result {
  int rc;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hypergeo");
  std::ostringstream out, err;
  int rc = hypergeo::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) { setenv("HYPERGEO_MAX_DEPTH", value, 1); }
  ~EnvGuard() { unsetenv("HYPERGEO_MAX_DEPTH"); }
};

}  // namespace

TEST(Cli, ClassifyThm1) {
  auto r = run({"classify", "--f", "(X-1)^4", "--g", "Phi6^2"});
  EXPECT_EQ(r.rc, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "verdict: ArithmeticThm1"));
  EXPECT_TRUE(contains(r.out, "h = -2X^3+3X^2-2X"));
  EXPECT_TRUE(contains(r.out, "beta = 1/6 1/6 5/6 5/6"));
}

TEST(Cli, ClassifyKnownThinNote) {
  auto r = run({"classify", "--f", "(X-1)^4", "--g", "Phi5"});
  EXPECT_EQ(r.rc, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "verdict: Undetermined"));
  EXPECT_TRUE(contains(r.out, "note: known KnownThin"));
}

TEST(Cli, ClassifyJsonSchema) {
  auto r = run({"classify", "--f", "(X-1)^4", "--g", "Phi10", "--format", "json"});
  ASSERT_EQ(r.rc, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"f", "g", "n", "hypotheses", "h", "c", "k", "alpha", "beta", "omega", "verdict", "method",
                          "citations", "certificate"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["verdict"], "ArithmeticCertificate");
  EXPECT_EQ(j["omega"]["normalization"], "unit12");
  EXPECT_TRUE(j["hypotheses"]["admissible"].get<bool>());
  EXPECT_TRUE(hypergeo::recheck_certificate(j["certificate"]));
}

TEST(Cli, HypothesisViolationExitCode) {
  auto r = run({"classify", "--f", "X^2", "--g", "X^2+1"});
  EXPECT_EQ(r.rc, 2);
  EXPECT_TRUE(contains(r.err, "unit_constant"));
  EXPECT_EQ(run({"classify", "--f", "(X-1)^4", "--g", "(X-1)^4"}).rc, 2);
  EXPECT_EQ(run({"classify", "--f", "2X^2+1", "--g", "X^2+1"}).rc, 2);
}

TEST(Cli, ParseErrorExitCode) {
  auto r = run({"classify", "--f", "(X-1", "--g", "Phi10"});
  EXPECT_EQ(r.rc, 3);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"verify", "--f", "(X-1)^4", "--g", "Phi10", "--word", "[A,"}).rc, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).rc, 1);
  EXPECT_EQ(run({"classify", "--f", "(X-1)^4"}).rc, 1);
  EXPECT_EQ(run({"classify", "--f", "(X-1)^4", "--g", "Phi10", "--depth", "-1"}).rc, 1);
  EXPECT_EQ(run({"classify", "--f", "(X-1)^4", "--g", "Phi10", "--power-bound", "0"}).rc, 1);
  EXPECT_EQ(run({"bogus"}).rc, 1);
  EXPECT_EQ(run({"--help"}).rc, 0);
}

TEST(Cli, AlgebraErrorExitCode) {
  EXPECT_EQ(run({"verify", "--f", "(X-1)^4", "--g", "Phi10", "--word", "Q"}).rc, 4);
  EXPECT_EQ(run({"form", "--f", "Phi1^2*Phi4", "--g", "Phi6^2", "--normalize", "unit12"}).rc, 4);
}

TEST(Cli, FormUnit12) {
  auto r = run({"form", "--f", "(X-1)^4", "--g", "Phi10", "--normalize", "unit12"});
  EXPECT_EQ(r.rc, 0) << r.err;
  EXPECT_EQ(r.out,
            "normalization: unit12\n"
            "0 1 5/3 5/3\n"
            "-1 0 1 5/3\n"
            "-5/3 -1 0 1\n"
            "-5/3 -5/3 -1 0\n");
  auto a = run({"form", "--f", "Phi1^2*Phi4", "--g", "Phi6^2"});
  EXPECT_EQ(a.rc, 0);
  EXPECT_TRUE(contains(a.out, "normalization: primitive"));
}

TEST(Cli, VerifyRelation) {
  auto r = run({"verify", "--f", "(X-1)^4", "--g", "Phi10", "--let", "C1=A^-1*B", "--let", "C2=B^-2*C1*B^2",
                "--let", "C3=B^2*C1*B^-2", "--let", "E=(C2^2*C1*C3^2*C1^-1)^2*C1", "--let", "F=C2*E*C2^-1",
                "--word", "[E,[E,F]]"});
  EXPECT_EQ(r.rc, 0) << r.err;
  EXPECT_EQ(r.out, "identity\n");
  auto n = run({"verify", "--f", "(X-1)^4", "--g", "Phi10", "--word", "A B A^-1 B^-1"});
  EXPECT_EQ(n.rc, 1);
  EXPECT_TRUE(contains(n.out, "non-identity"));
}

TEST(Cli, TripleAndWitness) {
  auto t = run({"triple", "--f", "(X-1)^4", "--g", "Phi6^2"});
  EXPECT_EQ(t.rc, 0) << t.err;
  EXPECT_TRUE(contains(t.out, "Levi t = -2"));
  auto s = run({"triple", "--f", "Phi3*Phi4", "--g", "Phi6^2", "--search", "--format", "json"});
  ASSERT_EQ(s.rc, 0) << s.err;
  EXPECT_EQ(nlohmann::json::parse(s.out)["origin"], "Conjugator");
  auto w = run({"witness", "--f", "(X-1)^4", "--g", "Phi10", "--format", "json"});
  EXPECT_EQ(w.rc, 0) << w.err;
  EXPECT_TRUE(nlohmann::json::parse(w.out).contains("flag"));
}

TEST(Cli, DepthOverride) {
  {
    EnvGuard g("0");
    auto r = run({"witness", "--f", "(X-1)^4", "--g", "Phi10", "--depth", "6"});
    EXPECT_EQ(r.rc, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "witness: none within depth 0"));
  }
  {
    EnvGuard g("abc");
    EXPECT_EQ(run({"classify", "--f", "(X-1)^4", "--g", "Phi6^2"}).rc, 1);
  }
}

TEST(Cli, DeterministicOutput) {
  std::vector<std::string> args{"classify", "--f", "Phi3*Phi4", "--g", "Phi6^2", "--format", "json"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.rc, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EnumerateWritesTaggedTable) {
  auto dir = std::filesystem::temp_directory_path() / "hypergeo_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "deg2.csv").string();
  auto r = run({"enumerate", "--degree", "2", "--format", "csv", "--output", path});
  EXPECT_EQ(r.rc, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "rows to " + path));
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto recs = hypergeo::parse_csv(ss.str());
  ASSERT_GE(recs.size(), 2u);
  EXPECT_EQ(recs[0][8], "tags");
  for (std::size_t i = 1; i < recs.size(); ++i) EXPECT_TRUE(recs[i][8] == "T1" || recs[i][8] == "T2");
  EXPECT_EQ(run({"enumerate", "--degree", "2", "--output", (dir / "no" / "x.csv").string()}).rc, 5);
  EXPECT_EQ(run({"enumerate", "--degree", "2", "--format", "xml"}).rc, 3);
  std::filesystem::remove_all(dir);
}
