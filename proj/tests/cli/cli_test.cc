// Copyright 2026 The fqspectra Authors.
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

#include "fqspectra/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fqs::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::string& line) {
  std::istringstream words(line);
  std::vector<std::string> args;
  for (std::string w; words >> w;) args.push_back(w);
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Result& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fqspectra_cli_" + name);
}

std::string write_plan(const std::string& name, const std::string& body) {
  const auto path = temp_path(name);
  std::ofstream(path) << body;
  return path.string();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// ----- golden invocations ---------------------------------------------------

TEST(Golden, VarietyCheckSphere) {
  const Result r = invoke("variety check --p 3 --d 2 --family sphere --j 1 --pretty");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "|V| = 4\n"
            "C1 = 1.3333\n"
            "C2 = 1.1547\n"
            "max character sum = 2.0000\n"
            "verdict: REGULAR\n");
}

TEST(Golden, EnergyLambdaSphere) {
  const Result r = invoke("energy lambda --p 3 --d 2 --family sphere --j 1 --subset all --k 4");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "36\n");
}

TEST(Golden, EvenCharacteristicIsAUsageError) {
  const Result r = invoke("spectrum affine --p 2 --d 1 --s 3");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("EvenCharacteristic"), std::string::npos);
}

TEST(Golden, VarietyEnumParaboloid) {
  const Result r = invoke("variety enum --p 3 --d 2 --family paraboloid");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "3 2 3\n0,0\n1,1\n2,1\n");
}

TEST(Golden, CayleySphereSummary) {
  const Result r = invoke("spectrum cayley --p 3 --d 2 --family sphere");
  EXPECT_EQ(r.code, kExitOk);
  const auto j = parsed(r);
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["degree"], 4);
  EXPECT_NEAR(j["lambda"].get<double>(), 2.0, 1e-9);
}

TEST(Golden, EuclideanWithinBound) {
  const Result r = invoke("spectrum euclidean --p 5 --d 2 --t 1");
  EXPECT_EQ(r.code, kExitOk);
  const auto j = parsed(r);
  EXPECT_NEAR(j["lambda"].get<double>(), 1 + std::sqrt(5.0), 1e-9);
  EXPECT_TRUE(j["holds"].get<bool>());
}

TEST(Golden, AffineQuadraticIsTight) {
  const Result r = invoke("spectrum affine --p 3 --d 1 --s 2");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NEAR(parsed(r)["lambda"].get<double>(), 3.0, 1e-9);
}

TEST(Golden, AffineCubicExceedsFieldOrder) {
  // Two cubic Weil sums can each exceed sqrt(q), so the product passes q.
  const Result r = invoke("spectrum affine --p 5 --d 1 --s 3");
  EXPECT_EQ(r.code, kExitAuditFailure);
  EXPECT_FALSE(parsed(r)["holds"].get<bool>());
}

TEST(Golden, NuTableCsv) {
  const Result r = invoke("energy nu --p 3 --d 2 --k 2");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "t,count\n0,4\n1,4\n2,8\n");
}

TEST(Golden, UnknownFormatIsAUsageError) {
  const Result r = invoke("energy delta --p 3 --d 2 --k 2 --format xml");
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Golden, MissingRequiredFlag) {
  const Result r = invoke("variety check --d 2");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--p"), std::string::npos);
}

TEST(Golden, CoverageExperimentPasses) {
  const std::string plan =
      write_plan("coverage.plan", "p = 5\nd = 2\nk = 2\nsizes = 1x\ntrials = 3\n");
  const Result r = invoke("experiment coverage --plan " + plan);
  EXPECT_EQ(r.code, kExitOk);
  const auto j = parsed(r);
  EXPECT_EQ(j["kind"], "coverage");
  EXPECT_EQ(j["hard_failures"], 0);
  EXPECT_EQ(j["records"].size(), 3u);
}

// ----- contracts ------------------------------------------------------------

TEST(Contract, DeltaOutput) {
  const Result r = invoke("energy delta --p 3 --d 2 --k 2");
  EXPECT_EQ(r.code, kExitOk);
  const auto j = parsed(r);
  EXPECT_EQ(j["values"], nlohmann::json::array({0, 1, 2}));
  EXPECT_TRUE(j["covers_all"].get<bool>());
}

TEST(Contract, RoundTripThroughVarietyFile) {
  const auto file = temp_path("sphere.txt");
  ASSERT_EQ(invoke("variety enum --p 5 --d 3 --family sphere --j 2 --out " + file.string()).code,
            kExitOk);
  const std::string from_file = "--p 5 --d 3 --variety-file " + file.string();
  const std::string from_family = "--p 5 --d 3 --family sphere --j 2";
  for (const std::string cmd : {"spectrum cayley --format table ", "energy lambda --k 4 ",
                                "energy nu --k 3 ", "variety check "}) {
    const Result a = invoke(cmd + from_file);
    const Result b = invoke(cmd + from_family);
    EXPECT_EQ(a.code, kExitOk) << cmd << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Contract, ThreadCountDoesNotChangeOutput) {
  const std::string plan = write_plan(
      "threads.plan", "p = 5\nd = 3\nk = 2, 3\nsizes = 0.5x, 1x\ntrials = 4\nseed = 3\n");
  const Result one = invoke("experiment coverage --threads 1 --plan " + plan);
  const Result many = invoke("experiment coverage --threads 4 --plan " + plan);
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, many.out);
  const Result s1 = invoke("spectrum cayley --p 7 --d 3 --threads 1 --format table");
  const Result s4 = invoke("spectrum cayley --p 7 --d 3 --threads 3 --format table");
  EXPECT_EQ(s1.out, s4.out);
}

TEST(Contract, SeedFlagDrivesSampling) {
  const std::string base = "energy lambda --p 7 --d 3 --k 4 --subset random:20";
  EXPECT_EQ(invoke(base).out, invoke(base + " --seed 0").out);
  const Result a = invoke(base + " --seed 5");
  EXPECT_EQ(a.out, invoke(base + " --seed 5").out);
  const std::string plan = write_plan("seed.plan", "p = 5\nd = 2\nk = 2\nsizes = 4\ntrials = 2\n");
  const Result p1 = invoke("experiment coverage --seed 9 --plan " + plan);
  EXPECT_NE(p1.out.find("\"seed\":9"), std::string::npos);
}

TEST(Contract, OutFileMatchesStdout) {
  const auto file = temp_path("spectrum.json");
  const Result direct = invoke("spectrum euclidean --p 7 --d 2 --t 3");
  ASSERT_EQ(invoke("spectrum euclidean --p 7 --d 2 --t 3 --out " + file.string()).code, kExitOk);
  EXPECT_EQ(slurp(file), direct.out);
}

TEST(Contract, MixingAuditOnEveryGraphKind) {
  for (const std::string g : {"--d 2 --graph variety --family paraboloid",
                              "--d 2 --graph euclidean --t 2", "--d 1 --graph affine --s 2"}) {
    const Result r = invoke("audit mixing --p 5 --pairs 200 " + g);
    EXPECT_EQ(r.code, kExitOk) << g << r.err;
    EXPECT_EQ(parsed(r)["violations"], 0);
  }
}

TEST(Contract, OddKEnergyIsRejected) {
  const Result r = invoke("energy lambda --p 3 --d 2 --k 3");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("OddK"), std::string::npos);
}

TEST(Contract, HelpExitsCleanly) {
  const Result r = invoke("spectrum cayley --help");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("--subset"), std::string::npos);
}

}  // namespace
}  // namespace fqs::cli
