// Copyright 2026 The pdcap Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdcap/cli.hpp"
#include "support/oracles.hpp"

namespace pdcap::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pdcap_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, testing::kOneMinusH2Of09, 1e-300, -2.5, 0.75}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(0.75), "0.75");
}

TEST(Region, DephasingGrid) {
  const CliRun r = run({"region", "--channel", "dephasing", "--p", "0.2", "--grid", "101"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, "param,b_rp,b_ps,b_rps");
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows.back()[0], 0.5);
  EXPECT_NEAR(rows.back()[2], testing::kOneMinusH2Of09, 1e-12);
}

TEST(Region, ErasureGrid) {
  const CliRun r = run({"region", "--channel", "erasure", "--eps", "0.25", "--grid", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<double>{0.0, 0.75, 0.0, 0.75}));
  EXPECT_EQ(rows[1][0], 0.25);
  EXPECT_NEAR(rows[1][2], 0.5 * testing::kH2Of025, 1e-15);
  EXPECT_EQ(rows[2], (std::vector<double>{0.5, 0.75, 0.5, 0.5}));
}

TEST(Region, CloningConstantRate) {
  const CliRun r = run({"region", "--channel", "cloning", "--n", "10", "--grid", "51"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 51u);
  for (const auto& row : rows) EXPECT_EQ(row[1], rows.front()[1]);
}

TEST(Region, JsonFormat) {
  const CliRun r = run({"region", "--channel", "erasure", "--eps", "0.25", "--grid", "5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 5u);
  EXPECT_EQ(doc[4]["b_ps"].get<double>(), 0.5);
}

TEST(Region, FileOutputIsStable) {
  const fs::path a = scratch("a.csv");
  const fs::path b = scratch("b.csv");
  for (const fs::path& p : {a, b}) {
    const CliRun r = run({"region", "--channel", "dephasing", "--p", "0.2", "--seed", "3", "--out", p.string(),
                       "--plot", p.string() + ".gp"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  const std::string script = slurp(a.string() + ".gp");
  EXPECT_NE(script.find(a.string()), std::string::npos);
}

TEST(Region, EntanglementBreaking) {
  const CliRun r = run({"region", "--channel", "eb", "--restarts", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_FALSE(rows.empty());
  EXPECT_NEAR(rows[0][1], 1.0, 5e-3);
  EXPECT_EQ(rows[0][2], 0.0);
}

TEST(Formula, ErasureClosedForm) {
  const CliRun r = run({"formula", "--channel", "erasure", "--eps", "0.25", "--lambda", "1", "--mu", "0",
                     "--restarts", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["closed_form_value"].get<double>(), 1.25, 1e-12);
  EXPECT_NEAR(doc["numeric_value"].get<double>(), 1.25, 5e-3);
  EXPECT_TRUE(doc.contains("param"));
  EXPECT_TRUE(doc.contains("gap"));
}

TEST(Formula, DephasingHolevo) {
  const CliRun r = run({"formula", "--channel", "dephasing", "--p", "0.2", "--lambda", "0", "--mu", "0",
                     "--restarts", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["closed_form_value"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(doc["numeric_value"].get<double>(), 1.0, 5e-3);
}

TEST(Formula, CustomFileIdentity) {
  const std::string file = std::string(PDCAP_TEST_DATA_DIR) + "/identity_qubit.json";
  const CliRun r = run({"formula", "--channel", "custom-file", "--file", file, "--lambda", "1", "--mu", "0",
                     "--restarts", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["numeric_value"].get<double>(), 2.0, 5e-3);
}

TEST(Verify, FastSuitesPass) {
  for (const std::string suite : {"unit-matrix", "erasure-affine"}) {
    const CliRun r = run({"verify", "--suite", suite, "--eps", "0.25"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
}

TEST(Verify, UnknownSuite) {
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, kExitBadArguments);
}

TEST(Member, Examples) {
  const CliRun in = run({"member", "--channel", "dephasing", "--p", "0.2", "-R", "1", "-P", "0", "-S", "0"});
  EXPECT_EQ(in.code, kExitOk);
  EXPECT_EQ(in.out.rfind("inside witness_param=0", 0), 0u) << in.out;
  const CliRun otp = run({"member", "--channel", "erasure", "--eps", "0.25", "-R", "-1", "-P", "1", "-S", "-1"});
  EXPECT_EQ(otp.code, kExitOk) << otp.err;
  const CliRun out = run({"member", "--channel", "cloning", "--n", "2", "-R", "0.7", "-P", "0", "-S", "0"});
  EXPECT_EQ(out.code, kExitFailure);
  EXPECT_NE(out.out.find("outside"), std::string::npos);
  EXPECT_NE(out.out.find("violated=R+P"), std::string::npos);
}

TEST(ExitCodes, BadArguments) {
  EXPECT_EQ(run({}).code, kExitBadArguments);
  EXPECT_EQ(run({"region", "--channel", "bogus"}).code, kExitBadArguments);
  EXPECT_EQ(run({"region", "--channel", "dephasing", "--p", "1.7"}).code, kExitBadArguments);
  EXPECT_EQ(run({"region", "--channel", "dephasing", "--p", "0.2", "--grid", "1"}).code, kExitBadArguments);
  EXPECT_EQ(run({"member", "--channel", "dephasing", "--p", "0.2", "-R", "1"}).code, kExitBadArguments);
  EXPECT_EQ(run({"region", "--channel", "dephasing", "--p", "0.2", "--plot"}).code, kExitBadArguments);
}

TEST(ExitCodes, IoFailure) {
  EXPECT_EQ(run({"formula", "--channel", "custom-file", "--file", "/nonexistent/ch.json"}).code, kExitIoFailure);
  EXPECT_EQ(run({"region", "--channel", "erasure", "--eps", "0.25", "--out", "/nonexistent/dir/r.csv"}).code,
            kExitIoFailure);
}

TEST(Environment, SeedFallback) {
  ::setenv("TRADEOFF_SEED", "7", 1);
  const CliRun r = run({"formula", "--channel", "erasure", "--eps", "0.25", "--restarts", "2"});
  ::unsetenv("TRADEOFF_SEED");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"].get<std::uint64_t>(), 7u);
}

}  // namespace
}  // namespace pdcap::cli
