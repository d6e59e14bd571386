// Copyright 2026 The sumprod-lab Authors.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sumprod/energy.hpp"
#include "sumprod/families.hpp"
#include "sumprod/report_io.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/subgroup.hpp"
#include "sumprod/sweep.hpp"
#include "sumprod/verify.hpp"

namespace sumprod {
namespace {

TEST(RngTest, DeterministicPerSeedAndStream) {
  Rng a(42, 1), b(42, 1), c(42, 2);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.Next();
    EXPECT_EQ(x, b.Next());
    differs = differs || x != c.Next();
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, BelowStaysInRangeAndCoversIt) {
  Rng r(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = r.Below(10);
    ASSERT_LT(x, 10u);
    seen.insert(x);
    const auto y = r.Between(5, 6);
    ASSERT_TRUE(y == 5 || y == 6);
  }
  EXPECT_EQ(seen.size(), 10u);
  EXPECT_EQ(r.Below(1), 0u);
}

TEST(FamilyTest, NamesRoundTrip) {
  for (Family f : {Family::kRandom, Family::kSubgroup, Family::kShiftedSubgroup,
                   Family::kInterval, Family::kGeometric}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_THROW(ParseFamily("spiral"), Error);
}

TEST(FamilyTest, Shapes) {
  const FieldPtr f7 = Field::Make(7, 1);
  EXPECT_EQ(GenerateFamily(f7, Family::kSubgroup, 3, 1, 0), ESet(f7, {1, 2, 4}));
  // Largest divisor of q - 1 not above the request.
  EXPECT_EQ(GenerateFamily(f7, Family::kSubgroup, 5, 1, 0).size(), 3u);
  EXPECT_EQ(GenerateFamily(f7, Family::kShiftedSubgroup, 3, 1, 0),
            ESet(f7, {2, 3, 5}));
  EXPECT_EQ(GenerateFamily(f7, Family::kInterval, 3, 1, 0), ESet(f7, {1, 2, 3}));
  EXPECT_EQ(GenerateFamily(f7, Family::kGeometric, 3, 1, 0), ESet(f7, {1, 3, 2}));
  EXPECT_THROW(GenerateFamily(f7, Family::kRandom, 0, 1, 0), Error);
  EXPECT_THROW(GenerateFamily(f7, Family::kRandom, 7, 1, 0), Error);
  EXPECT_THROW(GenerateFamily(Field::Make(3, 2), Family::kInterval, 3, 1, 0),
               Error);
}

TEST(FamilyTest, RandomIsDeterministicAndNonzero) {
  const FieldPtr f = Field::Make(101, 1);
  for (std::uint64_t size : {5u, 60u, 100u}) {
    const ESet a = GenerateFamily(f, Family::kRandom, size, 9, 3);
    EXPECT_EQ(a, GenerateFamily(f, Family::kRandom, size, 9, 3));
    EXPECT_EQ(a.size(), size);
    EXPECT_FALSE(a.Contains({0}));
  }
  EXPECT_NE(GenerateFamily(f, Family::kRandom, 5, 9, 3),
            GenerateFamily(f, Family::kRandom, 5, 9, 4));
}

constexpr const char* kConfig = R"({
  "fields": [[101, 1], {"p": 3, "m": 4}],
  "family": "random",
  "sizes": [4, 8],
  "trials": 2,
  "seed": 5,
  "d_policy": "random_nonzero",
  "outputs": "out.csv"
})";

TEST(SweepTest, ParsesConfig) {
  const SweepConfig c = ParseSweepConfig(kConfig);
  ASSERT_EQ(c.fields.size(), 2u);
  EXPECT_EQ(c.fields[1], (std::pair<std::uint64_t, int>{3, 4}));
  EXPECT_EQ(c.sizes, (std::vector<std::uint64_t>{4, 8}));
  EXPECT_EQ(c.trials, 2u);
  EXPECT_FALSE(c.fixed_d.has_value());
  EXPECT_EQ(c.output, "out.csv");
  EXPECT_EQ(c.preset, Preset::kSame);
  EXPECT_EQ(c.threads, 1u);
}

TEST(SweepTest, RejectsBadConfig) {
  auto code_of = [](const std::string& text) {
    try {
      ParseSweepConfig(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kPrecondition;
  };
  EXPECT_EQ(code_of("{"), Errc::kConfig);
  EXPECT_EQ(code_of(R"({"fields": [[7,1]], "family": "random", "sizes": [2],
                        "seed": 1, "outputs": "x", "colour": 1})"),
            Errc::kConfig);
  EXPECT_EQ(code_of(R"({"fields": [[7,1]], "family": "random", "sizes": [2],
                        "seed": 1})"),
            Errc::kConfig);
  EXPECT_EQ(code_of(R"({"fields": [[7,1]], "family": "random", "sizes": [2],
                        "seed": 1, "outputs": "x", "d_policy": 0})"),
            Errc::kConfig);
}

TEST(SweepTest, RowsAreSortedAndThreadIndependent) {
  SweepConfig c = ParseSweepConfig(kConfig);
  SweepStats stats;
  const auto rows = RunSweep(c, &stats);
  EXPECT_EQ(rows.size(), 8u);
  EXPECT_EQ(stats.rows, 8u);
  EXPECT_GE(stats.audited, 1u);
  EXPECT_EQ(rows.front().p, 3u);
  for (const ResultRow& r : rows) {
    EXPECT_NE(r.d, 0u);
    EXPECT_GE(r.k, 1.0);
    EXPECT_EQ(r.runtime_ms, 0.0);
  }
  c.threads = 3;
  EXPECT_EQ(FormatSweepCsv(RunSweep(c)), FormatSweepCsv(rows));
}

TEST(SweepTest, CsvHasVersionLineAndHeader) {
  SweepConfig c = ParseSweepConfig(kConfig);
  const std::string csv = FormatSweepCsv(RunSweep(c));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvVersionLine);
  std::getline(in, line);
  EXPECT_EQ(line,
            "p,m,q,family,size,trial,seed,d,K,L,maxKL,measured_exponent,"
            "ratio_K14L12,hypothesis_ok,runtime_ms");
}

TEST(SweepTest, FixedDOutsideFieldIsRejected) {
  SweepConfig c = ParseSweepConfig(kConfig);
  c.fixed_d = 81;
  EXPECT_THROW(RunSweep(c), Error);
}

TEST(FitTest, RecoversKnownLine) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 1; i <= 6; ++i) pts.emplace_back(i, 1.5 * i - 2);
  const ExponentFit f = FitLine(pts);
  EXPECT_NEAR(f.slope, 1.5, 1e-12);
  EXPECT_NEAR(f.intercept, -2.0, 1e-12);
  EXPECT_EQ(f.points, 6u);
  const std::vector<std::pair<double, double>> flat = {{1, 1}, {1, 2}};
  EXPECT_THROW(FitLine(flat), Error);
}

TEST(FitTest, ExponentFromRows) {
  // max(K, L) |A| = |A|^{1.25} exactly.
  std::vector<ResultRow> rows;
  for (std::uint64_t s : {4u, 16u, 64u}) {
    ResultRow r;
    r.size = s;
    r.max_kl = std::pow(static_cast<double>(s), 0.25);
    rows.push_back(r);
  }
  EXPECT_NEAR(FitExponent(rows).slope, 1.25, 1e-12);
  EXPECT_NE(FormatFitCsv(rows).find("all,,,3,1.25,"), std::string::npos);
}

TEST(ReportIoTest, FieldAndEnergyJson) {
  const FieldPtr f9 = Field::Make(3, 2);
  const auto j = ToJson(*f9);
  EXPECT_EQ(j["q"], 9);
  EXPECT_EQ(j["generator"], 4);
  EXPECT_EQ(j["modulus"], nlohmann::json({1, 0, 1}));
  const FieldPtr f7 = Field::Make(7, 1);
  const auto e = ToJson(Energy(ESet(f7, {1, 2, 3}), ESet(f7, {1, 2, 3}),
                               EnergyKind::kMultiplicative));
  EXPECT_EQ(e["value"], 19);
  EXPECT_EQ(e["support"], 5);
}

TEST(ReportIoTest, CsvRows) {
  const FieldPtr f16 = Field::Make(2, 4);
  const auto rows = NCondition(f16, 5);
  const std::string row = ConditionCsvRow(*f16, 5, rows[1]);
  EXPECT_EQ(row.rfind("16,2,4,5,2,5,", 0), 0u) << row;
  EXPECT_NE(row.find(",false"), std::string::npos);
  EXPECT_EQ(GaussCsvHeader(),
            "q,p,m,n,a,re,im,abs,weil,konyagin,paper_bound,ratio_weil,ratio_paper");
}

TEST(VerifyTest, SmallSuitesPass) {
  VerifyOptions o;
  o.max_q = 64;
  for (Suite s : {Suite::kIdentities, Suite::kBounds, Suite::kOracle,
                  Suite::kGauss, Suite::kSubfields}) {
    for (const CheckLine& line : RunSuite(s, o)) {
      EXPECT_TRUE(line.passed) << line.name << ": " << line.detail;
    }
  }
  EXPECT_FALSE(ParseSuite("nope").has_value());
}

TEST(VerifyTest, PrimePowers) {
  const auto v = PrimePowersUpTo(9);
  const std::vector<std::pair<std::uint64_t, int>> want = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  EXPECT_EQ(v, want);
}

// Runs the CLI, returning (exit code, stdout).
std::pair<int, std::string> RunCli(const std::string& args) {
  const std::string cmd = std::string(SUMPROD_LAB_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(CliTest, SingleShotCommands) {
  auto [rc, out] = RunCli("prodset --p 7 --m 1 --a 1,2,4 --b 1,2,4");
  EXPECT_EQ(rc, 0);
  EXPECT_NE(out.find("1,2,4"), std::string::npos);
  std::tie(rc, out) = RunCli("energy --p 7 --m 1 --a 1,2,3 --kind mult --json");
  EXPECT_EQ(rc, 0);
  EXPECT_EQ(nlohmann::json::parse(out)["value"], 19);
  std::tie(rc, out) = RunCli("count --p 7 --m 1 --g-order 3 --h-order 3 --d 1");
  EXPECT_EQ(rc, 0);
  EXPECT_NE(out.find("solutions: 1"), std::string::npos);
  std::tie(rc, out) = RunCli("gauss --p 5 --m 1 --n 2 --a 1");
  EXPECT_EQ(rc, 0);
  EXPECT_NE(out.find("2.236067977"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(RunCli("field info --p 4 --m 1").first, 2);
  EXPECT_EQ(RunCli("energy --p 7 --m 1 --a 1,9").first, 2);
  EXPECT_EQ(RunCli("verify bogus").first, 2);
  EXPECT_EQ(RunCli("--no-such-flag").first, 2);
  EXPECT_EQ(RunCli("verify identities --max-q 32").first, 0);
}

TEST(CliTest, SweepWritesCsvAndFit) {
  const auto dir = std::filesystem::temp_directory_path() / "sumprod_cli_sweep";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "c.json";
  const auto out = dir / "o.csv";
  std::ofstream(cfg) << R"({"fields": [[101, 1]], "family": "geometric",
    "sizes": [4, 8, 16], "seed": 1, "outputs": ")" << out.string() << "\"}";
  EXPECT_EQ(RunCli("sweep --config " + cfg.string()).first, 0);
  EXPECT_TRUE(std::filesystem::exists(out));
  EXPECT_TRUE(std::filesystem::exists(out.string() + ".fit.csv"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace sumprod
