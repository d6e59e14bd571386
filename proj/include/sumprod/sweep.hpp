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

#ifndef SUMPROD_SWEEP_HPP_
#define SUMPROD_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumprod/families.hpp"

namespace sumprod {

inline constexpr const char* kCsvVersionLine = "# sumprod-lab v1";

// How B and C are derived from A.
//   same:    B = A,     C = A
//   a-a1:    B = A + 1, C = A
//   aa-a1a1: B = A,     C = A + 1
enum class Preset { kSame, kAA1, kAAA1A1 };

struct SweepConfig {
  std::vector<std::pair<std::uint64_t, int>> fields;  // (p, m)
  Family family = Family::kRandom;
  std::vector<std::uint64_t> sizes;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> fixed_d = 1;  // nullopt: random nonzero
  std::string output;
  Preset preset = Preset::kSame;
  // Independent families for B and C instead of the preset.
  std::optional<Family> b_family;
  std::optional<Family> c_family;
  unsigned threads = 1;
  bool timing = false;  // runtime_ms is written as 0 unless set
};

// Parses the JSON config. Unknown keys and malformed values throw
// Error(kConfig).
SweepConfig ParseSweepConfig(std::string_view json_text);

struct ResultRow {
  std::uint64_t p = 0;
  int m = 0;
  std::uint64_t q = 0;
  Family family = Family::kRandom;
  std::uint64_t size = 0;  // actual |A|
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint32_t d = 0;
  double k = 0;
  double l = 0;
  double max_kl = 0;
  double measured_exponent = 0;  // log(max(K, L) size) / log size
  double ratio_k14_l12 = 0;
  bool hypothesis_ok = false;
  double runtime_ms = 0;
  std::uint64_t requested_size = 0;  // sort tiebreak, not written
};

struct SweepStats {
  std::size_t rows = 0;
  std::size_t audited = 0;  // rows whose K, L were recomputed by the oracle
};

// Rows come back sorted by (p, m, size, trial) regardless of thread count.
std::vector<ResultRow> RunSweep(const SweepConfig& config,
                                SweepStats* stats = nullptr);

std::string FormatSweepCsv(std::span<const ResultRow> rows);

struct ExponentFit {
  double slope = 0;
  double intercept = 0;
  std::size_t points = 0;
};

// Least squares of log(max(K, L) size) against log(size). Needs at least two
// distinct sizes.
ExponentFit FitExponent(std::span<const ResultRow> rows);
ExponentFit FitLine(std::span<const std::pair<double, double>> points);

// Per-field fits plus one over all rows, as CSV.
std::string FormatFitCsv(std::span<const ResultRow> rows);

// Runs the sweep and writes config.output and config.output + ".fit.csv".
SweepStats CmdSweep(const SweepConfig& config);

}  // namespace sumprod

#endif  // SUMPROD_SWEEP_HPP_
