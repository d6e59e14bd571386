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

#ifndef SUMPROD_VERIFY_HPP_
#define SUMPROD_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumprod {

enum class Suite { kAll, kIdentities, kBounds, kOracle, kGauss, kSubfields };

std::optional<Suite> ParseSuite(std::string_view name);

struct VerifyOptions {
  std::uint64_t max_q = 4096;
  std::uint64_t seed = 20161;
};

struct CheckLine {
  std::string suite;
  std::string name;
  bool passed = true;
  std::uint64_t evaluations = 0;
  std::string detail;  // first failure, if any
};

// Runs every check of the suite. Failures are reported in the lines, not
// thrown.
std::vector<CheckLine> RunSuite(Suite suite, const VerifyOptions& options);

// All (p, m) with p^m <= max_q, ordered by q.
std::vector<std::pair<std::uint64_t, int>> PrimePowersUpTo(std::uint64_t max_q);

}  // namespace sumprod

#endif  // SUMPROD_VERIFY_HPP_
