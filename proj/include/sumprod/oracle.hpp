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

#ifndef SUMPROD_ORACLE_HPP_
#define SUMPROD_ORACLE_HPP_

#include <cstdint>

#include "sumprod/energy.hpp"
#include "sumprod/subgroup.hpp"

// Brute-force reference implementations. They only use the element
// arithmetic of Field and never call into the counting code they are used to
// check: no histograms, no lookup masks, no discrete logs.
namespace sumprod::oracle {

struct Budget {
  std::uint64_t max_quadruples = 100'000'000;
  std::uint64_t max_q = 4096;
};

// Four nested loops.
std::uint64_t EnergyBrute(const ESet& a, const ESet& b, EnergyKind kind,
                          const Budget& budget = {});

// Inverses by exhaustive search, membership by linear scan.
std::uint64_t C4Brute(const ESet& a_prime, const ESet& c, Elem y1, Elem y2,
                      Elem y3, const Budget& budget = {});

std::uint64_t CountSolutionsBrute(const ESet& g, const ESet& h, Elem d,
                                  const Budget& budget = {});

// Members of G fixed by x -> x^{p^nu}.
std::uint64_t SubfieldIntersectionBrute(const SubgroupInfo& g, int nu);

// Pair loops with linear-scan deduplication; result in first-seen order.
std::vector<std::uint32_t> ProductSetBrute(const ESet& a, const ESet& b,
                                           const Budget& budget = {});
std::vector<std::uint32_t> SumSetBrute(const ESet& a, const ESet& b,
                                       const Budget& budget = {});

}  // namespace sumprod::oracle

#endif  // SUMPROD_ORACLE_HPP_
