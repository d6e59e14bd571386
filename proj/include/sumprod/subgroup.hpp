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

#ifndef SUMPROD_SUBGROUP_HPP_
#define SUMPROD_SUBGROUP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/eset.hpp"

namespace sumprod {

inline constexpr double kDefaultDelta = 119.0 / 605.0;
inline constexpr double kDefaultDelta1 = 486.0 / 605.0;
inline constexpr double kPrimeCorollaryExponent = 26.0 / 27.0;
inline constexpr double kGeneralCorollaryExponent = 559.0 / 560.0;

// A subgroup of F_q^*, generated by g^{(q-1)/order} for the field's cached
// generator g.
struct SubgroupInfo {
  std::uint64_t order = 0;
  ESet elements;
  // Set when the group was built as the n-th powers.
  std::optional<std::uint64_t> n;
  Elem generator_power;
};

SubgroupInfo SubgroupOfOrder(const FieldPtr& field, std::uint64_t t);
// {x^n : x in F_q^*}, of order (q-1)/gcd(n, q-1).
SubgroupInfo NthPowers(const FieldPtr& field, std::uint64_t n);

struct SubfieldIntersection {
  std::uint64_t exact = 0;    // |G ∩ F| by direct intersection
  std::uint64_t formula = 0;  // gcd(n, (q-1)/(p^nu-1)) (p^nu-1) / n
};

// Requires G built with n | q-1 and a proper nu | m. Throws CheckFailure if
// the two counts disagree.
SubfieldIntersection SubfieldIntersectionOf(const SubgroupInfo& g, int nu);

// One row of a subfield condition report. lhs is an exact count, rhs the
// bound taken with implicit constant one.
struct ConditionReport {
  int nu = 0;
  std::uint64_t lhs = 0;
  double rhs = 0;
  double ratio = 0;
  bool pass_at_constant_one = false;
};

// gcd(n, (q-1)/(p^nu-1)) against n^delta q^{1-delta} / p^nu, one row per
// proper nu | m. Empty for prime fields. Requires n | q-1.
std::vector<ConditionReport> NCondition(const FieldPtr& field, std::uint64_t n,
                                        double delta = kDefaultDelta);

// |G ∩ F| against |G|^delta1 for every proper subfield F.
std::vector<ConditionReport> FieldIntersectionCondition(
    const SubgroupInfo& g, double delta1 = kDefaultDelta1);

struct SolutionCount {
  std::uint64_t count = 0;
  // count / max(|G|, |H|)^e, e = 26/27 for prime fields and 559/560 otherwise.
  double corollary_ratio = 0;
  double exponent = 0;
};

// #{(g, h) in G x H : g - h = d}, d != 0.
SolutionCount CountSolutions(const ESet& g, const ESet& h, Elem d);

struct GroupEnergy {
  std::uint64_t energy = 0;  // E+(G)
  double exponent = 0;       // log E / log |G|
};

GroupEnergy GroupEnergyReport(const SubgroupInfo& g);

}  // namespace sumprod

#endif  // SUMPROD_SUBGROUP_HPP_
