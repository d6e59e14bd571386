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

#include "sumprod/subgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sumprod/energy.hpp"
#include "sumprod/setops.hpp"

namespace sumprod {
namespace {

std::uint64_t PrimePower(std::uint64_t p, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

void RequireProperDegree(const Field& f, int nu) {
  if (nu < 1 || nu >= f.degree() || f.degree() % nu != 0) {
    Fail(Errc::kNotDivisor, "nu must be a proper divisor of the degree");
  }
}

}  // namespace

SubgroupInfo SubgroupOfOrder(const FieldPtr& field, std::uint64_t t) {
  const std::uint64_t units = field->order() - 1;
  if (t == 0 || units % t != 0) {
    Fail(Errc::kNotDivisor,
         "subgroup order " + std::to_string(t) + " does not divide q - 1");
  }
  const Elem h = field->Pow(field->generator(), units / t);
  std::vector<std::uint32_t> codes;
  codes.reserve(t);
  Elem x = field->One();
  for (std::uint64_t i = 0; i < t; ++i) {
    codes.push_back(x.code);
    x = field->Mul(x, h);
  }
  return SubgroupInfo{t, ESet(field, std::move(codes)), std::nullopt, h};
}

SubgroupInfo NthPowers(const FieldPtr& field, std::uint64_t n) {
  Require(n >= 1, Errc::kPrecondition, "n must be at least 1");
  const std::uint64_t units = field->order() - 1;
  SubgroupInfo info = SubgroupOfOrder(field, units / std::gcd(n, units));
  info.n = n;
  return info;
}

SubfieldIntersection SubfieldIntersectionOf(const SubgroupInfo& g, int nu) {
  const FieldPtr& fp = g.elements.field_ptr();
  RequireProperDegree(*fp, nu);
  Require(g.n.has_value(), Errc::kPrecondition,
          "subgroup must be built as n-th powers");
  const std::uint64_t n = *g.n;
  const std::uint64_t units = fp->order() - 1;
  Require(units % n == 0, Errc::kNotDivisor, "n must divide q - 1");

  const ESet sub = Subfield(fp, nu);
  SubfieldIntersection r;
  for (std::uint32_t c : g.elements.codes()) {
    if (sub.Contains({c})) ++r.exact;
  }
  const std::uint64_t sub_units = PrimePower(fp->characteristic(), nu) - 1;
  r.formula = std::gcd(n, units / sub_units) * sub_units / n;
  if (r.exact != r.formula) {
    throw CheckFailure("subfield intersection differs from the gcd formula");
  }
  return r;
}

std::vector<ConditionReport> NCondition(const FieldPtr& field, std::uint64_t n,
                                        double delta) {
  const std::uint64_t units = field->order() - 1;
  Require(n >= 1 && units % n == 0, Errc::kNotDivisor, "n must divide q - 1");
  std::vector<ConditionReport> out;
  const double q = field->order();
  for (int nu : ProperSubfieldDegrees(field->degree())) {
    const std::uint64_t pnu = PrimePower(field->characteristic(), nu);
    ConditionReport r;
    r.nu = nu;
    r.lhs = std::gcd(n, units / (pnu - 1));
    r.rhs = std::pow(static_cast<double>(n), delta) * std::pow(q, 1.0 - delta) /
            static_cast<double>(pnu);
    r.ratio = static_cast<double>(r.lhs) / r.rhs;
    r.pass_at_constant_one = r.ratio <= 1.0;
    out.push_back(r);
  }
  return out;
}

std::vector<ConditionReport> FieldIntersectionCondition(const SubgroupInfo& g,
                                                        double delta1) {
  const FieldPtr& fp = g.elements.field_ptr();
  std::vector<ConditionReport> out;
  for (int nu : ProperSubfieldDegrees(fp->degree())) {
    const ESet sub = Subfield(fp, nu);
    ConditionReport r;
    r.nu = nu;
    for (std::uint32_t c : g.elements.codes()) {
      if (sub.Contains({c})) ++r.lhs;
    }
    r.rhs = std::pow(static_cast<double>(g.order), delta1);
    r.ratio = static_cast<double>(r.lhs) / r.rhs;
    r.pass_at_constant_one = r.ratio <= 1.0;
    out.push_back(r);
  }
  return out;
}

SolutionCount CountSolutions(const ESet& g, const ESet& h, Elem d) {
  RequireSameField(g, h);
  const Field& f = g.field();
  Require(f.IsValid(d), Errc::kInvalidElement, "d outside field");
  Require(d.code != 0, Errc::kPrecondition, "d must be nonzero");
  SolutionCount r;
  for (std::uint32_t x : g.codes()) {
    if (h.Contains(f.Sub({x}, d))) ++r.count;
  }
  r.exponent = f.degree() == 1 ? kPrimeCorollaryExponent
                               : kGeneralCorollaryExponent;
  const double big = static_cast<double>(std::max(g.size(), h.size()));
  r.corollary_ratio =
      big > 0 ? static_cast<double>(r.count) / std::pow(big, r.exponent) : 0.0;
  return r;
}

GroupEnergy GroupEnergyReport(const SubgroupInfo& g) {
  Require(g.elements.size() >= 2, Errc::kPrecondition,
          "group needs at least two elements");
  GroupEnergy r;
  r.energy = EnergyValue(g.elements, g.elements, EnergyKind::kAdditive);
  r.exponent = std::log(static_cast<double>(r.energy)) /
               std::log(static_cast<double>(g.elements.size()));
  return r;
}

}  // namespace sumprod
