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

#include "sumprod/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sumprod/energy.hpp"

namespace sumprod {
namespace {

// Sums e_p(k) over a multiset of trace values. Values are sorted first so
// the floating point result does not depend on enumeration order.
std::complex<double> SumUnitRoots(const Field& f,
                                  std::vector<std::uint32_t> traces) {
  std::sort(traces.begin(), traces.end());
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < traces.size();) {
    std::size_t j = i;
    while (j < traces.size() && traces[j] == traces[i]) ++j;
    acc += static_cast<double>(j - i) * f.UnitRoot(traces[i]);
    i = j;
  }
  return acc;
}

void RequireNontrivial(const Field& f, Elem a) {
  Require(f.IsValid(a), Errc::kInvalidElement, "a outside field");
  Require(a.code != 0, Errc::kPrecondition,
          "a must be nonzero (trivial character excluded)");
}

}  // namespace

std::complex<double> GaussDirect(const Field& f, std::uint64_t n, Elem a) {
  RequireNontrivial(f, a);
  Require(n >= 1, Errc::kPrecondition, "n must be at least 1");
  Require(f.order() <= kGaussDirectMaxOrder, Errc::kBudgetExceeded,
          "direct Gauss sum limited to q <= 10^6");
  std::vector<std::uint32_t> traces(f.order());
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    traces[x] = f.Trace(f.Mul(a, f.Pow({x}, n))).code;
  }
  return SumUnitRoots(f, std::move(traces));
}

std::complex<double> SubgroupSum(const Field& f, const ESet& group, Elem a) {
  RequireNontrivial(f, a);
  Require(&group.field() == &f, Errc::kFieldMismatch,
          "group belongs to another field");
  std::vector<std::uint32_t> traces;
  traces.reserve(group.size());
  for (std::uint32_t g : group.codes()) {
    traces.push_back(f.Trace(f.Mul(a, {g})).code);
  }
  return SumUnitRoots(f, std::move(traces));
}

GaussAgreement GaussViaSubgroup(const FieldPtr& field, std::uint64_t n,
                                Elem a) {
  const std::uint64_t units = field->order() - 1;
  Require(n >= 1 && units % n == 0, Errc::kNotDivisor, "n must divide q - 1");
  const SubgroupInfo g = NthPowers(field, n);
  GaussAgreement r;
  r.via_subgroup = 1.0 + static_cast<double>(n) *
                             SubgroupSum(*field, g.elements, a);
  r.direct = GaussDirect(*field, n, a);
  r.deviation = std::abs(r.direct - r.via_subgroup);
  r.tolerance = 1e-6 * static_cast<double>(field->order());
  return r;
}

GaussReport BoundsReport(const FieldPtr& field, std::uint64_t n, Elem a) {
  Require(n >= 2, Errc::kPrecondition, "n must be at least 2");
  const GaussAgreement agree = GaussViaSubgroup(field, n, a);
  if (!agree.agrees()) {
    throw CheckFailure("direct and subgroup Gauss sums disagree");
  }
  const SubgroupInfo g = NthPowers(field, n);
  const double q = field->order();

  GaussReport r;
  r.n = n;
  r.a = a;
  r.value = agree.direct;
  r.abs = std::abs(r.value);
  r.subgroup_sum = SubgroupSum(*field, g.elements, a);
  r.subgroup_energy =
      EnergyValue(g.elements, g.elements, EnergyKind::kAdditive);
  r.weil = static_cast<double>(n - 1) * std::sqrt(q);
  r.konyagin = std::pow(q, 0.125) *
               std::pow(static_cast<double>(r.subgroup_energy), 0.25);
  r.paper_bound = std::pow(q, (7.0 - 2.0 * kDelta2) / 8.0) *
                  std::pow(static_cast<double>(n), (2.0 + 2.0 * kDelta2) / 8.0);
  r.nontrivial_threshold =
      std::pow(q, (1.0 + 2.0 * kDelta2) / (2.0 + 2.0 * kDelta2));
  r.below_threshold = static_cast<double>(n) < r.nontrivial_threshold;
  r.ratio_weil = r.abs / r.weil;
  r.ratio_paper = r.abs / r.paper_bound;

  if (r.abs > r.weil + 1e-6) {
    throw CheckFailure("Gauss sum exceeds the Weil bound");
  }
  if (std::abs(r.subgroup_sum) > r.konyagin + 1e-6) {
    throw CheckFailure("subgroup sum exceeds q^{1/8} E(G)^{1/4}");
  }
  return r;
}

}  // namespace sumprod
