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

#include "sumprod/setops.hpp"

#include <algorithm>
#include <cmath>

namespace sumprod {

ESet ProductSet(const ESet& a, const ESet& b) {
  RequireSameField(a, b);
  const Field& f = a.field();
  std::vector<std::uint32_t> out;
  out.reserve(a.size() * b.size());
  for (std::uint32_t x : a.codes()) {
    for (std::uint32_t y : b.codes()) out.push_back(f.Mul({x}, {y}).code);
  }
  return ESet(a.field_ptr(), std::move(out));
}

ESet SumSet(const ESet& a, const ESet& b) {
  RequireSameField(a, b);
  const Field& f = a.field();
  std::vector<std::uint32_t> out;
  out.reserve(a.size() * b.size());
  for (std::uint32_t x : a.codes()) {
    for (std::uint32_t y : b.codes()) out.push_back(f.Add({x}, {y}).code);
  }
  return ESet(a.field_ptr(), std::move(out));
}

ESet DifferenceSet(const ESet& a, const ESet& b) {
  RequireSameField(a, b);
  const Field& f = a.field();
  std::vector<std::uint32_t> out;
  out.reserve(a.size() * b.size());
  for (std::uint32_t x : a.codes()) {
    for (std::uint32_t y : b.codes()) out.push_back(f.Sub({x}, {y}).code);
  }
  return ESet(a.field_ptr(), std::move(out));
}

ESet Shift(const ESet& a, Elem d) {
  const Field& f = a.field();
  Require(f.IsValid(d), Errc::kInvalidElement, "shift outside field");
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  for (std::uint32_t x : a.codes()) out.push_back(f.Add({x}, d).code);
  return ESet(a.field_ptr(), std::move(out));
}

ESet Dilate(const ESet& a, Elem alpha) {
  const Field& f = a.field();
  Require(f.IsValid(alpha), Errc::kInvalidElement, "dilation outside field");
  Require(alpha.code != 0, Errc::kPrecondition, "dilation by zero");
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  for (std::uint32_t x : a.codes()) out.push_back(f.Mul({x}, alpha).code);
  return ESet(a.field_ptr(), std::move(out));
}

std::vector<int> ProperSubfieldDegrees(int m) {
  std::vector<int> out;
  for (int nu = 1; nu < m; ++nu) {
    if (m % nu == 0) out.push_back(nu);
  }
  return out;
}

CosetScanResult CosetScan(const ESet& s, double threshold_exponent,
                          ThresholdBase base) {
  Require(!s.empty(), Errc::kPrecondition, "coset scan of an empty set");
  const FieldPtr& fp = s.field_ptr();
  const Field& f = *fp;
  CosetScanResult result;
  const bool has_zero = s.Contains(f.Zero());
  // Discrete logs of S's elements: x = g^l lies in the coset g^{l mod k} F.
  const bool dense = f.order() <= (1u << 24);
  std::vector<std::uint32_t> log_of;
  if (dense && f.degree() > 1) {
    log_of.assign(f.order(), 0);
    Elem x = f.One();
    for (std::uint32_t i = 0; i + 1 < f.order(); ++i) {
      log_of[x.code] = i;
      x = f.Mul(x, f.generator());
    }
  }
  for (int nu : ProperSubfieldDegrees(f.degree())) {
    std::uint64_t sub_order = 1;
    for (int i = 0; i < nu; ++i) sub_order *= f.characteristic();
    const std::uint64_t cosets = (f.order() - 1) / (sub_order - 1);
    const double size = base == ThresholdBase::kSubfieldSize
                            ? static_cast<double>(sub_order)
                            : static_cast<double>(s.size());
    const double threshold = std::pow(size, threshold_exponent);
    std::vector<std::uint64_t> tally(cosets, has_zero ? 1 : 0);
    for (std::uint32_t c : s.codes()) {
      if (c == 0) continue;
      std::uint64_t idx = 0;
      if (dense) {
        idx = log_of[c] % cosets;
      } else {
        // Elements of F^* are exactly the y with y^{sub_order - 1} = 1, so x
        // lies in g^j F iff (x g^{-j})^{sub_order-1} = 1.
        const Elem x{c};
        const Elem ginv = f.Inv(f.generator());
        Elem probe = x;
        for (std::uint64_t j = 0; j < cosets; ++j) {
          if (f.Pow(probe, sub_order - 1) == f.One()) {
            idx = j;
            break;
          }
          probe = f.Mul(probe, ginv);
        }
      }
      ++tally[idx];
    }
    Elem rep = f.One();
    for (std::uint64_t j = 0; j < cosets; ++j) {
      CosetStat stat{nu, rep, tally[j], threshold};
      const double ratio = static_cast<double>(tally[j]) / threshold;
      result.worst_ratio = std::max(result.worst_ratio, ratio);
      if (static_cast<double>(tally[j]) > threshold) result.pass = false;
      result.stats.push_back(stat);
      rep = f.Mul(rep, f.generator());
    }
  }
  return result;
}

}  // namespace sumprod
