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

#include "sumprod/oracle.hpp"

#include <algorithm>

namespace sumprod::oracle {
namespace {

void RequireBudget(std::uint64_t work, const Budget& budget) {
  if (work > budget.max_quadruples) {
    Fail(Errc::kBudgetExceeded, "oracle work exceeds budget");
  }
}

bool ScanContains(std::span<const std::uint32_t> codes, std::uint32_t x) {
  for (std::uint32_t c : codes) {
    if (c == x) return true;
  }
  return false;
}

}  // namespace

std::uint64_t EnergyBrute(const ESet& a, const ESet& b, EnergyKind kind,
                          const Budget& budget) {
  RequireSameField(a, b);
  const std::uint64_t na = a.size(), nb = b.size();
  RequireBudget(na * na * nb * nb, budget);
  const Field& f = a.field();
  const bool add = kind == EnergyKind::kAdditive;
  std::uint64_t count = 0;
  for (std::uint32_t x : a.codes()) {
    for (std::uint32_t y : b.codes()) {
      const Elem lhs = add ? f.Add({x}, {y}) : f.Mul({x}, {y});
      for (std::uint32_t x2 : a.codes()) {
        for (std::uint32_t y2 : b.codes()) {
          const Elem rhs = add ? f.Add({x2}, {y2}) : f.Mul({x2}, {y2});
          if (lhs == rhs) ++count;
        }
      }
    }
  }
  return count;
}

std::uint64_t C4Brute(const ESet& a_prime, const ESet& c, Elem y1, Elem y2,
                      Elem y3, const Budget& budget) {
  RequireSameField(a_prime, c);
  const Field& f = c.field();
  Require(f.order() <= budget.max_q, Errc::kBudgetExceeded,
          "field too large for exhaustive inverse search");
  std::uint64_t count = 0;
  for (std::uint32_t cc : c.codes()) {
    Require(cc != 0, Errc::kPrecondition, "C contains zero");
    std::uint32_t inv = 0;
    for (std::uint32_t z = 1; z < f.order(); ++z) {
      if (f.Mul({cc}, {z}) == f.One()) {
        inv = z;
        break;
      }
    }
    bool all = true;
    for (Elem y : {y1, y2, y3}) {
      all = all && ScanContains(a_prime.codes(), f.Mul(y, {inv}).code);
    }
    if (all) ++count;
  }
  return count;
}

std::uint64_t CountSolutionsBrute(const ESet& g, const ESet& h, Elem d,
                                  const Budget& budget) {
  RequireSameField(g, h);
  RequireBudget(std::uint64_t{g.size()} * h.size(), budget);
  Require(d.code != 0, Errc::kPrecondition, "d must be nonzero");
  const Field& f = g.field();
  std::uint64_t count = 0;
  for (std::uint32_t x : g.codes()) {
    for (std::uint32_t y : h.codes()) {
      if (f.Sub({x}, {y}) == d) ++count;
    }
  }
  return count;
}

std::uint64_t SubfieldIntersectionBrute(const SubgroupInfo& g, int nu) {
  const Field& f = g.elements.field();
  Require(nu >= 1 && nu <= f.degree() && f.degree() % nu == 0,
          Errc::kNotDivisor, "nu must divide the degree");
  std::uint64_t count = 0;
  for (std::uint32_t x : g.elements.codes()) {
    Elem y{x};
    for (int i = 0; i < nu; ++i) y = f.Pow(y, f.characteristic());
    if (y.code == x) ++count;
  }
  return count;
}

std::vector<std::uint32_t> ProductSetBrute(const ESet& a, const ESet& b,
                                           const Budget& budget) {
  RequireSameField(a, b);
  RequireBudget(std::uint64_t{a.size()} * b.size(), budget);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x : a.codes()) {
    for (std::uint32_t y : b.codes()) {
      const std::uint32_t z = a.field().Mul({x}, {y}).code;
      if (!ScanContains(out, z)) out.push_back(z);
    }
  }
  return out;
}

std::vector<std::uint32_t> SumSetBrute(const ESet& a, const ESet& b,
                                       const Budget& budget) {
  RequireSameField(a, b);
  RequireBudget(std::uint64_t{a.size()} * b.size(), budget);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x : a.codes()) {
    for (std::uint32_t y : b.codes()) {
      const std::uint32_t z = a.field().Add({x}, {y}).code;
      if (!ScanContains(out, z)) out.push_back(z);
    }
  }
  return out;
}

}  // namespace sumprod::oracle
