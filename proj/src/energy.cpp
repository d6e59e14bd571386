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

#include "sumprod/energy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "sumprod/setops.hpp"

namespace sumprod {
namespace {

using u64 = std::uint64_t;

Elem Combine(const Field& f, EnergyKind kind, std::uint32_t x,
             std::uint32_t y) {
  return kind == EnergyKind::kAdditive ? f.Add({x}, {y}) : f.Mul({x}, {y});
}

// Counts the multiset of combined values. Calls emit(code, count) in
// ascending code order and returns sum of count^2.
template <typename Emit>
u64 CountRepresentations(const ESet& a, const ESet& b, EnergyKind kind,
                         Emit&& emit) {
  RequireSameField(a, b);
  const Field& f = a.field();
  const u64 pairs = u64{a.size()} * b.size();
  Require(pairs <= (u64{1} << 32), Errc::kBudgetExceeded,
          "energy needs |A||B| <= 2^32 to stay inside 64-bit counts");
  u64 value = 0;
  const u64 q = f.order();
  if (q <= (u64{1} << 16) || q <= 16 * pairs) {
    std::vector<std::uint32_t> counts(q, 0);
    for (std::uint32_t x : a.codes()) {
      for (std::uint32_t y : b.codes()) {
        std::uint32_t& r = counts[Combine(f, kind, x, y).code];
        value += 2 * u64{r} + 1;
        ++r;
      }
    }
    for (u64 z = 0; z < q; ++z) {
      if (counts[z] != 0) emit(static_cast<std::uint32_t>(z), u64{counts[z]});
    }
    return value;
  }
  std::vector<std::uint32_t> values;
  values.reserve(pairs);
  for (std::uint32_t x : a.codes()) {
    for (std::uint32_t y : b.codes()) {
      values.push_back(Combine(f, kind, x, y).code);
    }
  }
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const u64 r = j - i;
    value += r * r;
    emit(values[i], r);
    i = j;
  }
  return value;
}

bool IsMultiplicativeSubgroup(const ESet& s) {
  const Field& f = s.field();
  if (s.empty() || s.Contains(f.Zero()) || !s.Contains(f.One())) return false;
  for (std::uint32_t x : s.codes()) {
    for (std::uint32_t y : s.codes()) {
      if (!s.Contains(f.Mul({x}, {y}))) return false;
    }
  }
  return true;
}

}  // namespace

const char* EnergyKindName(EnergyKind kind) {
  return kind == EnergyKind::kAdditive ? "additive" : "multiplicative";
}

EnergyReport Energy(const ESet& a, const ESet& b, EnergyKind kind) {
  EnergyReport report;
  report.kind = kind;
  report.value = CountRepresentations(a, b, kind, [&](std::uint32_t z, u64 r) {
    report.histogram.emplace_back(z, r);
  });
  report.support_size = report.histogram.size();
  return report;
}

std::uint64_t EnergyValue(const ESet& a, const ESet& b, EnergyKind kind) {
  return CountRepresentations(a, b, kind, [](std::uint32_t, u64) {});
}

double ShkredovRatio(const ESet& gamma, Elem x) {
  Require(x.code != 0, Errc::kPrecondition, "shift must be nonzero");
  Require(gamma.size() >= 2, Errc::kPrecondition,
          "subgroup needs at least two elements (log guard)");
  Require(IsMultiplicativeSubgroup(gamma), Errc::kPrecondition,
          "set is not a multiplicative subgroup");
  const ESet shifted = Shift(gamma, x);
  const double e =
      static_cast<double>(EnergyValue(shifted, shifted,
                                      EnergyKind::kMultiplicative));
  const double n = static_cast<double>(gamma.size());
  return e / (n * n * std::log(n));
}

std::uint64_t C4(const ESet& a_prime, const ESet& c, Elem y1, Elem y2,
                 Elem y3) {
  RequireSameField(a_prime, c);
  const Field& f = c.field();
  Require(!c.Contains(f.Zero()), Errc::kPrecondition, "C contains zero");
  u64 count = 0;
  for (std::uint32_t cc : c.codes()) {
    const Elem inv = f.Inv({cc});
    if (a_prime.Contains(f.Mul(y1, inv)) && a_prime.Contains(f.Mul(y2, inv)) &&
        a_prime.Contains(f.Mul(y3, inv))) {
      ++count;
    }
  }
  return count;
}

C4Totals ComputeC4Totals(const ESet& a_prime, const ESet& c) {
  RequireSameField(a_prime, c);
  const Field& f = c.field();
  Require(!c.Contains(f.Zero()), Errc::kPrecondition, "C contains zero");
  const ESet support = ProductSet(a_prime, c);
  const std::size_t n = support.size();
  const std::size_t words = (c.size() + 63) / 64;
  // cover[i] has bit j set iff support[i] / c_j lies in A'.
  std::vector<u64> cover(n * words, 0);
  const auto codes = support.codes();
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::uint32_t a : a_prime.codes()) {
      const std::uint32_t y = f.Mul({a}, c[j]).code;
      const std::size_t i =
          std::lower_bound(codes.begin(), codes.end(), y) - codes.begin();
      cover[i * words + j / 64] |= u64{1} << (j % 64);
    }
  }
  C4Totals totals;
  std::vector<u64> pair(words);
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      for (std::size_t w = 0; w < words; ++w) {
        pair[w] = cover[i1 * words + w] & cover[i2 * words + w];
      }
      for (std::size_t i3 = 0; i3 < n; ++i3) {
        u64 c4 = 0;
        for (std::size_t w = 0; w < words; ++w) {
          c4 += std::popcount(pair[w] & cover[i3 * words + w]);
        }
        totals.total += c4;
        if (i1 == i2 || i2 == i3 || i1 == i3) totals.diagonal += c4;
      }
    }
  }
  const u64 ap = a_prime.size();
  if (totals.total != c.size() * ap * ap * ap) {
    throw CheckFailure("C4 total differs from |C||A'|^3");
  }
  if (totals.diagonal > 3 * c.size() * ap * ap) {
    throw CheckFailure("C4 diagonal exceeds 3|C||A'|^2");
  }
  return totals;
}

IdentityEval EvaluateIdentity(const Field& f, Elem a1, Elem a2, Elem a3,
                              Elem c, Elem b, Elem d) {
  for (Elem e : {a1, a2, a3, c, b, d}) {
    Require(f.IsValid(e), Errc::kInvalidElement, "operand outside field");
  }
  Require(d.code != 0, Errc::kPrecondition, "d must be nonzero");
  Require(c.code != 0, Errc::kPrecondition, "c must be nonzero");
  const Elem y1 = f.Mul(f.Add(a1, d), c);
  const Elem y2 = f.Mul(f.Add(a2, d), c);
  const Elem y3 = f.Mul(f.Add(a3, d), c);
  Require(y3 != y2, Errc::kPrecondition, "y3 == y2");
  Require(y1 != y2 && y1 != y3, Errc::kPrecondition,
          "y1, y2, y3 must be pairwise distinct");
  const Elem denom_inv = f.Inv(f.Sub(y3, y2));
  const Elem alpha = f.Mul(f.Sub(y3, y1), denom_inv);
  const Elem beta = f.Mul(f.Sub(y1, y2), denom_inv);
  const Elem lhs = f.Sub(f.Mul(a1, b), f.Mul(alpha, f.Mul(a2, b)));
  const Elem rhs = f.Mul(f.Mul(a3, b), beta);
  return {lhs, rhs};
}

TripleWitness MakeWitness(const ESet& a_prime, const ESet& c, Elem y1,
                          Elem y2, Elem y3) {
  const Field& f = c.field();
  Require(y1 != y2 && y2 != y3 && y1 != y3, Errc::kPrecondition,
          "degenerate witness: y1, y2, y3 must be pairwise distinct");
  TripleWitness w{y1, y2, y3, {}, {}, 0};
  const Elem denom_inv = f.Inv(f.Sub(y3, y2));
  w.alpha = f.Mul(f.Sub(y3, y1), denom_inv);
  w.beta = f.Mul(f.Sub(y1, y2), denom_inv);
  w.c4 = C4(a_prime, c, y1, y2, y3);
  return w;
}

CsChainRecord CsChain(const ESet& a, const ESet& b, const ESet& c, Elem d,
                      const TripleWitness& w) {
  RequireSameField(a, b);
  RequireSameField(a, c);
  const Field& f = a.field();
  Require(d.code != 0, Errc::kPrecondition, "d must be nonzero");
  Require(!a.Contains(f.Zero()) && !b.Contains(f.Zero()) &&
              !c.Contains(f.Zero()),
          Errc::kPrecondition, "A, B, C must not contain zero");
  const ESet a_prime = Shift(a, d);
  const TripleWitness check = MakeWitness(a_prime, c, w.y1, w.y2, w.y3);
  Require(check.alpha == w.alpha && check.beta == w.beta && check.c4 == w.c4,
          Errc::kPrecondition, "degenerate witness: fields inconsistent");

  CsChainRecord rec;
  const ESet ab = ProductSet(a, b);
  const ESet beta_ab = Dilate(ab, w.beta);
  const ESet alpha_ab = Dilate(ab, w.alpha);
  rec.c4 = w.c4;
  rec.b_size = b.size();
  rec.ab_size = ab.size();
  for (std::uint32_t p1 : ab.codes()) {
    for (std::uint32_t p2 : ab.codes()) {
      if (beta_ab.Contains(f.Sub({p1}, f.Mul(w.alpha, {p2})))) ++rec.t;
    }
  }
  rec.mixed_energy = EnergyValue(ab, alpha_ab, EnergyKind::kAdditive);
  rec.ab_energy = EnergyValue(ab, ab, EnergyKind::kAdditive);

  if (rec.t < rec.b_size * rec.c4) {
    throw CheckFailure("cs_chain: T < |B| C4");
  }
  if (static_cast<unsigned __int128>(rec.mixed_energy) * rec.ab_size <
      static_cast<unsigned __int128>(rec.t) * rec.t) {
    throw CheckFailure("cs_chain: E(AB, alpha AB) < T^2 / |AB|");
  }
  if (rec.mixed_energy > rec.ab_energy) {
    throw CheckFailure("cs_chain: E(AB, alpha AB) > E(AB)");
  }
  return rec;
}

GrowthRatios ComputeGrowth(const ESet& a, const ESet& b, const ESet& c,
                           Elem d) {
  RequireSameField(a, b);
  RequireSameField(a, c);
  Require(!a.empty(), Errc::kPrecondition, "A must be nonempty");
  GrowthRatios g;
  g.a_size = a.size();
  g.ab_size = ProductSet(a, b).size();
  g.apc_size = ProductSet(Shift(a, d), c).size();
  g.k = {g.ab_size, g.a_size};
  g.l = {g.apc_size, g.a_size};
  g.ratio_k14_l12 = std::pow(g.k.value(), 14) * std::pow(g.l.value(), 12) /
                    static_cast<double>(g.a_size);
  return g;
}

RnrsReport RnrsRatio(const ESet& x, const ESet& y, const ESet& z) {
  RequireSameField(x, y);
  RequireSameField(x, z);
  const Field& f = x.field();
  Require(f.degree() == 1, Errc::kPrecondition,
          "energy estimate is stated for prime fields only");
  Require(!x.empty() && !y.empty() && !z.empty(), Errc::kPrecondition,
          "sets must be nonempty");
  const double yz = static_cast<double>(ProductSet(y, z).size());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  const double p = f.characteristic();
  RnrsReport r;
  r.energy = EnergyValue(x, z, EnergyKind::kAdditive);
  r.hypothesis_ok = nx * ny * yz <= p * p;
  const double big_m = std::max(nx, yz);
  r.rhs = std::pow(nx * yz, 1.5) / std::sqrt(ny) + big_m * nx * yz / ny;
  r.ratio = static_cast<double>(r.energy) / r.rhs;
  return r;
}

ChainReport EnergyLowerBoundReport(const ESet& a, const ESet& b,
                                   const ESet& c, Elem d) {
  RequireSameField(a, b);
  RequireSameField(a, c);
  const Field& f = a.field();
  Require(a.size() == b.size() && a.size() == c.size(), Errc::kPrecondition,
          "|A|, |B|, |C| must be equal");
  Require(a.size() >= 2, Errc::kPrecondition, "|A| must be at least 2");
  Require(d.code != 0, Errc::kPrecondition, "d must be nonzero");
  Require(!Shift(a, d).Contains(f.Zero()), Errc::kPrecondition,
          "A + d contains zero");
  Require(!c.Contains(f.Zero()), Errc::kPrecondition, "C contains zero");

  ChainReport rep;
  rep.growth = ComputeGrowth(a, b, c, d);
  const ESet ab = ProductSet(a, b);
  rep.ab_energy = EnergyValue(ab, ab, EnergyKind::kAdditive);
  const double n = static_cast<double>(a.size());
  const double k = rep.growth.k.value();
  const double l = rep.growth.l.value();
  rep.energy_lb_ratio =
      static_cast<double>(rep.ab_energy) * std::pow(l, 6) * k / (n * n * n);

  // |AA| <= |AB|^2 / |B|, exact.
  const u64 aa = ProductSet(a, a).size();
  const u64 ab_sq = rep.growth.ab_size * rep.growth.ab_size;
  InequalityRecord step{"|AA| <= |AB|^2/|B|", static_cast<double>(aa),
                        static_cast<double>(ab_sq) / b.size(),
                        aa * b.size() <= ab_sq};
  if (!step.holds) throw CheckFailure("|AA| exceeds |AB|^2/|B|");
  rep.inequalities.push_back(step);

  // Cauchy-Schwarz floor on the energy: E+(AB) >= |AB|^2.
  InequalityRecord floor{"E+(AB) >= |AB|^2", static_cast<double>(rep.ab_energy),
                         static_cast<double>(ab_sq), rep.ab_energy >= ab_sq};
  if (!floor.holds) throw CheckFailure("E+(AB) below |AB|^2");
  rep.inequalities.push_back(floor);

  if (f.degree() == 1) rep.rnrs = RnrsRatio(ab, a, ab);
  return rep;
}

PlunneckeResult PlunneckeCheck(const ESet& y, const std::vector<ESet>& xs,
                               GroupMode mode) {
  Require(!y.empty(), Errc::kPrecondition, "Y must be nonempty");
  Require(!xs.empty() && xs.size() <= 3, Errc::kPrecondition,
          "between one and three summands");
  for (const ESet& x : xs) {
    RequireSameField(y, x);
    Require(!x.empty(), Errc::kPrecondition, "summands must be nonempty");
  }
  const bool mult = mode == GroupMode::kMultiplicative;
  if (mult) {
    const Elem zero = y.field().Zero();
    bool zero_seen = y.Contains(zero);
    for (const ESet& x : xs) zero_seen = zero_seen || x.Contains(zero);
    Require(!zero_seen, Errc::kPrecondition,
            "multiplicative mode works in F_q^*; zero not allowed");
  }
  auto op = [&](const ESet& u, const ESet& v) {
    return mult ? ProductSet(u, v) : SumSet(u, v);
  };
  ESet total = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) total = op(total, xs[i]);

  PlunneckeResult r;
  r.lhs = total.size();
  r.rhs_num = 1;
  for (const ESet& x : xs) r.rhs_num *= op(y, x).size();
  r.rhs_den = 1;
  for (std::size_t i = 1; i < xs.size(); ++i) r.rhs_den *= y.size();
  r.rhs = static_cast<double>(r.rhs_num) / static_cast<double>(r.rhs_den);
  if (static_cast<unsigned __int128>(r.lhs) * r.rhs_den >
      static_cast<unsigned __int128>(r.rhs_num)) {
    throw CheckFailure("Plunnecke-Ruzsa inequality violated");
  }
  return r;
}

}  // namespace sumprod
