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

#include "sumprod/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sumprod/energy.hpp"
#include "sumprod/gauss.hpp"
#include "sumprod/oracle.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/setops.hpp"
#include "sumprod/subgroup.hpp"

namespace sumprod {
namespace {

using u64 = std::uint64_t;
using Body = std::function<void(CheckLine&)>;

void Expect(CheckLine& line, bool ok, const std::string& what) {
  ++line.evaluations;
  if (!ok && line.passed) {
    line.passed = false;
    line.detail = what;
  }
}

CheckLine Run(const char* suite, const char* name, const Body& body) {
  CheckLine line{suite, name, true, 0, {}};
  try {
    body(line);
  } catch (const std::exception& e) {
    line.passed = false;
    if (line.detail.empty()) line.detail = e.what();
  }
  return line;
}

std::string FieldName(const Field& f) {
  return "F_" + std::to_string(f.order());
}

class FieldPool {
 public:
  FieldPool(u64 max_q, u64 cap) {
    for (auto [p, m] : PrimePowersUpTo(std::min(max_q, cap))) {
      if (p == 2 && m == 1) continue;  // too small for most instances
      specs_.emplace_back(p, m);
    }
  }
  FieldPtr Pick(Rng& rng) const {
    auto [p, m] = specs_[rng.Below(specs_.size())];
    return Field::Make(p, m);
  }
  bool empty() const { return specs_.empty(); }

 private:
  std::vector<std::pair<u64, int>> specs_;
};

ESet RandomSet(const FieldPtr& f, u64 size, Rng& rng, bool nonzero) {
  const u64 lo = nonzero ? 1 : 0;
  const u64 avail = f->order() - lo;
  size = std::min(size, avail);
  std::vector<std::uint32_t> codes;
  while (codes.size() < size) {
    const auto c = static_cast<std::uint32_t>(rng.Between(lo, f->order() - 1));
    if (std::find(codes.begin(), codes.end(), c) == codes.end()) {
      codes.push_back(c);
    }
  }
  return ESet(f, std::move(codes));
}

Elem RandomNonzero(const Field& f, Rng& rng) {
  return Elem{static_cast<std::uint32_t>(rng.Between(1, f.order() - 1))};
}

// ---------------------------------------------------------------- identities

std::vector<CheckLine> IdentitySuite(const VerifyOptions& opt) {
  std::vector<CheckLine> out;
  const FieldPool pool(opt.max_q, opt.max_q);
  if (pool.empty()) return out;

  out.push_back(Run("identities", "field_axioms", [&](CheckLine& line) {
    for (auto [p, m] : PrimePowersUpTo(std::min<u64>(opt.max_q, 64))) {
      const FieldPtr f = Field::Make(p, m);
      const u64 q = f->order();
      for (std::uint32_t x = 0; x < q; ++x) {
        for (std::uint32_t y = 0; y < q; ++y) {
          for (std::uint32_t z = 0; z < q; ++z) {
            const Elem a{x}, b{y}, c{z};
            Expect(line,
                   f->Mul(a, f->Add(b, c)) ==
                           f->Add(f->Mul(a, b), f->Mul(a, c)) &&
                       f->Mul(f->Mul(a, b), c) == f->Mul(a, f->Mul(b, c)) &&
                       f->Add(f->Add(a, b), c) == f->Add(a, f->Add(b, c)),
                   FieldName(*f) + ": ring axiom failed");
          }
          Expect(line, f->Mul({x}, {y}) == f->Mul({y}, {x}),
                 FieldName(*f) + ": multiplication not commutative");
        }
        if (x != 0) {
          Expect(line, f->Mul({x}, f->Inv({x})) == f->One(),
                 FieldName(*f) + ": bad inverse");
        }
      }
    }
  }));

  out.push_back(Run("identities", "trace_and_characters", [&](CheckLine& line) {
    for (auto [p, m] : PrimePowersUpTo(std::min<u64>(opt.max_q, 512))) {
      const FieldPtr f = Field::Make(p, m);
      std::vector<bool> image(p, false);
      for (std::uint32_t x = 0; x < f->order(); ++x) {
        Elem direct = f->Zero(), y{x};
        for (int i = 0; i < m; ++i) {
          direct = f->Add(direct, y);
          y = f->Pow(y, p);
        }
        Expect(line, f->Trace({x}) == direct,
               FieldName(*f) + ": trace differs from Frobenius sum");
        image[f->Trace({x}).code] = true;
      }
      Expect(line, std::all_of(image.begin(), image.end(), [](bool b) { return b; }),
             FieldName(*f) + ": trace not onto F_p");
      const Elem a{1 + static_cast<std::uint32_t>((f->order() - 1) / 2)};
      std::complex<double> sum{0, 0};
      for (std::uint32_t x = 0; x < f->order(); ++x) sum += f->Character(a, {x});
      Expect(line, std::abs(sum) <= 1e-9 * f->order(),
             FieldName(*f) + ": nontrivial character does not sum to zero");
    }
  }));

  out.push_back(Run("identities", "identity_check", [&](CheckLine& line) {
    Rng rng(opt.seed, 1);
    std::vector<FieldPtr> fields;
    for (int i = 0; i < 25; ++i) fields.push_back(pool.Pick(rng));
    for (int i = 0; i < 10000; ++i) {
      const FieldPtr& f = fields[i % fields.size()];
      if (f->order() < 3) continue;
      Elem a1, a2, a3;
      do {
        a1 = Elem{static_cast<std::uint32_t>(rng.Below(f->order()))};
        a2 = Elem{static_cast<std::uint32_t>(rng.Below(f->order()))};
        a3 = Elem{static_cast<std::uint32_t>(rng.Below(f->order()))};
      } while (a1 == a2 || a2 == a3 || a1 == a3);
      const Elem c = RandomNonzero(*f, rng), d = RandomNonzero(*f, rng);
      const Elem b{static_cast<std::uint32_t>(rng.Below(f->order()))};
      Expect(line, IdentityCheck(*f, a1, a2, a3, c, b, d),
             FieldName(*f) + ": identity failed");
    }
  }));

  out.push_back(Run("identities", "c4_totals", [&](CheckLine& line) {
    Rng rng(opt.seed, 2);
    const FieldPool small(opt.max_q, 512);
    for (int i = 0; i < 40; ++i) {
      const FieldPtr f = small.Pick(rng);
      const ESet ap = RandomSet(f, rng.Between(1, 8), rng, false);
      const ESet c = RandomSet(f, rng.Between(1, 8), rng, true);
      ComputeC4Totals(ap, c);
      Expect(line, true, "");
    }
  }));

  out.push_back(Run("identities", "cs_chain", [&](CheckLine& line) {
    Rng rng(opt.seed, 3);
    const FieldPool small(opt.max_q, 512);
    int done = 0;
    while (done < 40) {
      const FieldPtr f = small.Pick(rng);
      if (f->order() < 8) continue;
      const u64 s = rng.Between(3, 8);
      const ESet a = RandomSet(f, s, rng, true);
      const ESet b = RandomSet(f, s, rng, true);
      const ESet c = RandomSet(f, s, rng, true);
      const Elem d = RandomNonzero(*f, rng);
      const ESet ap = Shift(a, d);
      const Elem cc = c[rng.Below(c.size())];
      const Elem y1 = f->Mul(ap[0], cc), y2 = f->Mul(ap[1], cc),
                 y3 = f->Mul(ap[2], cc);
      if (y1 == y2 || y2 == y3 || y1 == y3) continue;
      CsChain(a, b, c, d, MakeWitness(ap, c, y1, y2, y3));
      Expect(line, true, "");
      ++done;
    }
  }));
  return out;
}

// -------------------------------------------------------------------- bounds

std::vector<CheckLine> BoundsSuite(const VerifyOptions& opt) {
  std::vector<CheckLine> out;
  const FieldPool pool(opt.max_q, 512);
  if (pool.empty()) return out;

  for (GroupMode mode : {GroupMode::kAdditive, GroupMode::kMultiplicative}) {
    const bool mult = mode == GroupMode::kMultiplicative;
    out.push_back(Run("bounds", mult ? "plunnecke_multiplicative"
                                     : "plunnecke_additive",
                      [&](CheckLine& line) {
      Rng rng(opt.seed, mult ? 11 : 10);
      for (int i = 0; i < 200; ++i) {
        const FieldPtr f = pool.Pick(rng);
        const ESet y = RandomSet(f, rng.Between(1, 10), rng, mult);
        std::vector<ESet> xs;
        const u64 k = rng.Between(1, 3);
        for (u64 j = 0; j < k; ++j) {
          xs.push_back(RandomSet(f, rng.Between(1, 10), rng, mult));
        }
        PlunneckeCheck(y, xs, mode);
        Expect(line, true, "");
      }
    }));
  }

  out.push_back(Run("bounds", "subgroup_energy_identity", [&](CheckLine& line) {
    for (auto [p, m] : PrimePowersUpTo(std::min<u64>(opt.max_q, 1024))) {
      const FieldPtr f = Field::Make(p, m);
      for (u64 t : Divisors(f->order() - 1)) {
        const ESet g = SubgroupOfOrder(f, t).elements;
        Expect(line,
               EnergyValue(g, g, EnergyKind::kMultiplicative) == t * t * t,
               FieldName(*f) + ": E^x(G) != |G|^3 for |G| = " +
                   std::to_string(t));
      }
    }
  }));

  out.push_back(Run("bounds", "energy_cauchy_schwarz", [&](CheckLine& line) {
    Rng rng(opt.seed, 12);
    for (int i = 0; i < 200; ++i) {
      const FieldPtr f = pool.Pick(rng);
      const ESet a = RandomSet(f, rng.Between(1, 30), rng, false);
      const ESet b = RandomSet(f, rng.Between(1, 30), rng, false);
      for (EnergyKind kind :
           {EnergyKind::kAdditive, EnergyKind::kMultiplicative}) {
        const EnergyReport r = Energy(a, b, kind);
        const u64 pairs = u64{a.size()} * b.size();
        u64 sum = 0, sq = 0;
        for (const auto& [z, c] : r.histogram) {
          sum += c;
          sq += c * c;
        }
        Expect(line, pairs * pairs <= r.support_size * r.value,
               "(|A||B|)^2 > support * E");
        Expect(line, sum == pairs && sq == r.value,
               "histogram totals inconsistent");
      }
      const Elem alpha = RandomNonzero(*f, rng);
      Expect(line,
             EnergyValue(Dilate(a, alpha), Dilate(b, alpha),
                         EnergyKind::kAdditive) ==
                 EnergyValue(a, b, EnergyKind::kAdditive),
             "additive energy not dilation invariant");
    }
  }));

  out.push_back(Run("bounds", "group_energy_exponent", [&](CheckLine& line) {
    for (auto [p, m] : PrimePowersUpTo(std::min<u64>(opt.max_q, 512))) {
      const FieldPtr f = Field::Make(p, m);
      for (u64 t : Divisors(f->order() - 1)) {
        if (t < 2) continue;
        const GroupEnergy ge = GroupEnergyReport(SubgroupOfOrder(f, t));
        Expect(line, ge.exponent >= 2.0 - 1e-12 && ge.exponent <= 3.0 + 1e-12,
               FieldName(*f) + ": group energy exponent outside [2, 3]");
      }
    }
  }));

  out.push_back(Run("bounds", "energy_chain_report", [&](CheckLine& line) {
    Rng rng(opt.seed, 13);
    int done = 0;
    while (done < 50) {
      const FieldPtr f = pool.Pick(rng);
      if (f->order() < 16) continue;
      const u64 s = rng.Between(2, 10);
      const Elem d = RandomNonzero(*f, rng);
      const ESet a = RandomSet(f, s, rng, true);
      const ESet c = RandomSet(f, s, rng, true);
      if (Shift(a, d).Contains(f->Zero())) continue;
      const ChainReport r = EnergyLowerBoundReport(a, a, c, d);
      for (const InequalityRecord& rec : r.inequalities) {
        Expect(line, rec.holds, rec.name);
      }
      ++done;
    }
  }));
  return out;
}

// -------------------------------------------------------------------- oracle

std::vector<CheckLine> OracleSuite(const VerifyOptions& opt) {
  std::vector<CheckLine> out;
  const FieldPool pool(opt.max_q, 512);
  if (pool.empty()) return out;

  out.push_back(Run("oracle", "energy_vs_brute", [&](CheckLine& line) {
    Rng rng(opt.seed, 20);
    for (int i = 0; i < 200; ++i) {
      const FieldPtr f = pool.Pick(rng);
      const ESet a = RandomSet(f, rng.Between(1, 40), rng, false);
      const ESet b = RandomSet(f, rng.Between(1, 40), rng, false);
      const EnergyKind kind =
          i % 2 ? EnergyKind::kMultiplicative : EnergyKind::kAdditive;
      Expect(line, Energy(a, b, kind).value == oracle::EnergyBrute(a, b, kind),
             FieldName(*f) + ": energy differs from oracle");
    }
  }));

  out.push_back(Run("oracle", "product_set_vs_brute", [&](CheckLine& line) {
    Rng rng(opt.seed, 21);
    for (int i = 0; i < 200; ++i) {
      const FieldPtr f = pool.Pick(rng);
      const ESet a = RandomSet(f, rng.Between(0, 30), rng, false);
      const ESet b = RandomSet(f, rng.Between(0, 30), rng, false);
      Expect(line, ProductSet(a, b) == ESet(f, oracle::ProductSetBrute(a, b)),
             FieldName(*f) + ": product set differs from oracle");
      Expect(line, SumSet(a, b) == ESet(f, oracle::SumSetBrute(a, b)),
             FieldName(*f) + ": sumset differs from oracle");
    }
  }));

  out.push_back(Run("oracle", "c4_vs_brute", [&](CheckLine& line) {
    Rng rng(opt.seed, 22);
    for (int i = 0; i < 200; ++i) {
      const FieldPtr f = pool.Pick(rng);
      const ESet ap = RandomSet(f, rng.Between(1, 10), rng, false);
      const ESet c = RandomSet(f, rng.Between(1, 10), rng, true);
      const ESet apc = ProductSet(ap, c);
      Elem y[3];
      for (Elem& e : y) e = apc[rng.Below(apc.size())];
      Expect(line,
             C4(ap, c, y[0], y[1], y[2]) ==
                 oracle::C4Brute(ap, c, y[0], y[1], y[2]),
             FieldName(*f) + ": C4 differs from oracle");
    }
  }));

  out.push_back(Run("oracle", "count_solutions_vs_brute", [&](CheckLine& line) {
    Rng rng(opt.seed, 23);
    std::vector<u64> primes;
    for (u64 p = 3; p <= std::min<u64>(opt.max_q, 997); ++p) {
      if (IsPrime(p)) primes.push_back(p);
    }
    if (primes.empty()) return;
    for (int i = 0; i < 500; ++i) {
      const FieldPtr f = Field::Make(primes[rng.Below(primes.size())], 1);
      const auto divs = Divisors(f->order() - 1);
      const ESet g = SubgroupOfOrder(f, divs[rng.Below(divs.size())]).elements;
      const ESet h = SubgroupOfOrder(f, divs[rng.Below(divs.size())]).elements;
      const Elem d = RandomNonzero(*f, rng);
      Expect(line,
             CountSolutions(g, h, d).count ==
                 oracle::CountSolutionsBrute(g, h, d),
             FieldName(*f) + ": solution count differs from oracle");
    }
  }));
  return out;
}

// --------------------------------------------------------------------- gauss

std::vector<CheckLine> GaussSuite(const VerifyOptions& opt) {
  std::vector<CheckLine> out;
  const u64 cap = std::min<u64>(opt.max_q, 2000);

  out.push_back(Run("gauss", "agreement_weil_konyagin", [&](CheckLine& line) {
    Rng rng(opt.seed, 30);
    for (auto [p, m] : PrimePowersUpTo(cap)) {
      const FieldPtr f = Field::Make(p, m);
      for (u64 n : Divisors(f->order() - 1)) {
        for (int i = 0; i < 5; ++i) {
          const Elem a = RandomNonzero(*f, rng);
          if (n >= 2) {
            BoundsReport(f, n, a);  // throws on any violated bound
            Expect(line, true, "");
          } else {
            Expect(line, GaussViaSubgroup(f, n, a).agrees(),
                   FieldName(*f) + ": routes disagree");
          }
        }
      }
    }
  }));

  out.push_back(Run("gauss", "quadratic_gauss_modulus", [&](CheckLine& line) {
    for (u64 p = 3; p <= std::min<u64>(cap, 97); ++p) {
      if (!IsPrime(p)) continue;
      const FieldPtr f = Field::Make(p, 1);
      for (std::uint32_t a = 1; a < p; ++a) {
        Expect(line,
               std::abs(std::abs(GaussDirect(*f, 2, {a})) - std::sqrt(p)) <=
                   1e-6,
               FieldName(*f) + ": |S_2(a)| != sqrt(p)");
      }
    }
  }));

  out.push_back(Run("gauss", "conjugate_symmetry", [&](CheckLine& line) {
    Rng rng(opt.seed, 31);
    for (auto [p, m] : PrimePowersUpTo(std::min<u64>(cap, 512))) {
      if (p == 2) continue;
      const FieldPtr f = Field::Make(p, m);
      for (u64 n : Divisors(f->order() - 1)) {
        const Elem a = RandomNonzero(*f, rng);
        const auto s = GaussDirect(*f, n, a);
        const auto s_neg = GaussDirect(*f, n, f->Neg(a));
        Expect(line, std::abs(s_neg - std::conj(s)) <= 1e-9 * f->order(),
               FieldName(*f) + ": S_n(-a) != conj S_n(a)");
      }
    }
  }));
  return out;
}

// ----------------------------------------------------------------- subfields

std::vector<CheckLine> SubfieldSuite(const VerifyOptions& opt) {
  std::vector<CheckLine> out;

  out.push_back(Run("subfields", "gcd_formula", [&](CheckLine& line) {
    for (auto [p, m] : PrimePowersUpTo(opt.max_q)) {
      if (m < 2 || m > 4) continue;
      const FieldPtr f = Field::Make(p, m);
      for (u64 n : Divisors(f->order() - 1)) {
        const SubgroupInfo g = NthPowers(f, n);
        for (int nu : ProperSubfieldDegrees(m)) {
          const SubfieldIntersection r = SubfieldIntersectionOf(g, nu);
          Expect(line,
                 r.exact == r.formula &&
                     r.exact == oracle::SubfieldIntersectionBrute(g, nu),
                 FieldName(*f) + ": gcd formula mismatch");
        }
      }
    }
  }));

  out.push_back(Run("subfields", "subfield_structure", [&](CheckLine& line) {
    for (auto [p, m] : PrimePowersUpTo(std::min<u64>(opt.max_q, 1024))) {
      if (m < 2) continue;
      const FieldPtr f = Field::Make(p, m);
      for (int nu = 1; nu <= m; ++nu) {
        if (m % nu) continue;
        const ESet sub = Subfield(f, nu);
        u64 pnu = 1;
        for (int i = 0; i < nu; ++i) pnu *= p;
        Expect(line, sub.size() == pnu, FieldName(*f) + ": subfield size");
        for (std::uint32_t x : sub.codes()) {
          Elem y{x};
          for (int i = 0; i < nu; ++i) y = f->Pow(y, p);
          Expect(line, y.code == x, FieldName(*f) + ": not Frobenius-fixed");
          if (sub.size() <= 64) {
            for (std::uint32_t z : sub.codes()) {
              Expect(line,
                     sub.Contains(f->Add({x}, {z})) &&
                         sub.Contains(f->Mul({x}, {z})),
                     FieldName(*f) + ": subfield not closed");
            }
          }
        }
        for (u64 t : Divisors(f->order() - 1)) {
          const ESet g = SubgroupOfOrder(f, t).elements;
          const bool inside =
              std::all_of(g.codes().begin(), g.codes().end(),
                          [&](std::uint32_t x) { return sub.Contains({x}); });
          Expect(line, inside == ((pnu - 1) % t == 0),
                 FieldName(*f) + ": Lagrange containment");
        }
      }
    }
  }));

  out.push_back(Run("subfields", "nth_powers_and_scans", [&](CheckLine& line) {
    Rng rng(opt.seed, 40);
    for (auto [p, m] : PrimePowersUpTo(std::min<u64>(opt.max_q, 512))) {
      const FieldPtr f = Field::Make(p, m);
      const u64 units = f->order() - 1;
      for (u64 n = 1; n <= units + 1; n += std::max<u64>(1, units / 16)) {
        std::vector<std::uint32_t> powers;
        for (std::uint32_t x = 1; x < f->order(); ++x) {
          powers.push_back(f->Pow({x}, n).code);
        }
        Expect(line,
               ESet(f, std::move(powers)) == NthPowers(f, n).elements &&
                   NthPowers(f, n).elements ==
                       SubgroupOfOrder(f, units / std::gcd(n, units)).elements,
               FieldName(*f) + ": n-th powers mismatch");
      }
      if (m >= 2) {
        const ESet s = RandomSet(f, rng.Between(1, units), rng, false);
        Expect(line, CosetScan(s, 1.0, ThresholdBase::kSubfieldSize).pass,
               FieldName(*f) + ": scan with exponent 1 failed");
      }
    }
  }));
  return out;
}

}  // namespace

std::optional<Suite> ParseSuite(std::string_view name) {
  if (name == "all") return Suite::kAll;
  if (name == "identities") return Suite::kIdentities;
  if (name == "bounds") return Suite::kBounds;
  if (name == "oracle") return Suite::kOracle;
  if (name == "gauss") return Suite::kGauss;
  if (name == "subfields") return Suite::kSubfields;
  return std::nullopt;
}

std::vector<std::pair<std::uint64_t, int>> PrimePowersUpTo(
    std::uint64_t max_q) {
  std::vector<std::pair<u64, u64>> by_q;  // (q, p)
  for (u64 p = 2; p <= max_q; ++p) {
    if (!IsPrime(p)) continue;
    for (u64 q = p; q <= max_q && q <= kMaxFieldOrder; q *= p) by_q.emplace_back(q, p);
  }
  std::sort(by_q.begin(), by_q.end());
  std::vector<std::pair<u64, int>> out;
  for (auto [q, p] : by_q) {
    int m = 0;
    for (u64 x = q; x > 1; x /= p) ++m;
    out.emplace_back(p, m);
  }
  return out;
}

std::vector<CheckLine> RunSuite(Suite suite, const VerifyOptions& opt) {
  std::vector<CheckLine> out;
  auto append = [&](std::vector<CheckLine> lines) {
    out.insert(out.end(), lines.begin(), lines.end());
  };
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kIdentities) append(IdentitySuite(opt));
  if (all || suite == Suite::kBounds) append(BoundsSuite(opt));
  if (all || suite == Suite::kOracle) append(OracleSuite(opt));
  if (all || suite == Suite::kGauss) append(GaussSuite(opt));
  if (all || suite == Suite::kSubfields) append(SubfieldSuite(opt));
  return out;
}

}  // namespace sumprod
