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

#ifndef SUMPROD_ENERGY_HPP_
#define SUMPROD_ENERGY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumprod/eset.hpp"

namespace sumprod {

enum class EnergyKind { kAdditive, kMultiplicative };

const char* EnergyKindName(EnergyKind kind);

// Energy of (A, B) together with its representation function
// r(z) = #{(a, b) : a o b = z}. value = sum_z r(z)^2. For the multiplicative
// kind, pairs with a product of zero are counted in r(0).
struct EnergyReport {
  EnergyKind kind = EnergyKind::kAdditive;
  std::uint64_t value = 0;
  // (code, r(code)) for every z with r(z) > 0, ascending by code.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> histogram;
  std::uint64_t support_size = 0;
};

EnergyReport Energy(const ESet& a, const ESet& b, EnergyKind kind);
// Same count without materialising the histogram.
std::uint64_t EnergyValue(const ESet& a, const ESet& b, EnergyKind kind);

// E^x(Gamma + x) / (|Gamma|^2 ln |Gamma|). Gamma must be a multiplicative
// subgroup with at least two elements, x nonzero.
double ShkredovRatio(const ESet& gamma, Elem x);

// Number of c in C with y1/c, y2/c, y3/c all in A'. C must not contain 0.
std::uint64_t C4(const ESet& a_prime, const ESet& c, Elem y1, Elem y2,
                 Elem y3);

struct C4Totals {
  std::uint64_t total = 0;     // sum over (A'C)^3
  std::uint64_t diagonal = 0;  // triples with a repeated coordinate
};

// Sums C4 over all triples of A'C. Throws CheckFailure unless
// total == |C||A'|^3 and diagonal <= 3|C||A'|^2.
C4Totals ComputeC4Totals(const ESet& a_prime, const ESet& c);

// Evaluates a1 b - alpha a2 b and a3 b beta with y_i = (a_i + d) c,
// alpha = (y3 - y1)/(y3 - y2), beta = (y1 - y2)/(y3 - y2).
struct IdentityEval {
  Elem lhs;
  Elem rhs;
  bool holds() const { return lhs == rhs; }
};

IdentityEval EvaluateIdentity(const Field& field, Elem a1, Elem a2, Elem a3,
                              Elem c, Elem b, Elem d);
inline bool IdentityCheck(const Field& field, Elem a1, Elem a2, Elem a3,
                          Elem c, Elem b, Elem d) {
  return EvaluateIdentity(field, a1, a2, a3, c, b, d).holds();
}

// Three pairwise distinct points of A'C with the coefficients of the
// linear relation between them and the C4 count for A', C.
struct TripleWitness {
  Elem y1, y2, y3;
  Elem alpha;  // (y3 - y1)/(y3 - y2)
  Elem beta;   // (y1 - y2)/(y3 - y2)
  std::uint64_t c4 = 0;
};

TripleWitness MakeWitness(const ESet& a_prime, const ESet& c, Elem y1,
                          Elem y2, Elem y3);

// Exact quantities of the Cauchy-Schwarz step for one witness.
struct CsChainRecord {
  std::uint64_t t = 0;  // #{(p1, p2) in AB x AB : p1 - alpha p2 in beta AB}
  std::uint64_t c4 = 0;
  std::uint64_t b_size = 0;
  std::uint64_t ab_size = 0;
  std::uint64_t mixed_energy = 0;  // E+(AB, alpha AB)
  std::uint64_t ab_energy = 0;     // E+(AB)
};

// Verifies t >= |B| c4, E+(AB, alpha AB) |AB| >= t^2 and
// E+(AB, alpha AB) <= E+(AB). Throws CheckFailure if any fails.
// Requires d != 0 and 0 outside A, B, C; w must come from MakeWitness on
// (A + d, C).
CsChainRecord CsChain(const ESet& a, const ESet& b, const ESet& c, Elem d,
                      const TripleWitness& w);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

struct InequalityRecord {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

struct GrowthRatios {
  std::uint64_t a_size = 0;
  std::uint64_t ab_size = 0;   // |AB|
  std::uint64_t apc_size = 0;  // |(A + d)C|
  Rational k;                  // |AB| / |A|
  Rational l;                  // |(A + d)C| / |A|
  double ratio_k14_l12 = 0;    // K^14 L^12 / |A|
};

// K and L only; no restriction on zero membership.
GrowthRatios ComputeGrowth(const ESet& a, const ESet& b, const ESet& c,
                           Elem d);

struct RnrsReport {
  std::uint64_t energy = 0;  // E+(X, Z)
  double rhs = 0;
  double ratio = 0;
  bool hypothesis_ok = false;  // |X||Y||YZ| <= p^2
};

// E+(X, Z) over (|X||YZ|)^{3/2}|Y|^{-1/2} + M|X||YZ|/|Y|, M = max(|X|, |YZ|).
// Prime fields only.
RnrsReport RnrsRatio(const ESet& x, const ESet& y, const ESet& z);

struct ChainReport {
  GrowthRatios growth;
  std::uint64_t ab_energy = 0;  // E+(AB)
  double energy_lb_ratio = 0;   // E+(AB) L^6 K / |A|^3
  std::optional<RnrsReport> rnrs;  // X = Z = AB, Y = A; prime fields only
  std::vector<InequalityRecord> inequalities;
};

// Requires |A| = |B| = |C| >= 2, d != 0, 0 outside A + d and C.
ChainReport EnergyLowerBoundReport(const ESet& a, const ESet& b,
                                   const ESet& c, Elem d);

enum class GroupMode { kAdditive, kMultiplicative };

struct PlunneckeResult {
  std::uint64_t lhs = 0;       // |X_1 o ... o X_k|
  double rhs = 0;              // prod |Y o X_i| / |Y|^{k-1}
  std::uint64_t rhs_num = 0;   // prod |Y o X_i|
  std::uint64_t rhs_den = 1;   // |Y|^{k-1}
};

// Evaluates both sides exactly; throws CheckFailure if lhs > rhs. The
// multiplicative mode works in F_q^*, so zero is rejected there.
PlunneckeResult PlunneckeCheck(const ESet& y, const std::vector<ESet>& xs,
                               GroupMode mode);

}  // namespace sumprod

#endif  // SUMPROD_ENERGY_HPP_
