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

#ifndef SUMPROD_GAUSS_HPP_
#define SUMPROD_GAUSS_HPP_

#include <complex>
#include <cstdint>

#include "sumprod/subgroup.hpp"

namespace sumprod {

inline constexpr double kDelta2 = 1.0 / 56.0;
// Largest q accepted by GaussDirect.
inline constexpr std::uint64_t kGaussDirectMaxOrder = 1'000'000;

// S_n(a) = sum over x in F_q of psi_a(x^n); a != 0.
std::complex<double> GaussDirect(const Field& field, std::uint64_t n, Elem a);

// S(a, G) = sum over g in G of psi_a(g); a != 0.
std::complex<double> SubgroupSum(const Field& field, const ESet& group, Elem a);

struct GaussAgreement {
  std::complex<double> via_subgroup;  // 1 + n S(a, G_n)
  std::complex<double> direct;
  double deviation = 0;
  double tolerance = 0;  // 1e-6 q
  bool agrees() const { return deviation <= tolerance; }
};

// For n | q-1 the map x -> x^n covers each n-th power exactly n times, so
// S_n(a) = 1 + n S(a, G_n). Evaluates both routes.
GaussAgreement GaussViaSubgroup(const FieldPtr& field, std::uint64_t n,
                                Elem a);

struct GaussReport {
  std::uint64_t n = 0;
  Elem a;
  std::complex<double> value;  // S_n(a)
  double abs = 0;
  double weil = 0;         // (n - 1) sqrt(q)
  double konyagin = 0;     // q^{1/8} E+(G)^{1/4}
  double paper_bound = 0;  // q^{(7-2 d2)/8} n^{(2+2 d2)/8}, d2 = 1/56
  std::complex<double> subgroup_sum;  // S(a, G_n)
  std::uint64_t subgroup_energy = 0;  // E+(G_n)
  double nontrivial_threshold = 0;    // q^{29/57}
  bool below_threshold = false;       // n < q^{29/57}
  double ratio_weil = 0;   // abs / weil
  double ratio_paper = 0;  // abs / paper_bound
};

// Fills every field. Throws CheckFailure if |S_n(a)| exceeds the Weil bound,
// |S(a, G)| exceeds q^{1/8} E+(G)^{1/4}, or the two evaluation routes
// disagree. The paper_bound column is informational.
GaussReport BoundsReport(const FieldPtr& field, std::uint64_t n, Elem a);

}  // namespace sumprod

#endif  // SUMPROD_GAUSS_HPP_
