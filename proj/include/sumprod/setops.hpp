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

#ifndef SUMPROD_SETOPS_HPP_
#define SUMPROD_SETOPS_HPP_

#include <vector>

#include "sumprod/eset.hpp"

namespace sumprod {

ESet ProductSet(const ESet& a, const ESet& b);
ESet SumSet(const ESet& a, const ESet& b);
ESet DifferenceSet(const ESet& a, const ESet& b);
// A + d.
ESet Shift(const ESet& a, Elem d);
// alpha * A; alpha must be nonzero.
ESet Dilate(const ESet& a, Elem alpha);

// What a coset scan threshold is measured against.
enum class ThresholdBase { kSubfieldSize, kSetSize };

// |S ∩ cF| for one proper subfield F = F_{p^nu} and one coset representative
// c. Cosets are taken as cF = {cf : f in F}, so 0 belongs to every coset.
struct CosetStat {
  int nu = 0;
  Elem c;
  std::uint64_t intersection = 0;
  double threshold = 0;
};

struct CosetScanResult {
  std::vector<CosetStat> stats;
  bool pass = true;
  // Largest intersection/threshold seen; 0 when no proper subfield exists.
  double worst_ratio = 0;
};

// Scans every coset of every proper subfield. Threshold is |F|^exponent or
// |S|^exponent depending on base. Exponent 1/2 against the subfield size is
// the hypothesis used for non-prime fields; 9/11 against the set size is the
// subfield condition for the group-energy estimate.
CosetScanResult CosetScan(const ESet& s, double threshold_exponent,
                          ThresholdBase base);

// Proper divisors nu of m (nu < m), ascending.
std::vector<int> ProperSubfieldDegrees(int m);

}  // namespace sumprod

#endif  // SUMPROD_SETOPS_HPP_
