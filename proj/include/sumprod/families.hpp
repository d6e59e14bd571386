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

#ifndef SUMPROD_FAMILIES_HPP_
#define SUMPROD_FAMILIES_HPP_

#include <cstdint>
#include <string_view>

#include "sumprod/eset.hpp"

namespace sumprod {

// Test-set families for sweeps.
//   random           uniform sample without replacement from F_q^*
//   subgroup         subgroup whose order is the largest divisor of q-1 that
//                    does not exceed the requested size
//   shifted_subgroup that subgroup plus one
//   interval         {1, ..., size}; prime fields only
//   geometric        {g^0, ..., g^{size-1}} for the field generator g
enum class Family { kRandom, kSubgroup, kShiftedSubgroup, kInterval, kGeometric };

Family ParseFamily(std::string_view name);
const char* FamilyName(Family family);

// Deterministic in (seed, trial, salt). size must be in [1, q-1]. Subgroup
// families may return fewer elements than requested.
ESet GenerateFamily(const FieldPtr& field, Family family, std::uint64_t size,
                    std::uint64_t seed, std::uint64_t trial,
                    std::uint64_t salt = 0);

}  // namespace sumprod

#endif  // SUMPROD_FAMILIES_HPP_
