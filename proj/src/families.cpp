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

#include "sumprod/families.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "sumprod/field.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/setops.hpp"
#include "sumprod/subgroup.hpp"

namespace sumprod {

Family ParseFamily(std::string_view name) {
  if (name == "random") return Family::kRandom;
  if (name == "subgroup") return Family::kSubgroup;
  if (name == "shifted_subgroup") return Family::kShiftedSubgroup;
  if (name == "interval") return Family::kInterval;
  if (name == "geometric") return Family::kGeometric;
  Fail(Errc::kConfig, "unknown family '" + std::string(name) + "'");
}

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kRandom: return "random";
    case Family::kSubgroup: return "subgroup";
    case Family::kShiftedSubgroup: return "shifted_subgroup";
    case Family::kInterval: return "interval";
    case Family::kGeometric: return "geometric";
  }
  return "unknown";
}

ESet GenerateFamily(const FieldPtr& field, Family family, std::uint64_t size,
                    std::uint64_t seed, std::uint64_t trial,
                    std::uint64_t salt) {
  const std::uint64_t units = field->order() - 1;
  if (size < 1 || size > units) {
    Fail(Errc::kPrecondition, "family size must lie in [1, q-1]");
  }
  switch (family) {
    case Family::kRandom: {
      Rng rng(seed, Mix64(trial) ^ salt);
      std::vector<std::uint32_t> codes;
      codes.reserve(size);
      if (size * 4 <= units) {
        std::unordered_set<std::uint32_t> seen;
        while (codes.size() < size) {
          const auto c = static_cast<std::uint32_t>(rng.Between(1, units));
          if (seen.insert(c).second) codes.push_back(c);
        }
      } else {
        std::vector<std::uint32_t> pool(units);
        for (std::uint64_t i = 0; i < units; ++i) pool[i] = i + 1;
        for (std::uint64_t i = 0; i < size; ++i) {
          std::swap(pool[i], pool[i + rng.Below(units - i)]);
          codes.push_back(pool[i]);
        }
      }
      return ESet(field, std::move(codes));
    }
    case Family::kSubgroup:
    case Family::kShiftedSubgroup: {
      std::uint64_t order = 1;
      for (std::uint64_t d : Divisors(units)) {
        if (d <= size) order = d;
      }
      ESet g = SubgroupOfOrder(field, order).elements;
      if (family == Family::kSubgroup) return g;
      return Shift(g, field->One());
    }
    case Family::kInterval: {
      Require(field->degree() == 1, Errc::kPrecondition,
              "interval family needs a prime field");
      std::vector<std::uint32_t> codes(size);
      for (std::uint64_t i = 0; i < size; ++i) codes[i] = i + 1;
      return ESet(field, std::move(codes));
    }
    case Family::kGeometric: {
      std::vector<std::uint32_t> codes;
      codes.reserve(size);
      Elem x = field->One();
      for (std::uint64_t i = 0; i < size; ++i) {
        codes.push_back(x.code);
        x = field->Mul(x, field->generator());
      }
      return ESet(field, std::move(codes));
    }
  }
  Fail(Errc::kConfig, "unknown family");
}

}  // namespace sumprod
