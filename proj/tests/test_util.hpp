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

#ifndef SUMPROD_TESTS_TEST_UTIL_HPP_
#define SUMPROD_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sumprod/eset.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/verify.hpp"

namespace sumprod::testing {

// Uniform random subset of the requested size (clamped to what is available).
inline ESet RandomSet(const FieldPtr& f, std::uint64_t size, Rng& rng,
                      bool nonzero) {
  const std::uint64_t lo = nonzero ? 1 : 0;
  size = std::min<std::uint64_t>(size, f->order() - lo);
  std::vector<std::uint32_t> codes;
  while (codes.size() < size) {
    const auto c = static_cast<std::uint32_t>(rng.Between(lo, f->order() - 1));
    if (std::find(codes.begin(), codes.end(), c) == codes.end()) {
      codes.push_back(c);
    }
  }
  return ESet(f, std::move(codes));
}

inline std::vector<std::uint32_t> Codes(const ESet& s) {
  return {s.codes().begin(), s.codes().end()};
}

inline Elem RandomNonzero(const Field& f, Rng& rng) {
  return Elem{static_cast<std::uint32_t>(rng.Between(1, f.order() - 1))};
}

inline Elem RandomElem(const Field& f, Rng& rng) {
  return Elem{static_cast<std::uint32_t>(rng.Below(f.order()))};
}

// Random field among all prime powers in [3, max_q].
inline FieldPtr RandomField(std::uint64_t max_q, Rng& rng) {
  static thread_local std::vector<std::pair<std::uint64_t, int>> specs;
  static thread_local std::uint64_t cached = 0;
  if (cached != max_q) {
    specs.clear();
    for (auto s : PrimePowersUpTo(max_q)) {
      if (!(s.first == 2 && s.second == 1)) specs.push_back(s);
    }
    cached = max_q;
  }
  auto [p, m] = specs[rng.Below(specs.size())];
  return Field::Make(p, m);
}

}  // namespace sumprod::testing

#endif  // SUMPROD_TESTS_TEST_UTIL_HPP_
