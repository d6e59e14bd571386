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

#ifndef SUMPROD_RNG_HPP_
#define SUMPROD_RNG_HPP_

#include <cstdint>
#include <random>

namespace sumprod {

// SplitMix64 finaliser; used to derive independent stream seeds.
std::uint64_t Mix64(std::uint64_t x);

// Deterministic generator for sweeps and randomized checks. The engine is
// std::mt19937_64, whose output sequence is fixed by the standard; bounded
// draws use rejection sampling instead of std::uniform_int_distribution
// (whose algorithm is implementation-defined) so streams are identical on
// every platform. Each (seed, stream) pair gives an independent sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t Below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::uint64_t Between(std::uint64_t lo, std::uint64_t hi) {
    return lo + Below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sumprod

#endif  // SUMPROD_RNG_HPP_
