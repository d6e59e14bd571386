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

#ifndef SUMPROD_ERROR_HPP_
#define SUMPROD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sumprod {

enum class Errc {
  kNotPrime,
  kBadDegree,
  kOrderOutOfRange,
  kInvalidElement,
  kZeroInverse,
  kFieldMismatch,
  kNotDivisor,
  kPrecondition,
  kBudgetExceeded,
  kConfig,
};

const char* ErrcName(Errc code);

// Invalid input to a library operation. The code distinguishes the cause.
class Error : public std::invalid_argument {
 public:
  Error(Errc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// An inequality or identity that is a theorem failed to hold on concrete
// data. Always an arithmetic bug, never a property of the input.
class CheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void Fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool cond, Errc code, const char* what) {
  if (!cond) throw Error(code, what);
}

}  // namespace sumprod

#endif  // SUMPROD_ERROR_HPP_
