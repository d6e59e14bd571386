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

#ifndef SUMPROD_FIELD_HPP_
#define SUMPROD_FIELD_HPP_

#include <compare>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sumprod/error.hpp"

namespace sumprod {

// One element of F_{p^m}. The code packs the coefficient vector
// (a_0, ..., a_{m-1}) of the polynomial representative as sum a_i p^i.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

// Largest field order accepted. Keeps every count in this library inside
// 64-bit integers.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class ArithOp { kAdd, kSub, kMul, kInv, kPow, kNeg };

// The finite field F_q, q = p^m, built on the smallest monic irreducible
// polynomial of degree m over F_p (coefficient vectors compared as base-p
// integers, constant term least significant). Immutable once built; the
// generator is found during construction.
class Field {
  struct Key {};

 public:
  static FieldPtr Make(std::uint64_t p, int m);

  Field(Key, std::uint32_t p, int m);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  // Monic modulus, coefficients a_0..a_m (a_m == 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }
  // Distinct primes dividing q - 1, ascending.
  const std::vector<std::uint64_t>& unit_group_primes() const {
    return unit_primes_;
  }

  bool IsValid(Elem x) const { return x.code < q_; }
  Elem FromCode(std::uint64_t code) const;
  // k mod p, as an element of the prime subfield.
  Elem Embed(std::int64_t k) const;
  std::vector<std::uint32_t> Coefficients(Elem x) const;
  Elem FromCoefficients(std::span<const std::uint32_t> coeffs) const;

  Elem Zero() const { return Elem{0}; }
  Elem One() const { return Elem{1}; }

  Elem Add(Elem x, Elem y) const {
    if (m_ == 1) {
      std::uint32_t s = x.code + y.code;
      return Elem{s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return Elem{x.code ^ y.code};
    return AddDigits(x, y);
  }
  Elem Neg(Elem x) const {
    if (m_ == 1) return Elem{x.code == 0 ? 0 : p_ - x.code};
    if (p_ == 2) return x;
    return NegDigits(x);
  }
  Elem Sub(Elem x, Elem y) const { return Add(x, Neg(y)); }
  Elem Mul(Elem x, Elem y) const {
    if (m_ == 1) {
      return Elem{static_cast<std::uint32_t>(std::uint64_t{x.code} * y.code %
                                             p_)};
    }
    if (!log_.empty()) {
      if (x.code == 0 || y.code == 0) return Elem{0};
      return Elem{exp_[log_[x.code] + log_[y.code]]};
    }
    return MulPoly(x, y);
  }
  Elem Inv(Elem x) const;
  Elem Div(Elem x, Elem y) const { return Mul(x, Inv(y)); }
  Elem Pow(Elem x, std::uint64_t e) const;

  // Tr(x) = x + x^p + ... + x^{p^{m-1}}; the result lies in F_p.
  Elem Trace(Elem x) const;
  // e_p(k) = exp(2 pi i k / p).
  std::complex<double> UnitRoot(std::uint64_t k) const;
  // psi_a(x) = e_p(Tr(a x)). a == 0 gives the trivial character.
  std::complex<double> Character(Elem a, Elem x) const {
    return UnitRoot(Trace(Mul(a, x)).code);
  }

  // Order of x in F_q^*. x must be nonzero.
  std::uint64_t MultiplicativeOrder(Elem x) const;

 private:
  Elem AddDigits(Elem x, Elem y) const;
  Elem NegDigits(Elem x) const;
  Elem MulPoly(Elem x, Elem y) const;
  Elem FindGenerator() const;

  std::uint32_t p_;
  int m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> trace_basis_;  // Tr(t^i), i < m
  std::vector<std::uint64_t> unit_primes_;
  Elem generator_;
  // Discrete log tables for small extension fields; exp_ is doubled so that
  // log x + log y needs no reduction.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

// Dispatches one of the basic operations. For kPow, y is the exponent; for
// kInv and kNeg it is ignored; otherwise it is the code of the second operand.
Elem Arith(const Field& field, ArithOp op, Elem x, std::uint64_t y = 0);

bool IsPrime(std::uint64_t n);
// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> PrimeFactors(std::uint64_t n);
std::vector<std::uint64_t> Divisors(std::uint64_t n);

}  // namespace sumprod

#endif  // SUMPROD_FIELD_HPP_
