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

#include "sumprod/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sumprod {
namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // coefficients, constant term first

u64 MulMod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 PowMod(u64 base, u64 e, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1) r = MulMod(r, base, p);
    base = MulMod(base, base, p);
    e >>= 1;
  }
  return r;
}

u64 InvMod(u64 a, u64 p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

void Trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over F_p; g nonzero.
Poly PolyRem(Poly f, const Poly& g, u64 p) {
  Trim(f);
  const std::size_t dg = g.size() - 1;
  const u64 lead_inv = InvMod(g.back(), p);
  while (f.size() >= g.size()) {
    const u64 c = MulMod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - MulMod(c, g[i], p)) % p;
    }
    Trim(f);
  }
  return f;
}

Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + MulMod(a[i], b[j], p)) % p;
    }
  }
  return PolyRem(std::move(prod), f, p);
}

Poly PolyPowMod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = PolyRem(std::move(base), f, p);
  while (e != 0) {
    if (e & 1) r = PolyMulMod(r, base, f, p);
    base = PolyMulMod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly PolyGcd(Poly a, Poly b, u64 p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = PolyRem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly PolySub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  Trim(a);
  return a;
}

// Rabin's test: f of degree m is irreducible iff x^{p^m} = x (mod f) and
// gcd(x^{p^{m/r}} - x, f) = 1 for every prime r | m.
bool IsIrreducible(const Poly& f, u64 p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  const Poly x{0, 1};
  // frob[k] = x^{p^k} mod f
  std::vector<Poly> frob{PolyRem(x, f, p)};
  for (int k = 1; k <= m; ++k) frob.push_back(PolyPowMod(frob.back(), p, f, p));
  if (PolySub(frob[m], x, p).size() != 0) return false;
  for (u64 r : PrimeFactors(static_cast<u64>(m))) {
    Poly g = PolyGcd(f, PolySub(frob[m / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> SmallestIrreducible(std::uint32_t p, int m) {
  std::vector<std::uint32_t> digits(m, 0);
  Poly f(m + 1, 0);
  f[m] = 1;
  for (;;) {
    for (int i = 0; i < m; ++i) f[i] = digits[i];
    if (IsIrreducible(f, p)) {
      std::vector<std::uint32_t> out(f.begin(), f.end());
      return out;
    }
    int i = 0;
    while (i < m && ++digits[i] == p) digits[i++] = 0;
    if (i == m) break;
  }
  throw CheckFailure("no irreducible polynomial found");
}

}  // namespace

const char* ErrcName(Errc code) {
  switch (code) {
    case Errc::kNotPrime: return "not_prime";
    case Errc::kBadDegree: return "bad_degree";
    case Errc::kOrderOutOfRange: return "order_out_of_range";
    case Errc::kInvalidElement: return "invalid_element";
    case Errc::kZeroInverse: return "zero_inverse";
    case Errc::kFieldMismatch: return "field_mismatch";
    case Errc::kNotDivisor: return "not_divisor";
    case Errc::kPrecondition: return "precondition";
    case Errc::kBudgetExceeded: return "budget_exceeded";
    case Errc::kConfig: return "config";
  }
  return "unknown";
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> Divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

FieldPtr Field::Make(std::uint64_t p, int m) {
  if (!IsPrime(p)) Fail(Errc::kNotPrime, std::to_string(p) + " is not prime");
  if (m < 1) Fail(Errc::kBadDegree, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      Fail(Errc::kOrderOutOfRange, "field order exceeds 2^31");
    }
  }
  return std::make_shared<const Field>(Key{}, static_cast<std::uint32_t>(p), m);
}

Field::Field(Key, std::uint32_t p, int m) : p_(p), m_(m), q_(1) {
  for (int i = 0; i < m; ++i) q_ *= p;
  if (m == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = SmallestIrreducible(p, m);
  }
  unit_primes_ = PrimeFactors(q_ - 1);
  generator_ = FindGenerator();

  constexpr std::uint32_t kTableLimit = 1u << 20;
  if (m > 1 && q_ <= kTableLimit) {
    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
    Elem x = One();
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = exp_[i + q_ - 1] = x.code;
      log_[x.code] = i;
      x = MulPoly(x, generator_);
    }
  }

  // Tr(t^i) by direct Frobenius summation; Trace() is linear in the digits.
  trace_basis_.resize(m);
  std::uint32_t basis = 1;
  for (int i = 0; i < m; ++i) {
    Elem t{basis}, acc = Zero(), y = t;
    for (int k = 0; k < m; ++k) {
      acc = Add(acc, y);
      y = Pow(y, p_);
    }
    if (acc.code >= p_) throw CheckFailure("trace left the prime subfield");
    trace_basis_[i] = acc.code;
    basis *= p_;
  }
}

Elem Field::FromCode(std::uint64_t code) const {
  if (code >= q_) {
    Fail(Errc::kInvalidElement,
         "element code " + std::to_string(code) + " outside [0, q)");
  }
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::Embed(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::Coefficients(Elem x) const {
  std::vector<std::uint32_t> out(m_);
  std::uint32_t c = x.code;
  for (int i = 0; i < m_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

Elem Field::FromCoefficients(std::span<const std::uint32_t> coeffs) const {
  Require(coeffs.size() == static_cast<std::size_t>(m_), Errc::kInvalidElement,
          "coefficient vector length must equal the degree");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    Require(coeffs[i] < p_, Errc::kInvalidElement, "coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return Elem{code};
}

Elem Field::AddDigits(Elem x, Elem y) const {
  std::uint32_t a = x.code, b = y.code, out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::NegDigits(Elem x) const {
  std::uint32_t a = x.code, out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    const std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    a /= p_;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::MulPoly(Elem x, Elem y) const {
  Poly a(m_), b(m_);
  std::uint32_t cx = x.code, cy = y.code;
  for (int i = 0; i < m_; ++i) {
    a[i] = cx % p_;
    b[i] = cy % p_;
    cx /= p_;
    cy /= p_;
  }
  Trim(a);
  Trim(b);
  const Poly f(modulus_.begin(), modulus_.end());
  const Poly r = PolyMulMod(a, b, f, p_);
  std::uint32_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) {
    code = code * p_ + static_cast<std::uint32_t>(r[i]);
  }
  return Elem{code};
}

Elem Field::Inv(Elem x) const {
  if (x.code == 0) Fail(Errc::kZeroInverse, "inverse of zero");
  if (m_ == 1) return Elem{static_cast<std::uint32_t>(InvMod(x.code, p_))};
  if (!log_.empty()) {
    const std::uint32_t l = log_[x.code];
    return Elem{exp_[l == 0 ? 0 : (q_ - 1) - l]};
  }
  return Pow(x, q_ - 2);
}

Elem Field::Pow(Elem x, std::uint64_t e) const {
  if (e == 0) return One();
  if (x.code == 0) return Zero();
  if (m_ == 1) return Elem{static_cast<std::uint32_t>(PowMod(x.code, e, p_))};
  if (!log_.empty()) {
    const u64 n = q_ - 1;
    return Elem{exp_[(u64{log_[x.code]} * (e % n)) % n]};
  }
  Elem r = One(), base = x;
  while (e != 0) {
    if (e & 1) r = Mul(r, base);
    base = Mul(base, base);
    e >>= 1;
  }
  return r;
}

Elem Field::Trace(Elem x) const {
  if (m_ == 1) return x;
  u64 acc = 0;
  std::uint32_t c = x.code;
  for (int i = 0; i < m_; ++i) {
    acc += u64{c % p_} * trace_basis_[i];
    c /= p_;
  }
  return Elem{static_cast<std::uint32_t>(acc % p_)};
}

std::complex<double> Field::UnitRoot(std::uint64_t k) const {
  const double turn = static_cast<double>(k % p_) / static_cast<double>(p_);
  return std::polar(1.0, 2.0 * std::numbers::pi * turn);
}

std::uint64_t Field::MultiplicativeOrder(Elem x) const {
  Require(x.code != 0 && x.code < q_, Errc::kPrecondition,
          "multiplicative order of zero");
  u64 order = q_ - 1;
  for (u64 l : unit_primes_) {
    while (order % l == 0 && Pow(x, order / l) == One()) order /= l;
  }
  return order;
}

Elem Field::FindGenerator() const {
  const u64 n = q_ - 1;
  for (std::uint32_t c = 1; c < q_; ++c) {
    const Elem g{c};
    bool ok = true;
    for (u64 l : unit_primes_) {
      if (Pow(g, n / l) == One()) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw CheckFailure("no generator found");
}

Elem Arith(const Field& field, ArithOp op, Elem x, std::uint64_t y) {
  Require(field.IsValid(x), Errc::kInvalidElement, "operand outside field");
  auto second = [&] { return field.FromCode(y); };
  switch (op) {
    case ArithOp::kAdd: return field.Add(x, second());
    case ArithOp::kSub: return field.Sub(x, second());
    case ArithOp::kMul: return field.Mul(x, second());
    case ArithOp::kInv: return field.Inv(x);
    case ArithOp::kNeg: return field.Neg(x);
    case ArithOp::kPow:
      Require(y <= (u64{1} << 62), Errc::kPrecondition,
              "exponent above 2^62");
      return field.Pow(x, y);
  }
  throw Error(Errc::kPrecondition, "unknown operation");
}

}  // namespace sumprod
