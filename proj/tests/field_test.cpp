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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sumprod/eset.hpp"
#include "test_util.hpp"

namespace sumprod {
namespace {

// Independent irreducibility test: trial division by every monic polynomial
// of degree 1..m/2, polynomials as plain coefficient vectors.
bool IrreducibleByTrialDivision(std::vector<std::uint64_t> f, std::uint64_t p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= m / 2; ++d) {
    std::vector<std::uint64_t> g(d + 1, 0);
    g[d] = 1;
    for (;;) {
      std::vector<std::uint64_t> r = f;
      for (int i = m; i >= d; --i) {
        const std::uint64_t c = r[i];
        for (int j = 0; j <= d; ++j) {
          r[i - d + j] = (r[i - d + j] + p * p - c * g[j] % p) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
      int i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

TEST(FieldTest, PrimeFieldHasModulusX) {
  const FieldPtr f = Field::Make(5, 1);
  EXPECT_EQ(f->order(), 5u);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(FieldTest, F9UsesTSquaredPlusOne) {
  const FieldPtr f = Field::Make(3, 2);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(FieldTest, F16UsesXFourPlusXPlusOne) {
  const FieldPtr f = Field::Make(2, 4);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
}

TEST(FieldTest, ModulusIsSmallestIrreducible) {
  for (auto [p, m] : PrimePowersUpTo(3000)) {
    if (m == 1) continue;
    const FieldPtr f = Field::Make(p, m);
    std::vector<std::uint64_t> mod(f->modulus().begin(), f->modulus().end());
    ASSERT_TRUE(IrreducibleByTrialDivision(mod, p)) << "q=" << f->order();
    // Every smaller candidate must be reducible.
    std::uint64_t code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + mod[i];
    for (std::uint64_t c = 0; c < code; ++c) {
      std::vector<std::uint64_t> cand(m + 1, 0);
      cand[m] = 1;
      std::uint64_t x = c;
      for (int i = 0; i < m; ++i) {
        cand[i] = x % p;
        x /= p;
      }
      ASSERT_FALSE(IrreducibleByTrialDivision(cand, p))
          << "q=" << f->order() << " candidate " << c;
    }
  }
}

TEST(FieldTest, ConstructionErrorsAreDistinct) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kConfig;
  };
  EXPECT_EQ(code_of([] { Field::Make(4, 1); }), Errc::kNotPrime);
  EXPECT_EQ(code_of([] { Field::Make(5, 0); }), Errc::kBadDegree);
  EXPECT_EQ(code_of([] { Field::Make(2, 32); }), Errc::kOrderOutOfRange);
  EXPECT_NO_THROW(Field::Make(2, 31));
}

TEST(FieldTest, BasicArithmetic) {
  const FieldPtr f7 = Field::Make(7, 1);
  EXPECT_EQ(f7->Mul({3}, {5}), Elem{1});
  EXPECT_THROW(f7->Inv({0}), Error);
  const FieldPtr f9 = Field::Make(3, 2);
  const Elem t{3};
  EXPECT_EQ(f9->Mul(t, t), Elem{2});
  EXPECT_EQ(Arith(*f9, ArithOp::kMul, t, 3), Elem{2});
  EXPECT_EQ(Arith(*f9, ArithOp::kPow, t, 4), Elem{1});
  EXPECT_EQ(Arith(*f9, ArithOp::kNeg, t), Elem{6});
  EXPECT_THROW(Arith(*f9, ArithOp::kAdd, t, 9), Error);
}

TEST(FieldTest, LargeExponentsAndLargeFields) {
  const FieldPtr f = Field::Make(2147483647ULL, 1);
  EXPECT_EQ(f->Pow({3}, f->order() - 1), f->One());
  EXPECT_EQ(f->Pow({3}, std::uint64_t{1} << 62),
            f->Pow({3}, (std::uint64_t{1} << 62) % (f->order() - 1)));
  // Above the table limit extension fields use polynomial arithmetic.
  const FieldPtr big = Field::Make(3, 13);
  const Elem x{123456};
  EXPECT_EQ(big->Mul(x, big->Inv(x)), big->One());
  EXPECT_EQ(big->Pow(x, big->order() - 1), big->One());
  EXPECT_EQ(big->MultiplicativeOrder(big->generator()), big->order() - 1);
}

TEST(FieldTest, TableAndPolynomialMultiplicationAgree) {
  // Build F_{5^4} twice worth of products through Pow (table) and repeated
  // Mul, then compare against a schoolbook reduction.
  const FieldPtr f = Field::Make(5, 4);
  const auto& mod = f->modulus();
  sumprod::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Elem x = testing::RandomElem(*f, rng), y = testing::RandomElem(*f, rng);
    const auto a = f->Coefficients(x), b = f->Coefficients(y);
    std::vector<std::uint64_t> prod(7, 0);
    for (int u = 0; u < 4; ++u) {
      for (int v = 0; v < 4; ++v) prod[u + v] = (prod[u + v] + a[u] * b[v]) % 5;
    }
    for (int d = 6; d >= 4; --d) {
      const std::uint64_t c = prod[d];
      for (int j = 0; j <= 4; ++j) {
        prod[d - 4 + j] = (prod[d - 4 + j] + 25 - c * mod[j] % 5) % 5;
      }
    }
    std::vector<std::uint32_t> r(prod.begin(), prod.begin() + 4);
    ASSERT_EQ(f->Mul(x, y), f->FromCoefficients(r));
  }
}

TEST(FieldTest, CodeRoundTrip) {
  sumprod::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const FieldPtr f = testing::RandomField(100000, rng);
    const Elem x = testing::RandomElem(*f, rng);
    EXPECT_EQ(f->FromCoefficients(f->Coefficients(x)), x);
  }
}

TEST(FieldTest, ExhaustiveAxiomsUpTo512) {
  for (auto [p, m] : PrimePowersUpTo(512)) {
    const FieldPtr f = Field::Make(p, m);
    const std::uint32_t q = f->order();
    // Distributivity over a sample of triples keeps the cost at q^2.
    for (std::uint32_t x = 0; x < q; ++x) {
      if (x != 0) ASSERT_EQ(f->Mul({x}, f->Inv({x})), f->One());
      ASSERT_EQ(f->Add({x}, f->Neg({x})), f->Zero());
      for (std::uint32_t y = 0; y < q; ++y) {
        ASSERT_EQ(f->Mul({x}, {y}), f->Mul({y}, {x}));
        ASSERT_EQ(f->Add({x}, {y}), f->Add({y}, {x}));
        const Elem z{(x * 7 + y * 13 + 1) % q};
        ASSERT_EQ(f->Mul({x}, f->Add({y}, z)),
                  f->Add(f->Mul({x}, {y}), f->Mul({x}, z)));
        ASSERT_EQ(f->Mul(f->Mul({x}, {y}), z), f->Mul({x}, f->Mul({y}, z)));
      }
    }
  }
}

TEST(FieldTest, Trace) {
  EXPECT_EQ(Field::Make(5, 1)->Trace({3}), Elem{3});
  const FieldPtr f9 = Field::Make(3, 2);
  EXPECT_EQ(f9->Trace({3}), Elem{0});
  EXPECT_EQ(f9->Trace({1}), Elem{2});
}

TEST(FieldTest, TraceIsLinearAndOnto) {
  sumprod::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const FieldPtr f = testing::RandomField(20000, rng);
    std::vector<bool> hit(f->characteristic(), false);
    for (int j = 0; j < 200; ++j) {
      const Elem x = testing::RandomElem(*f, rng), y = testing::RandomElem(*f, rng);
      const Elem c = f->Embed(static_cast<std::int64_t>(rng.Below(f->characteristic())));
      ASSERT_EQ(f->Trace(f->Add(x, y)), f->Add(f->Trace(x), f->Trace(y)));
      ASSERT_EQ(f->Trace(f->Mul(c, x)), f->Mul(c, f->Trace(x)));
      ASSERT_LT(f->Trace(x).code, f->characteristic());
    }
    if (f->order() <= 4096) {
      for (std::uint32_t x = 0; x < f->order(); ++x) hit[f->Trace({x}).code] = true;
      for (bool b : hit) EXPECT_TRUE(b);
    }
  }
}

TEST(FieldTest, AdditiveCharacter) {
  const FieldPtr f5 = Field::Make(5, 1);
  EXPECT_NEAR(std::abs(f5->Character({0}, {3}) - 1.0), 0.0, 1e-15);
  const auto expected = std::polar(1.0, 2 * std::numbers::pi / 5);
  EXPECT_NEAR(std::abs(f5->Character({1}, {1}) - expected), 0.0, 1e-15);
  std::complex<double> sum = 0;
  for (std::uint32_t x = 0; x < 5; ++x) sum += f5->Character({1}, {x});
  EXPECT_LE(std::abs(sum), 1e-9);
}

TEST(FieldTest, CharacterOrthogonality) {
  for (auto [p, m] : PrimePowersUpTo(400)) {
    const FieldPtr f = Field::Make(p, m);
    for (std::uint32_t a = 1; a < f->order(); a += 1 + f->order() / 7) {
      std::complex<double> sum = 0;
      for (std::uint32_t x = 0; x < f->order(); ++x) {
        const auto v = f->Character({a}, {x});
        ASSERT_NEAR(std::abs(v), 1.0, 1e-12);
        sum += v;
      }
      EXPECT_LE(std::abs(sum), 1e-9 * f->order()) << "q=" << f->order();
    }
  }
}

TEST(FieldTest, Generators) {
  EXPECT_EQ(Field::Make(2, 1)->generator(), Elem{1});
  EXPECT_EQ(Field::Make(5, 1)->generator(), Elem{2});
  EXPECT_EQ(Field::Make(3, 2)->generator(), Elem{4});
  EXPECT_EQ(Field::Make(2, 4)->generator(), Elem{2});
}

TEST(FieldTest, GeneratorIsSmallestPrimitiveElement) {
  for (auto [p, m] : PrimePowersUpTo(2000)) {
    const FieldPtr f = Field::Make(p, m);
    const Elem g = f->generator();
    // Brute-force order by repeated multiplication.
    auto order = [&](Elem x) {
      std::uint64_t k = 1;
      for (Elem y = x; y != f->One(); y = f->Mul(y, x)) ++k;
      return k;
    };
    ASSERT_EQ(order(g), f->order() - 1) << "q=" << f->order();
    for (std::uint32_t c = 1; c < g.code; ++c) {
      ASSERT_LT(order({c}), f->order() - 1);
    }
    for (std::uint64_t l : f->unit_group_primes()) {
      EXPECT_NE(f->Pow(g, (f->order() - 1) / l), f->One());
    }
  }
}

TEST(FieldTest, Subfields) {
  const FieldPtr f9 = Field::Make(3, 2);
  EXPECT_EQ(Subfield(f9, 1), ESet(f9, {0, 1, 2}));
  EXPECT_EQ(Subfield(f9, 2).size(), 9u);
  const FieldPtr f16 = Field::Make(2, 4);
  EXPECT_EQ(Subfield(f16, 2), ESet(f16, {0, 1, 6, 7}));
  EXPECT_THROW(Subfield(f16, 3), Error);
}

TEST(FieldTest, SubfieldIsFrobeniusFixedAndClosed) {
  for (auto [p, m] : PrimePowersUpTo(729)) {
    if (m == 1) continue;
    const FieldPtr f = Field::Make(p, m);
    for (int nu = 1; nu < m; ++nu) {
      if (m % nu) continue;
      std::vector<std::uint32_t> fixed;
      std::uint64_t pnu = 1;
      for (int i = 0; i < nu; ++i) pnu *= p;
      for (std::uint32_t x = 0; x < f->order(); ++x) {
        if (f->Pow({x}, pnu) == Elem{x}) fixed.push_back(x);
      }
      const ESet sub = Subfield(f, nu);
      ASSERT_EQ(sub, ESet(f, fixed));
      for (std::uint32_t x : sub.codes()) {
        for (std::uint32_t y : sub.codes()) {
          ASSERT_TRUE(sub.Contains(f->Add({x}, {y})));
          ASSERT_TRUE(sub.Contains(f->Mul({x}, {y})));
        }
      }
    }
  }
}

TEST(FieldTest, PrimesAndDivisors) {
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(2147483647ULL));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(561));
  EXPECT_EQ(PrimeFactors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(Divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(Divisors(1), (std::vector<std::uint64_t>{1}));
}

}  // namespace
}  // namespace sumprod
