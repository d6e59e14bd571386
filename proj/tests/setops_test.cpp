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

#include "sumprod/setops.hpp"

#include <gtest/gtest.h>

#include <set>

#include "sumprod/oracle.hpp"
#include "test_util.hpp"

namespace sumprod {
namespace {

TEST(ESetTest, SortsAndDeduplicates) {
  const FieldPtr f = Field::Make(7, 1);
  const ESet a(f, {4, 1, 2, 1});
  EXPECT_EQ(testing::Codes(a), (std::vector<std::uint32_t>{1, 2, 4}));
  EXPECT_TRUE(a.Contains({2}));
  EXPECT_FALSE(a.Contains({3}));
  EXPECT_EQ(a.ToString(), "1,2,4");
  EXPECT_EQ(ESet::Parse(f, "4, 2,1"), a);
  EXPECT_TRUE(ESet::Empty(f).empty());
}

TEST(ESetTest, RejectsInvalidCodes) {
  const FieldPtr f = Field::Make(7, 1);
  EXPECT_THROW(ESet(f, {7}), Error);
  EXPECT_THROW(ESet::Parse(f, "1,x"), Error);
}

TEST(ESetTest, MixingFieldsIsAnError) {
  const ESet a(Field::Make(7, 1), {1});
  const ESet b(Field::Make(7, 1), {1});
  try {
    ProductSet(a, b);
    FAIL() << "expected field mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kFieldMismatch);
  }
}

TEST(SetOpsTest, SmallExamples) {
  const FieldPtr f7 = Field::Make(7, 1);
  const ESet g(f7, {1, 2, 4});
  EXPECT_EQ(ProductSet(g, g), g);
  EXPECT_EQ(DifferenceSet(g, g), ESet(f7, {0, 1, 2, 3, 4, 5, 6}));
  const FieldPtr f11 = Field::Make(11, 1);
  const ESet x(f11, {0, 2});
  EXPECT_EQ(SumSet(x, x), ESet(f11, {0, 2, 4}));
  EXPECT_EQ(Shift(g, {1}), ESet(f7, {2, 3, 5}));
  EXPECT_EQ(Dilate(g, {3}), ESet(f7, {3, 5, 6}));
  EXPECT_THROW(Dilate(g, {0}), Error);
}

TEST(SetOpsTest, EmptyOperands) {
  const FieldPtr f = Field::Make(5, 1);
  const ESet e = ESet::Empty(f);
  const ESet a(f, {1, 2});
  EXPECT_TRUE(ProductSet(e, a).empty());
  EXPECT_TRUE(SumSet(a, e).empty());
}

std::vector<std::uint32_t> Sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(SetOpsTest, AgreesWithBruteForce) {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const FieldPtr f = testing::RandomField(3000, rng);
    const ESet a = testing::RandomSet(f, rng.Between(0, 30), rng, false);
    const ESet b = testing::RandomSet(f, rng.Between(0, 30), rng, false);
    ASSERT_EQ(testing::Codes(ProductSet(a, b)), Sorted(oracle::ProductSetBrute(a, b)));
    ASSERT_EQ(testing::Codes(SumSet(a, b)), Sorted(oracle::SumSetBrute(a, b)));
  }
}

TEST(SetOpsTest, SizeBounds) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const FieldPtr f = testing::RandomField(5000, rng);
    const ESet a = testing::RandomSet(f, rng.Between(1, 25), rng, true);
    const ESet b = testing::RandomSet(f, rng.Between(1, 25), rng, true);
    const auto ab = ProductSet(a, b).size();
    EXPECT_GE(ab, std::max(a.size(), b.size()));
    EXPECT_LE(ab, std::min<std::uint64_t>(a.size() * b.size(), f->order() - 1));
    // Dilation is a bijection.
    EXPECT_EQ(Dilate(a, testing::RandomNonzero(*f, rng)).size(), a.size());
  }
}

TEST(SetOpsTest, ProperSubfieldDegrees) {
  EXPECT_TRUE(ProperSubfieldDegrees(1).empty());
  EXPECT_EQ(ProperSubfieldDegrees(6), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(ProperSubfieldDegrees(5), (std::vector<int>{1}));
}

TEST(CosetScanTest, F9Counts) {
  const FieldPtr f9 = Field::Make(3, 2);
  auto counts = [&](const ESet& s) {
    std::vector<std::uint64_t> out;
    for (const auto& st : CosetScan(s, 0.5, ThresholdBase::kSubfieldSize).stats) {
      out.push_back(st.intersection);
    }
    return out;
  };
  EXPECT_EQ(counts(ESet(f9, {3, 4})), (std::vector<std::uint64_t>{0, 1, 1, 0}));
  EXPECT_EQ(counts(ESet(f9, {0, 1, 2})), (std::vector<std::uint64_t>{3, 1, 1, 1}));
  const auto r = CosetScan(ESet(f9, {0, 1, 2}), 0.5, ThresholdBase::kSubfieldSize);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.worst_ratio, 3 / std::sqrt(3.0), 1e-12);
}

TEST(CosetScanTest, PrimeFieldHasNothingToScan) {
  const FieldPtr f = Field::Make(13, 1);
  const auto r = CosetScan(ESet(f, {1, 2}), 0.5, ThresholdBase::kSubfieldSize);
  EXPECT_TRUE(r.stats.empty());
  EXPECT_TRUE(r.pass);
  EXPECT_THROW(CosetScan(ESet::Empty(f), 0.5, ThresholdBase::kSetSize), Error);
}

TEST(CosetScanTest, MatchesDirectIntersection) {
  Rng rng(77);
  for (auto [p, m] : PrimePowersUpTo(4096)) {
    if (m == 1) continue;
    const FieldPtr f = Field::Make(p, m);
    const ESet s = testing::RandomSet(f, 20, rng, false);
    const auto r = CosetScan(s, 0.5, ThresholdBase::kSetSize);
    for (const auto& st : r.stats) {
      const ESet coset = Dilate(Subfield(f, st.nu), st.c);
      std::uint64_t n = 0;
      for (std::uint32_t x : s.codes()) n += coset.Contains({x});
      ASSERT_EQ(n, st.intersection) << "q=" << f->order() << " nu=" << st.nu;
    }
  }
}

}  // namespace
}  // namespace sumprod
