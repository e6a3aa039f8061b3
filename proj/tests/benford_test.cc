// Copyright 2026 The bentrack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bentrack/benford.h"

#include <cmath>
#include <limits>
#include <vector>

#include "bentrack/error.h"
#include "bentrack/synthetic.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace bentrack {
namespace {

TEST(BenfordPmf, MatchesPublishedTable) {
  const double table[] = {0.301, 0.176, 0.125, 0.097, 0.079,
                          0.067, 0.058, 0.051, 0.046};
  for (int d = 1; d <= 9; ++d) {
    EXPECT_NEAR(BenfordPmf().at(d), table[d - 1], 5e-4) << "digit " << d;
  }
}

TEST(BenfordPmf, SumsToOneAndDecreases) {
  double sum = 0.0;
  for (int d = 1; d <= 9; ++d) {
    sum += BenfordPmf().at(d);
    EXPECT_GT(BenfordPmf().at(d), 0.0);
    if (d > 1) EXPECT_LT(BenfordPmf().at(d), BenfordPmf().at(d - 1));
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(FirstSignificantDigit, Examples) {
  EXPECT_EQ(FirstSignificantDigit(127.17), 1);
  EXPECT_EQ(FirstSignificantDigit(-53.06), 5);
  EXPECT_EQ(FirstSignificantDigit(0.046), 4);
  EXPECT_EQ(FirstSignificantDigit(0.0), std::nullopt);
  EXPECT_EQ(FirstSignificantDigit(-0.0), std::nullopt);
}

TEST(FirstSignificantDigit, DecadeAndDigitBoundaries) {
  EXPECT_EQ(FirstSignificantDigit(0.1), 1);
  EXPECT_EQ(FirstSignificantDigit(1000.0), 1);
  EXPECT_EQ(FirstSignificantDigit(1e-300), 1);
  // The doubles nearest 0.3 and 0.03 lie just below them.
  EXPECT_EQ(FirstSignificantDigit(0.3), 2);
  EXPECT_EQ(FirstSignificantDigit(0.03), 2);
  EXPECT_EQ(FirstSignificantDigit(3.0), 3);
  EXPECT_EQ(FirstSignificantDigit(0.7), 6);
  // 1.0 - 0.9 is 0.09999999999999998, inside the band below 0.1.
  EXPECT_EQ(FirstSignificantDigit(1.0 - 0.9), 1);
  EXPECT_EQ(FirstSignificantDigit(0.0999999999), 9);
  EXPECT_EQ(FirstSignificantDigit(0.09999999999999), 1);
  EXPECT_EQ(FirstSignificantDigit(107.3 - 101.3), 6);
  EXPECT_EQ(FirstSignificantDigit(std::nextafter(2.0, 0.0)), 1);
  EXPECT_EQ(FirstSignificantDigit(999.999999999), 9);
  // Within the rounding band below a power of ten.
  EXPECT_EQ(FirstSignificantDigit(999.9999999999), 1);
  EXPECT_EQ(FirstSignificantDigit(std::numeric_limits<double>::max()), 1);
  EXPECT_EQ(FirstSignificantDigit(std::numeric_limits<double>::denorm_min()),
            4);
}

TEST(FirstSignificantDigit, NonFiniteIsAnError) {
  for (double bad : {std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()}) {
    try {
      FirstSignificantDigit(bad);
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNonFiniteValue);
    }
  }
}

TEST(FirstSignificantDigit, ScaleAndSignInvariance) {
  Rng rng(2024);
  for (int i = 0; i < 5000; ++i) {
    const double x = std::pow(10.0, 20.0 * rng.NextUniform() - 10.0);
    const auto d = FirstSignificantDigit(x);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(FirstSignificantDigit(-x), d);
    for (int k = -6; k <= 6; ++k) {
      EXPECT_EQ(FirstSignificantDigit(x * std::pow(10.0, k)), d)
          << "x=" << x << " k=" << k;
    }
  }
}

TEST(DigitHistogram, Examples) {
  const std::vector<double> ones = {1.2, 0.15, -19.0};
  const DigitHistogram h = ComputeDigitHistogram(ones);
  EXPECT_EQ(h.count(1), 3u);
  for (int d = 2; d <= 9; ++d) EXPECT_EQ(h.count(d), 0u);
  EXPECT_EQ(h.excluded(), 0u);
  EXPECT_EQ(h.total(), 3u);

  const std::vector<double> with_zero = {0.0, 2.5};
  const DigitHistogram z = ComputeDigitHistogram(with_zero);
  EXPECT_EQ(z.count(2), 1u);
  EXPECT_EQ(z.excluded(), 1u);
  EXPECT_EQ(z.total(), 1u);
}

TEST(DigitHistogram, EmptyInputIsValid) {
  const DigitHistogram h = ComputeDigitHistogram({});
  EXPECT_EQ(h.total(), 0u);
  EXPECT_EQ(h.excluded(), 0u);
}

TEST(DigitHistogram, NonFinitePolicy) {
  const std::vector<double> values = {
      1.0, std::numeric_limits<double>::quiet_NaN(), 2.0};
  EXPECT_THROW(ComputeDigitHistogram(values), Error);
  const DigitHistogram h =
      ComputeDigitHistogram(values, NonFinitePolicy::kExclude);
  EXPECT_EQ(h.total(), 2u);
  EXPECT_EQ(h.excluded(), 1u);
}

TEST(DigitHistogram, MatchesDecimalStringOracleOnBenfordSample) {
  const std::vector<double> values = GenBenford(200, 7);
  const DigitHistogram h = ComputeDigitHistogram(values);
  const auto [counts, zeros] = testing::BruteForceDigitCount(values);
  for (int d = 1; d <= 9; ++d) EXPECT_EQ(h.count(d), counts[d - 1]);
  EXPECT_EQ(h.excluded(), zeros);
}

TEST(FirstSignificantDigit, MatchesDecimalStringOracleOnShortDecimals) {
  for (int k = -8; k <= 8; ++k) {
    for (int i = 1; i < 2000; ++i) {
      const double x = k < 0 ? i / std::pow(10.0, -k) : i * std::pow(10.0, k);
      ASSERT_EQ(FirstSignificantDigit(x), testing::DecimalStringFirstDigit(x))
          << "x=" << x;
      const double y = std::nextafter(x, 0.0);
      // Just below a power of ten the guard band applies instead.
      if (i == 1 || i == 10 || i == 100 || i == 1000) continue;
      ASSERT_EQ(FirstSignificantDigit(y), testing::DecimalStringFirstDigit(y))
          << "y=" << y;
    }
  }
}

TEST(DigitHistogram, TotalPlusExcludedIsLength) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values(rng.NextBelow(300));
    for (auto& v : values) {
      v = rng.NextBelow(4) == 0 ? 0.0 : (rng.NextUniform() - 0.5) * 1e4;
    }
    const DigitHistogram h = ComputeDigitHistogram(values);
    EXPECT_EQ(h.total() + h.excluded(), values.size());
  }
}

TEST(DigitHistogram, AccumulatesAndRejectsBadDigits) {
  DigitHistogram a = DigitHistogram::FromCounts({1, 2, 3, 0, 0, 0, 0, 0, 4}, 2);
  const DigitHistogram b =
      DigitHistogram::FromCounts({1, 0, 0, 0, 0, 0, 0, 0, 1}, 1);
  a += b;
  EXPECT_EQ(a.count(1), 2u);
  EXPECT_EQ(a.count(9), 5u);
  EXPECT_EQ(a.excluded(), 3u);
  EXPECT_EQ(a.total(), 12u);
  EXPECT_THROW(a.Add(0), Error);
  EXPECT_THROW(a.Add(10), Error);
}

TEST(ObservedFrequencies, Examples) {
  const FrequencyVector f1 =
      ObservedFrequencies(DigitHistogram::FromCounts({3, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_DOUBLE_EQ(f1.at(1), 1.0);
  for (int d = 2; d <= 9; ++d) EXPECT_DOUBLE_EQ(f1.at(d), 0.0);

  const FrequencyVector flat = ObservedFrequencies(DigitHistogram::FromCounts(
      {100, 100, 100, 100, 100, 100, 100, 100, 100}));
  for (int d = 1; d <= 9; ++d) EXPECT_DOUBLE_EQ(flat.at(d), 1.0 / 9.0);

  const FrequencyVector table = ObservedFrequencies(
      DigitHistogram::FromCounts({301, 176, 125, 97, 79, 67, 58, 51, 46}));
  for (int d = 1; d <= 9; ++d) {
    EXPECT_NEAR(table.at(d), BenfordPmf().at(d), 5e-4);
  }
}

TEST(ObservedFrequencies, EmptySampleIsAnError) {
  try {
    ObservedFrequencies(DigitHistogram{});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySample);
  }
}

TEST(FrequencyVector, RejectsInvalidVectors) {
  EXPECT_THROW(FrequencyVector::FromValues({0.5, 0.5, 0.1, 0, 0, 0, 0, 0, 0}),
               Error);
  EXPECT_THROW(FrequencyVector::FromValues({1.5, -0.5, 0, 0, 0, 0, 0, 0, 0}),
               Error);
  EXPECT_NO_THROW(FrequencyVector::FromValues({0, 0, 0, 0, 0, 0, 0, 0, 1}));
}

}  // namespace
}  // namespace bentrack
