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


#include "bentrack/periods.h"

#include <vector>

#include "bentrack/error.h"
#include "bentrack/synthetic.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace bentrack {
namespace {

ChangeSeries SyntheticChanges(std::vector<double> values) {
  return DailyChanges(BuildSpreadSeries(values));
}

TEST(NamedPeriods, Definitions) {
  const auto& p = NamedPeriods();
  ASSERT_EQ(p.size(), 5u);
  const char* expected[][3] = {{"full", "2008-08-08", "2015-04-25"},
                               {"pre_crisis", "2008-08-08", "2010-01-01"},
                               {"crisis", "2010-01-01", "2013-10-31"},
                               {"post_crisis", "2013-11-01", "2015-04-25"},
                               {"post2010", "2010-01-01", "2015-04-25"}};
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(p[i].label, expected[i][0]);
    EXPECT_EQ(p[i].from.ToString(), expected[i][1]);
    EXPECT_EQ(p[i].to.ToString(), expected[i][2]);
  }
  EXPECT_EQ(FindNamedPeriod("crisis")->to.ToString(), "2013-10-31");
  EXPECT_FALSE(FindNamedPeriod("nope"));
  EXPECT_THROW(PeriodSpec::Custom("x", p[0].to, p[0].from), Error);
}

TEST(WindowSpec, Validation) {
  EXPECT_NO_THROW(WindowSpec{}.Validate());
  EXPECT_THROW((WindowSpec{90, 0, 0.5}).Validate(), Error);
  EXPECT_THROW((WindowSpec{90, 91, 0.5}).Validate(), Error);
  EXPECT_THROW((WindowSpec{0, 1, 0.5}).Validate(), Error);
  EXPECT_THROW((WindowSpec{90, 45, 0.0}).Validate(), Error);
  EXPECT_THROW((WindowSpec{90, 45, 1.5}).Validate(), Error);
  EXPECT_EQ((WindowSpec{90, 45, 0.5}).MinimumObservations(), 45u);
  EXPECT_EQ((WindowSpec{90, 45, 0.3}).MinimumObservations(), 27u);
  EXPECT_EQ((WindowSpec{3, 1, 0.01}).MinimumObservations(), 1u);
}

TEST(RollingWindows, Examples) {
  const WindowSpec spec;
  auto w = RollingWindows(1750, spec);
  ASSERT_EQ(w.size(), 38u);
  for (int i = 0; i < 37; ++i) {
    EXPECT_EQ(w[i].begin, 45u * i);
    EXPECT_EQ(w[i].size(), 90u);
  }
  EXPECT_EQ(w.back().begin, 1665u);
  EXPECT_EQ(w.back().size(), 85u);

  EXPECT_EQ(RollingWindows(90, spec).size(), 1u);
  EXPECT_EQ(RollingWindows(45, spec).size(), 1u);
  EXPECT_EQ(RollingWindows(45, spec)[0].size(), 45u);
  const auto hundred = RollingWindows(100, spec);
  ASSERT_EQ(hundred.size(), 2u);
  EXPECT_EQ(hundred[1], (IndexRange{45, 100}));
  EXPECT_EQ(RollingWindows(135, spec).size(), 2u);
  EXPECT_THROW(RollingWindows(44, spec), Error);
  EXPECT_THROW(RollingWindows(0, spec), Error);
}

TEST(RollingWindows, MatchesEnumerationOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    WindowSpec spec;
    spec.length = 1 + rng.NextBelow(200);
    spec.step = 1 + rng.NextBelow(spec.length);
    spec.min_fill = 0.05 + 0.95 * rng.NextUniform();
    const std::size_t n = 1 + rng.NextBelow(2000);
    const auto expected =
        testing::EnumerateWindows(n, spec.length, spec.step, spec.min_fill);
    if (expected.empty()) {
      EXPECT_THROW(RollingWindows(n, spec), Error);
      continue;
    }
    const auto actual = RollingWindows(n, spec);
    ASSERT_EQ(actual.size(), expected.size())
        << "n=" << n << " len=" << spec.length << " step=" << spec.step;
    for (std::size_t i = 0; i < actual.size(); ++i) {
      EXPECT_EQ(actual[i].begin, expected[i].first);
      EXPECT_EQ(actual[i].end, expected[i].second);
    }
  }
}

TEST(RollingWindows, CoverageAndOrdering) {
  Rng rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    WindowSpec spec;
    spec.length = 1 + rng.NextBelow(150);
    spec.step = 1 + rng.NextBelow(spec.length);
    spec.min_fill = 0.5;
    const std::size_t n = spec.length + rng.NextBelow(1500);
    const auto w = RollingWindows(n, spec);
    EXPECT_EQ(w.front().begin, 0u);
    for (std::size_t i = 0; i < w.size(); ++i) {
      EXPECT_LE(w[i].end, n);
      EXPECT_LE(w[i].size(), spec.length);
      EXPECT_GE(w[i].size(), spec.MinimumObservations());
      if (i > 0) {
        EXPECT_EQ(w[i].begin - w[i - 1].begin, spec.step);
        EXPECT_GT(w[i].end, w[i - 1].end);
      }
    }
    // Whatever is left uncovered is shorter than the keep threshold.
    const std::size_t tail = n - w.back().end;
    EXPECT_LT(tail, spec.step);
  }
}

TEST(AnalyzePeriod, UsesInclusiveDateRange) {
  const ChangeSeries c = SyntheticChanges(GenBenford(1749, 5));
  const PeriodSpec& full = NamedPeriods()[0];
  const ConformityStats s = AnalyzePeriod(c, full);
  EXPECT_EQ(s.sample_size, ComputeDigitHistogram(c.Values()).total());
  const PeriodSpec none =
      PeriodSpec::Custom("x", Date::Parse("1999-01-01"), Date::Parse("1999-02-01"));
  try {
    AnalyzePeriod(c, none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySlice);
  }
}

TEST(Track, AgreesWithAnalyzeRange) {
  const ChangeSeries c = SyntheticChanges(GenBenford(1750, 6));
  const WindowSpec spec;
  const auto track = Track(c, spec);
  const auto ranges = RollingWindows(c.size(), spec);
  ASSERT_EQ(track.size(), ranges.size());
  for (std::size_t i = 0; i < track.size(); ++i) {
    EXPECT_EQ(track[i].index, static_cast<int>(i + 1));
    EXPECT_EQ(track[i].observations, ranges[i].size());
    EXPECT_EQ(track[i].start_date, c.changes[ranges[i].begin].date);
    EXPECT_EQ(track[i].end_date, c.changes[ranges[i].end - 1].date);
    EXPECT_EQ(track[i].stats, AnalyzeRange(c, ranges[i]));
  }
}

TEST(Track, ConstantSeriesIsMaximallyNonconforming) {
  const ChangeSeries c = SyntheticChanges(GenConstant(400, 1.0));
  for (const auto& w : Track(c, WindowSpec{})) {
    EXPECT_EQ(w.stats.verdict, Verdict::kReject);
    EXPECT_NEAR(w.stats.chebyshev, 1.0 - BenfordPmf().at(1), 1e-12);
    EXPECT_NEAR(w.stats.kl_divergence, 1.2005453658296201, 1e-12);
  }
}

TEST(Track, CompositeSeriesLaterWindowsDeviateMore) {
  std::vector<double> values = GenBenford(875, 9);
  const auto tail = GenUniformDigit(875, 10);
  values.insert(values.end(), tail.begin(), tail.end());
  const auto track = Track(SyntheticChanges(values), WindowSpec{});
  ASSERT_EQ(track.size(), 38u);
  double early = 0.0;
  double late = 0.0;
  for (int i = 0; i < 15; ++i) early += track[i].stats.chi_square;
  for (int i = 23; i < 38; ++i) late += track[i].stats.chi_square;
  EXPECT_GT(late, early);
}

TEST(Track, WindowWithoutDigitsIsAnError) {
  std::vector<double> values(200, 1.0);
  for (int i = 0; i < 100; ++i) values[i] = 0.0;
  // Zero moves leave the spread flat.
  const ChangeSeries c = SyntheticChanges(values);
  EXPECT_THROW(Track(c, WindowSpec{}), Error);
}

}  // namespace
}  // namespace bentrack
