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


#include "bentrack/series.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "bentrack/error.h"
#include "bentrack/synthetic.h"
#include "gtest/gtest.h"

namespace bentrack {
namespace {

ErrorCode CodeOf(std::string_view text) {
  try {
    ParsePanel(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorCode::kInvalidArgument;
}

TEST(Date, ParseAndFormat) {
  const Date d = Date::Parse("2010-01-01");
  EXPECT_EQ(d.ToString(), "2010-01-01");
  EXPECT_EQ(Date::FromYmd(2012, 2, 29).ToString(), "2012-02-29");
  EXPECT_FALSE(Date::TryParse("2011-02-29"));
  EXPECT_FALSE(Date::TryParse("2010-1-01"));
  EXPECT_FALSE(Date::TryParse("2010-01-01 "));
  EXPECT_FALSE(Date::TryParse("20100101"));
  EXPECT_THROW(Date::Parse("bad"), Error);
  EXPECT_THROW(Date::FromYmd(2010, 13, 1), Error);
  EXPECT_EQ(DaysBetween(Date::Parse("2008-08-08"), Date::Parse("2008-08-11")),
            3);
}

TEST(Date, Weekdays) {
  const Date friday = Date::Parse("2008-08-08");
  EXPECT_FALSE(friday.IsWeekend());
  EXPECT_TRUE(friday.AddDays(1).IsWeekend());
  EXPECT_EQ(friday.NextWeekday().ToString(), "2008-08-11");
}

TEST(ParsePanel, SingleSeries) {
  const auto panel = ParsePanel(
      "date,entity,tenor,spread_bps\n"
      "2010-01-05,GR,5Y,101.3\n"
      "2010-01-04,GR,5Y,107.3\n");
  ASSERT_EQ(panel.size(), 1u);
  EXPECT_EQ(panel[0].entity(), "GR");
  EXPECT_EQ(panel[0].tenor(), "5Y");
  ASSERT_EQ(panel[0].size(), 2u);
  EXPECT_EQ(panel[0].observations()[0].date.ToString(), "2010-01-04");
  const ChangeSeries c = DailyChanges(panel[0]);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c.changes[0].value, -6.0, 1e-12);
  EXPECT_EQ(c.changes[0].date.ToString(), "2010-01-05");
  EXPECT_EQ(c.changes[0].gap_days, 1);
}

TEST(ParsePanel, SkipsBlankAndCommentLinesAndCarriageReturns) {
  const auto panel = ParsePanel(
      "date,entity,tenor,spread_bps\r\n"
      "# note\r\n"
      "\r\n"
      "2010-01-04,IT,10Y,200\r\n");
  ASSERT_EQ(panel.size(), 1u);
  EXPECT_EQ(panel[0].observations()[0].spread_bps, 200.0);
}

TEST(ParsePanel, GroupsAndSortsSeries) {
  const auto panel = ParsePanel(
      "date,entity,tenor,spread_bps\n"
      "2010-01-04,PT,5Y,1\n"
      "2010-01-04,DE,5Y,2\n"
      "2010-01-04,DE,10Y,3\n"
      "2010-01-05,PT,5Y,4\n");
  ASSERT_EQ(panel.size(), 3u);
  EXPECT_EQ(panel[0].entity() + panel[0].tenor(), "DE10Y");
  EXPECT_EQ(panel[1].entity() + panel[1].tenor(), "DE5Y");
  EXPECT_EQ(panel[2].entity() + panel[2].tenor(), "PT5Y");
  EXPECT_EQ(panel[2].size(), 2u);
}

TEST(ParsePanel, Errors) {
  EXPECT_EQ(CodeOf(""), ErrorCode::kParse);
  EXPECT_EQ(CodeOf("date,entity,spread\n"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf("date,entity,tenor,spread_bps\n2010-01-04,GR,5Y\n"),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf("date,entity,tenor,spread_bps\n2010-13-04,GR,5Y,1\n"),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf("date,entity,tenor,spread_bps\n2010-01-04,,5Y,1\n"),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf("date,entity,tenor,spread_bps\n2010-01-04,GR,5Y,abc\n"),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf("date,entity,tenor,spread_bps\n2010-01-04,GR,5Y,nan\n"),
            ErrorCode::kInvalidSpread);
  EXPECT_EQ(CodeOf("date,entity,tenor,spread_bps\n2010-01-04,GR,5Y,0\n"),
            ErrorCode::kInvalidSpread);
  EXPECT_EQ(CodeOf("date,entity,tenor,spread_bps\n2010-01-04,GR,5Y,-3\n"),
            ErrorCode::kInvalidSpread);
  EXPECT_EQ(CodeOf("date,entity,tenor,spread_bps\n"
                   "2010-01-04,GR,5Y,1\n"
                   "2010-01-04,GR,5Y,2\n"),
            ErrorCode::kDuplicateDate);
}

TEST(ParsePanel, DuplicateMessageNamesBothLines) {
  try {
    ParsePanel(
        "date,entity,tenor,spread_bps\n"
        "2010-01-04,GR,5Y,1\n"
        "2010-01-05,GR,5Y,1\n"
        "2010-01-04,GR,5Y,2\n");
    FAIL();
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find('2'), std::string::npos);
    EXPECT_NE(msg.find('4'), std::string::npos);
  }
}

TEST(ParsePanel, LargePanel) {
  std::vector<SpreadSeries> panel;
  for (int e = 0; e < 26; ++e) {
    PanelLayout layout;
    layout.entity = std::string(1, static_cast<char>('A' + e));
    const auto changes = GenBenford(1749, 1000 + e);
    panel.push_back(BuildSpreadSeries(changes, layout));
  }
  const std::string text = WritePanel(panel);
  const auto parsed = ParsePanel(text);
  ASSERT_EQ(parsed.size(), 26u);
  for (const auto& s : parsed) {
    EXPECT_EQ(s.size(), 1750u);
    EXPECT_EQ(DailyChanges(s).size(), 1749u);
  }
  EXPECT_EQ(parsed, panel);
}

TEST(WritePanel, RoundTripsRandomPanels) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SpreadSeries> panel;
    const int k = 1 + static_cast<int>(rng.NextBelow(4));
    for (int s = 0; s < k; ++s) {
      std::vector<Observation> obs;
      Date d = Date::FromYmd(2009, 1, 1);
      const std::size_t n = 1 + rng.NextBelow(40);
      for (std::size_t i = 0; i < n; ++i) {
        d = d.AddDays(1 + static_cast<int>(rng.NextBelow(5)));
        obs.push_back({d, 1e-3 + rng.NextUniform() * 2000.0});
      }
      panel.emplace_back("E" + std::to_string(s), "5Y", std::move(obs));
    }
    EXPECT_EQ(ParsePanel(WritePanel(panel)), panel);
  }
}

SpreadSeries Make(std::vector<std::pair<std::string, double>> points) {
  std::vector<Observation> obs;
  for (auto& [d, v] : points) obs.push_back({Date::Parse(d), v});
  return SpreadSeries("X", "5Y", std::move(obs));
}

TEST(DailyChanges, GapsAndModes) {
  const SpreadSeries s = Make({{"2010-01-01", 100},
                               {"2010-01-04", 110},
                               {"2010-01-05", 99},
                               {"2010-01-20", 90}});
  const ChangeSeries abs = DailyChanges(s);
  ASSERT_EQ(abs.size(), 3u);
  EXPECT_EQ(abs.changes[0].gap_days, 3);
  EXPECT_EQ(abs.changes[2].gap_days, 15);
  EXPECT_DOUBLE_EQ(abs.changes[0].value, 10.0);
  EXPECT_EQ(abs.dropped_pairs, 0u);

  const ChangeSeries rel = DailyChanges(s, {ChangeMode::kRelative, {}});
  EXPECT_NEAR(rel.changes[0].value, 0.1, 1e-15);
  EXPECT_NEAR(rel.changes[1].value, -0.1, 1e-15);

  const ChangeSeries capped = DailyChanges(s, {ChangeMode::kAbsolute, 5});
  ASSERT_EQ(capped.size(), 2u);
  EXPECT_EQ(capped.dropped_pairs, 1u);
  EXPECT_EQ(capped.changes.back().date.ToString(), "2010-01-05");
}

TEST(DailyChanges, Errors) {
  EXPECT_THROW(DailyChanges(Make({{"2010-01-01", 1}})), Error);
  const SpreadSeries s = Make({{"2010-01-01", 1}, {"2010-01-02", 2}});
  EXPECT_THROW(DailyChanges(s, {ChangeMode::kAbsolute, 0}), Error);
  EXPECT_THROW(SpreadSeries("X", "5Y", {{Date::Parse("2010-01-01"), 0.0}}),
               Error);
}

TEST(DailyChanges, ValuesOrderAndLength) {
  const auto changes = GenBenford(500, 4);
  const SpreadSeries s = BuildSpreadSeries(changes);
  const ChangeSeries c = DailyChanges(s);
  ASSERT_EQ(c.size(), s.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    EXPECT_LT(c.changes[i - 1].date, c.changes[i].date);
  }
  const auto values = c.Values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_NEAR(std::abs(values[i]), changes[i], 1e-9 * (1 + changes[i]));
  }
}

TEST(Slice, InclusiveBoundsAndComposition) {
  const SpreadSeries s = BuildSpreadSeries(GenBenford(1749, 2));
  const ChangeSeries c = DailyChanges(s);
  const Date a = Date::Parse("2010-01-01");
  const Date b = Date::Parse("2013-10-31");
  const Date nov = Date::Parse("2013-11-01");
  const Date end = Date::Parse("2015-04-25");
  const ChangeSeries crisis = Slice(c, a, b);
  const ChangeSeries post = Slice(c, nov, end);
  const ChangeSeries both = Slice(c, a, end);
  EXPECT_EQ(crisis.size() + post.size(), both.size());
  std::vector<Change> joined = crisis.changes;
  joined.insert(joined.end(), post.changes.begin(), post.changes.end());
  EXPECT_EQ(joined, both.changes);
  for (const auto& ch : crisis.changes) {
    EXPECT_GE(ch.date, a);
    EXPECT_LE(ch.date, b);
  }
  EXPECT_EQ(Slice(c, c.changes.front().date, c.changes.back().date).changes,
            c.changes);
  EXPECT_TRUE(Slice(c, Date::Parse("1990-01-01"), Date::Parse("1990-02-01"))
                  .empty());
  EXPECT_THROW(Slice(c, b, a), Error);
}

}  // namespace
}  // namespace bentrack
