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
//
// Sub-period and rolling-window analysis of a change series.

#ifndef BENTRACK_PERIODS_H_
#define BENTRACK_PERIODS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bentrack/conformity.h"
#include "bentrack/date.h"
#include "bentrack/series.h"

namespace bentrack {

struct PeriodSpec {
  std::string label;
  Date from;
  Date to;

  // Throws Error(kInvalidArgument) if from > to.
  static PeriodSpec Custom(std::string label, Date from, Date to);

  friend bool operator==(const PeriodSpec&, const PeriodSpec&) = default;
};

// The five sovereign-CDS study periods, in order:
//   full         2008-08-08 .. 2015-04-25
//   pre_crisis   2008-08-08 .. 2010-01-01
//   crisis       2010-01-01 .. 2013-10-31
//   post_crisis  2013-11-01 .. 2015-04-25
//   post2010     2010-01-01 .. 2015-04-25  (crisis followed by post_crisis)
const std::vector<PeriodSpec>& NamedPeriods();

std::optional<PeriodSpec> FindNamedPeriod(std::string_view label);

struct WindowSpec {
  std::size_t length = 90;
  std::size_t step = 45;
  // A trailing partial window is kept when it holds at least
  // min_fill * length observations.
  double min_fill = 0.5;

  // Throws Error(kInvalidArgument) unless 1 <= step <= length and
  // min_fill is in (0, 1].
  void Validate() const;
  std::size_t MinimumObservations() const;
};

// Half-open observation index range [begin, end).
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Window k covers [k * step, k * step + length) for every such range that
// fits in `n` observations. After the last full window, one partial window
// [next start, n) is appended iff it reaches past the last full window and
// holds at least length * min_fill observations. 1,750 observations at
// 90/45/0.5 give 37 full windows and a partial one of 85.
//
// Throws Error(kSeriesTooShort) if n < MinimumObservations().
std::vector<IndexRange> RollingWindows(std::size_t n, const WindowSpec& spec);

struct WindowResult {
  // 1-based ordinal.
  int index = 0;
  Date start_date;
  Date end_date;
  std::size_t observations = 0;
  ConformityStats stats;

  friend bool operator==(const WindowResult&, const WindowResult&) = default;
};

// Conformity of the changes dated within the period. Throws
// Error(kEmptySlice), naming the period, if no change there has a first
// digit.
ConformityStats AnalyzePeriod(const ChangeSeries& series,
                              const PeriodSpec& period,
                              double alpha = kDefaultAlpha);

// Conformity of the changes in one index range of the series.
ConformityStats AnalyzeRange(const ChangeSeries& series, IndexRange range,
                             double alpha = kDefaultAlpha);

// One WindowResult per rolling window, in window order.
std::vector<WindowResult> Track(const ChangeSeries& series,
                                const WindowSpec& spec,
                                double alpha = kDefaultAlpha);

}  // namespace bentrack

#endif  // BENTRACK_PERIODS_H_
