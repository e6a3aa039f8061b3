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

#include <fmt/format.h>

#include <cmath>
#include <span>
#include <utility>

#include "bentrack/error.h"

namespace bentrack {
namespace {

DigitHistogram HistogramOf(const ChangeSeries& series, IndexRange range) {
  DigitHistogram h;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    if (auto d = FirstSignificantDigit(series.changes[i].value)) {
      h.Add(*d);
    } else {
      h.AddExcluded();
    }
  }
  return h;
}

}  // namespace

PeriodSpec PeriodSpec::Custom(std::string label, Date from, Date to) {
  if (from > to) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("period '{}': start {} is after end {}", label,
                            from.ToString(), to.ToString()));
  }
  return PeriodSpec{std::move(label), from, to};
}

const std::vector<PeriodSpec>& NamedPeriods() {
  static const std::vector<PeriodSpec> periods = {
      {"full", Date::FromYmd(2008, 8, 8), Date::FromYmd(2015, 4, 25)},
      {"pre_crisis", Date::FromYmd(2008, 8, 8), Date::FromYmd(2010, 1, 1)},
      {"crisis", Date::FromYmd(2010, 1, 1), Date::FromYmd(2013, 10, 31)},
      {"post_crisis", Date::FromYmd(2013, 11, 1), Date::FromYmd(2015, 4, 25)},
      {"post2010", Date::FromYmd(2010, 1, 1), Date::FromYmd(2015, 4, 25)},
  };
  return periods;
}

std::optional<PeriodSpec> FindNamedPeriod(std::string_view label) {
  for (const auto& p : NamedPeriods()) {
    if (p.label == label) return p;
  }
  return std::nullopt;
}

void WindowSpec::Validate() const {
  if (step < 1 || length < step) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("window step must satisfy 1 <= step <= length "
                            "(length {}, step {})",
                            length, step));
  }
  if (!(min_fill > 0.0 && min_fill <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "min_fill must lie in (0, 1]");
  }
}

std::size_t WindowSpec::MinimumObservations() const {
  // The slack keeps products like 0.3 * 90 = 27.000000000000004 at 27.
  const auto n = static_cast<std::size_t>(
      std::ceil(min_fill * static_cast<double>(length) - 1e-9));
  return n == 0 ? 1 : n;
}

std::vector<IndexRange> RollingWindows(std::size_t n, const WindowSpec& spec) {
  spec.Validate();
  if (n < spec.MinimumObservations()) {
    throw Error(ErrorCode::kSeriesTooShort,
                fmt::format("series too short for windowing: {} observations, "
                            "need at least {}",
                            n, spec.MinimumObservations()));
  }
  std::vector<IndexRange> windows;
  std::size_t start = 0;
  for (; start + spec.length <= n; start += spec.step) {
    windows.push_back({start, start + spec.length});
  }
  const std::size_t covered = windows.empty() ? 0 : windows.back().end;
  if (start < n && n > covered &&
      n - start >= spec.MinimumObservations()) {
    windows.push_back({start, n});
  }
  return windows;
}

ConformityStats AnalyzeRange(const ChangeSeries& series, IndexRange range,
                             double alpha) {
  if (range.begin > range.end || range.end > series.size()) {
    throw Error(ErrorCode::kInvalidArgument, "index range out of bounds");
  }
  return Conformity(HistogramOf(series, range), alpha);
}

ConformityStats AnalyzePeriod(const ChangeSeries& series,
                              const PeriodSpec& period, double alpha) {
  const ChangeSeries sliced = Slice(series, period.from, period.to);
  const DigitHistogram h = HistogramOf(sliced, {0, sliced.size()});
  if (h.total() == 0) {
    throw Error(ErrorCode::kEmptySlice,
                fmt::format("{}/{} period '{}': no changes with a first digit "
                            "in [{}, {}]",
                            series.entity, series.tenor, period.label,
                            period.from.ToString(), period.to.ToString()));
  }
  return Conformity(h, alpha);
}

std::vector<WindowResult> Track(const ChangeSeries& series,
                                const WindowSpec& spec, double alpha) {
  const std::vector<IndexRange> windows = RollingWindows(series.size(), spec);
  std::vector<WindowResult> results;
  results.reserve(windows.size());
  for (std::size_t k = 0; k < windows.size(); ++k) {
    const IndexRange w = windows[k];
    const DigitHistogram h = HistogramOf(series, w);
    if (h.total() == 0) {
      throw Error(ErrorCode::kEmptySample,
                  fmt::format("{}/{} window {}: no changes with a first digit",
                              series.entity, series.tenor, k + 1));
    }
    WindowResult r;
    r.index = static_cast<int>(k + 1);
    r.start_date = series.changes[w.begin].date;
    r.end_date = series.changes[w.end - 1].date;
    r.observations = w.size();
    r.stats = Conformity(h, alpha);
    results.push_back(r);
  }
  return results;
}

}  // namespace bentrack
