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
// Period tables, window tracks with linear trends, and their text, CSV and
// JSON renderings.
//
// CSV schemas:
//   period: entity,tenor,period,chi2,p_value,verdict,n,small_sample
//   track:  entity,tenor,window,start_date,end_date,n,chi2,p_value,chebyshev,kl
//
// JSON documents are objects with "meta" (tool, version, command and the
// echoed parameters), "rows" (one object per CSV row, same keys) and, for
// tracks, "trends" keyed as trends[entity][tenor][metric]. CSV and JSON
// print doubles in shortest round-trip form; the text rendering rounds to
// four decimals and labels windows with Roman numerals.

#ifndef BENTRACK_REPORT_H_
#define BENTRACK_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bentrack/conformity.h"
#include "bentrack/date.h"
#include "bentrack/periods.h"
#include "bentrack/series.h"

namespace bentrack {

enum class ReportFormat { kText, kCsv, kJson };

std::string_view ReportFormatName(ReportFormat format);
std::optional<ReportFormat> ParseReportFormat(std::string_view name);

struct ReportMeta {
  std::string tool = "bentrack";
  std::string version;
  std::string command;
  std::map<std::string, std::string> parameters;

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

// Library version string, e.g. "0.1.0".
std::string_view Version();

struct PeriodCell {
  double chi_square = 0.0;
  double p_value = 1.0;
  Verdict verdict = Verdict::kAccept;
  std::uint64_t n = 0;
  bool small_sample = false;

  friend bool operator==(const PeriodCell&, const PeriodCell&) = default;
};

struct PeriodRow {
  std::string entity;
  std::string tenor;
  std::string period;
  // nullopt when the period held no usable changes; rendered as verdict
  // "empty".
  std::optional<PeriodCell> result;

  friend bool operator==(const PeriodRow&, const PeriodRow&) = default;
};

struct PeriodReport {
  ReportMeta meta;
  std::vector<PeriodRow> rows;

  friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

struct TrackRow {
  std::string entity;
  std::string tenor;
  int window = 0;
  Date start_date;
  Date end_date;
  std::uint64_t n = 0;
  double chi_square = 0.0;
  double p_value = 1.0;
  double chebyshev = 0.0;
  double kl_divergence = 0.0;

  friend bool operator==(const TrackRow&, const TrackRow&) = default;
};

enum class TrendMetric { kChiSquare, kChebyshev, kKlDivergence };

inline constexpr TrendMetric kAllTrendMetrics[] = {
    TrendMetric::kChiSquare, TrendMetric::kChebyshev,
    TrendMetric::kKlDivergence};

// "chi2", "chebyshev", "kl".
std::string_view TrendMetricName(TrendMetric metric);
std::optional<TrendMetric> ParseTrendMetric(std::string_view name);

// Ordinary least squares of a metric against the 1-based window index.
struct TrendFit {
  TrendMetric metric = TrendMetric::kChiSquare;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;

  friend bool operator==(const TrendFit&, const TrendFit&) = default;
};

struct SeriesTrend {
  std::string entity;
  std::string tenor;
  TrendFit fit;

  friend bool operator==(const SeriesTrend&, const SeriesTrend&) = default;
};

struct TrackReport {
  ReportMeta meta;
  std::vector<TrackRow> rows;
  std::vector<SeriesTrend> trends;

  friend bool operator==(const TrackReport&, const TrackReport&) = default;
};

// Fits values[i] against x = i + 1. A sequence with zero variance gets slope
// 0, intercept equal to the common value and r_squared 0. Throws
// Error(kInsufficientWindows) for fewer than two values.
TrendFit FitTrend(std::span<const double> values, TrendMetric metric);
TrendFit FitTrend(std::span<const WindowResult> windows, TrendMetric metric);

double MetricValue(const ConformityStats& stats, TrendMetric metric);

// One row per (series, period), ordered by entity, tenor, then the order of
// `periods`. Series whose tenor is not in `tenors` are skipped (an empty
// `tenors` keeps all). Periods with no usable changes become rows with no
// result; other errors propagate.
PeriodReport BuildPeriodReport(std::span<const ChangeSeries> series,
                               std::span<const PeriodSpec> periods,
                               std::span<const std::string> tenors = {},
                               double alpha = kDefaultAlpha);

// Window rows for every series plus one trend per metric for each series
// with at least two windows.
TrackReport BuildTrackReport(std::span<const ChangeSeries> series,
                             const WindowSpec& spec,
                             double alpha = kDefaultAlpha);

// "I", "II", ..., "MMMCMXCIX". Throws Error(kInvalidArgument) outside
// 1..3999.
std::string ToRoman(int value);

void Emit(const PeriodReport& report, ReportFormat format, std::ostream& out);
void Emit(const TrackReport& report, ReportFormat format, std::ostream& out);
std::string Emit(const PeriodReport& report, ReportFormat format);
std::string Emit(const TrackReport& report, ReportFormat format);

// Inverses of the CSV and JSON emitters. CSV carries rows only, so the
// parsed report has default meta (and, for tracks, no trends). Throws
// Error(kParse) on malformed documents.
PeriodReport ParsePeriodReportCsv(std::string_view text);
PeriodReport ParsePeriodReportJson(std::string_view text);
TrackReport ParseTrackReportCsv(std::string_view text);
TrackReport ParseTrackReportJson(std::string_view text);

}  // namespace bentrack

#endif  // BENTRACK_REPORT_H_
