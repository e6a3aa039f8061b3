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

#include "bentrack/report.h"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "bentrack/error.h"
#include "json.hpp"

#ifndef BENTRACK_VERSION
#define BENTRACK_VERSION "0.0.0"
#endif

namespace bentrack {
namespace {

using nlohmann::json;

constexpr std::string_view kPeriodCsvHeader =
    "entity,tenor,period,chi2,p_value,verdict,n,small_sample";
constexpr std::string_view kTrackCsvHeader =
    "entity,tenor,window,start_date,end_date,n,chi2,p_value,chebyshev,kl";
constexpr std::string_view kEmptyVerdict = "empty";

std::string Shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string Fixed4(double v) { return fmt::format("{:.4f}", v); }

[[noreturn]] void ParseFail(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Non-empty lines of a CSV document, header first.
std::vector<std::string_view> CsvLines(std::string_view text,
                                       std::string_view header) {
  std::vector<std::string_view> lines;
  for (std::string_view line : Split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty() || lines.front() != header) {
    ParseFail(fmt::format("expected CSV header '{}'", header));
  }
  return lines;
}

double ParseDouble(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    ParseFail(fmt::format("line {}: invalid number '{}'", line, s));
  }
  return v;
}

template <typename Int>
Int ParseInt(std::string_view s, std::size_t line) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    ParseFail(fmt::format("line {}: invalid integer '{}'", line, s));
  }
  return v;
}

bool ParseBool(std::string_view s, std::size_t line) {
  if (s == "true") return true;
  if (s == "false") return false;
  ParseFail(fmt::format("line {}: invalid boolean '{}'", line, s));
}

Verdict ParseVerdict(std::string_view s) {
  if (s == VerdictName(Verdict::kAccept)) return Verdict::kAccept;
  if (s == VerdictName(Verdict::kReject)) return Verdict::kReject;
  ParseFail(fmt::format("invalid verdict '{}'", s));
}

Date ParseDateField(std::string_view s, std::size_t line) {
  if (auto d = Date::TryParse(s)) return *d;
  ParseFail(fmt::format("line {}: invalid date '{}'", line, s));
}

// Column-aligned plain-text table. Columns flagged in `right` are
// right-aligned.
void WriteTable(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows,
                const std::vector<bool>& right) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  auto write_row = [&](const std::vector<std::string>& r) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) line += "  ";
      line += right[c] ? fmt::format("{:>{}}", r[c], width[c])
                       : fmt::format("{:<{}}", r[c], width[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  write_row(header);
  for (const auto& r : rows) write_row(r);
}

json MetaToJson(const ReportMeta& meta) {
  json params = json::object();
  for (const auto& [k, v] : meta.parameters) params[k] = v;
  return json{{"tool", meta.tool},
              {"version", meta.version},
              {"command", meta.command},
              {"parameters", params}};
}

ReportMeta MetaFromJson(const json& j) {
  ReportMeta meta;
  meta.tool = j.at("tool").get<std::string>();
  meta.version = j.at("version").get<std::string>();
  meta.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) {
    meta.parameters[k] = v.get<std::string>();
  }
  return meta;
}

json ParseJsonDocument(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    ParseFail(fmt::format("invalid JSON: {}", e.what()));
  }
}

void WriteJson(const json& doc, std::ostream& out) {
  out << doc.dump(2) << '\n';
}

// --- period report renderings ---

void EmitPeriodText(const PeriodReport& report, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.rows) {
    if (r.result) {
      const auto& c = *r.result;
      rows.push_back({r.entity, r.tenor, r.period, Fixed4(c.chi_square),
                      Fixed4(c.p_value), std::string(VerdictName(c.verdict)),
                      std::to_string(c.n), c.small_sample ? "yes" : "no"});
    } else {
      rows.push_back({r.entity, r.tenor, r.period, "-", "-",
                      std::string(kEmptyVerdict), "0", "-"});
    }
  }
  WriteTable(out,
             {"entity", "tenor", "period", "chi2", "p_value", "verdict", "n",
              "small_sample"},
             rows, {false, false, false, true, true, false, true, false});
}

void EmitPeriodCsv(const PeriodReport& report, std::ostream& out) {
  out << kPeriodCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.entity << ',' << r.tenor << ',' << r.period << ',';
    if (r.result) {
      const auto& c = *r.result;
      out << Shortest(c.chi_square) << ',' << Shortest(c.p_value) << ','
          << VerdictName(c.verdict) << ',' << c.n << ','
          << (c.small_sample ? "true" : "false");
    } else {
      out << ",," << kEmptyVerdict << ",0,";
    }
    out << '\n';
  }
}

json PeriodRowToJson(const PeriodRow& r) {
  json j{{"entity", r.entity}, {"tenor", r.tenor}, {"period", r.period}};
  if (r.result) {
    const auto& c = *r.result;
    j["chi2"] = c.chi_square;
    j["p_value"] = c.p_value;
    j["verdict"] = std::string(VerdictName(c.verdict));
    j["n"] = c.n;
    j["small_sample"] = c.small_sample;
  } else {
    j["chi2"] = nullptr;
    j["p_value"] = nullptr;
    j["verdict"] = std::string(kEmptyVerdict);
    j["n"] = 0;
    j["small_sample"] = nullptr;
  }
  return j;
}

void EmitPeriodJson(const PeriodReport& report, std::ostream& out) {
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back(PeriodRowToJson(r));
  WriteJson(json{{"meta", MetaToJson(report.meta)}, {"rows", rows}}, out);
}

// --- track report renderings ---

void EmitTrackText(const TrackReport& report, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.rows) {
    rows.push_back({r.entity, r.tenor, ToRoman(r.window),
                    r.start_date.ToString(), r.end_date.ToString(),
                    std::to_string(r.n), Fixed4(r.chi_square),
                    Fixed4(r.p_value), Fixed4(r.chebyshev),
                    Fixed4(r.kl_divergence)});
  }
  WriteTable(out,
             {"entity", "tenor", "window", "start_date", "end_date", "n",
              "chi2", "p_value", "chebyshev", "kl"},
             rows,
             {false, false, false, false, false, true, true, true, true,
              true});
  if (report.trends.empty()) return;
  out << '\n';
  std::vector<std::vector<std::string>> trend_rows;
  for (const auto& t : report.trends) {
    trend_rows.push_back({t.entity, t.tenor,
                          std::string(TrendMetricName(t.fit.metric)),
                          Fixed4(t.fit.slope), Fixed4(t.fit.intercept),
                          Fixed4(t.fit.r_squared)});
  }
  WriteTable(out,
             {"entity", "tenor", "metric", "slope", "intercept", "r_squared"},
             trend_rows, {false, false, false, true, true, true});
}

void EmitTrackCsv(const TrackReport& report, std::ostream& out) {
  out << kTrackCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.entity << ',' << r.tenor << ',' << r.window << ','
        << r.start_date.ToString() << ',' << r.end_date.ToString() << ','
        << r.n << ',' << Shortest(r.chi_square) << ',' << Shortest(r.p_value)
        << ',' << Shortest(r.chebyshev) << ',' << Shortest(r.kl_divergence)
        << '\n';
  }
}

void EmitTrackJson(const TrackReport& report, std::ostream& out) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back(json{{"entity", r.entity},
                        {"tenor", r.tenor},
                        {"window", r.window},
                        {"start_date", r.start_date.ToString()},
                        {"end_date", r.end_date.ToString()},
                        {"n", r.n},
                        {"chi2", r.chi_square},
                        {"p_value", r.p_value},
                        {"chebyshev", r.chebyshev},
                        {"kl", r.kl_divergence}});
  }
  json trends = json::object();
  for (const auto& t : report.trends) {
    trends[t.entity][t.tenor][std::string(TrendMetricName(t.fit.metric))] =
        json{{"slope", t.fit.slope},
             {"intercept", t.fit.intercept},
             {"r_squared", t.fit.r_squared}};
  }
  WriteJson(json{{"meta", MetaToJson(report.meta)},
                 {"rows", rows},
                 {"trends", trends}},
            out);
}

}  // namespace

std::string_view ReportFormatName(ReportFormat format) {
  switch (format) {
    case ReportFormat::kText:
      return "text";
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kJson:
      return "json";
  }
  return "unknown";
}

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  for (auto f : {ReportFormat::kText, ReportFormat::kCsv, ReportFormat::kJson}) {
    if (ReportFormatName(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view Version() { return BENTRACK_VERSION; }

std::string_view TrendMetricName(TrendMetric metric) {
  switch (metric) {
    case TrendMetric::kChiSquare:
      return "chi2";
    case TrendMetric::kChebyshev:
      return "chebyshev";
    case TrendMetric::kKlDivergence:
      return "kl";
  }
  return "unknown";
}

std::optional<TrendMetric> ParseTrendMetric(std::string_view name) {
  for (auto m : kAllTrendMetrics) {
    if (TrendMetricName(m) == name) return m;
  }
  return std::nullopt;
}

double MetricValue(const ConformityStats& stats, TrendMetric metric) {
  switch (metric) {
    case TrendMetric::kChiSquare:
      return stats.chi_square;
    case TrendMetric::kChebyshev:
      return stats.chebyshev;
    case TrendMetric::kKlDivergence:
      return stats.kl_divergence;
  }
  return 0.0;
}

TrendFit FitTrend(std::span<const double> values, TrendMetric metric) {
  if (values.size() < 2) {
    throw Error(ErrorCode::kInsufficientWindows,
                "insufficient windows for trend");
  }
  TrendFit fit;
  fit.metric = metric;
  if (std::all_of(values.begin(), values.end(),
                  [&](double v) { return v == values.front(); })) {
    fit.intercept = values.front();
    return fit;
  }
  const double n = static_cast<double>(values.size());
  const double x_mean = (n + 1.0) / 2.0;
  const double y_mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double dx = static_cast<double>(i + 1) - x_mean;
    const double dy = values[i] - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0)
                            : 0.0;
  return fit;
}

TrendFit FitTrend(std::span<const WindowResult> windows, TrendMetric metric) {
  std::vector<double> values;
  values.reserve(windows.size());
  for (const auto& w : windows) values.push_back(MetricValue(w.stats, metric));
  return FitTrend(values, metric);
}

PeriodReport BuildPeriodReport(std::span<const ChangeSeries> series,
                               std::span<const PeriodSpec> periods,
                               std::span<const std::string> tenors,
                               double alpha) {
  std::vector<const ChangeSeries*> selected;
  for (const auto& s : series) {
    if (tenors.empty() ||
        std::find(tenors.begin(), tenors.end(), s.tenor) != tenors.end()) {
      selected.push_back(&s);
    }
  }
  std::stable_sort(selected.begin(), selected.end(),
                   [](const ChangeSeries* a, const ChangeSeries* b) {
                     return std::tie(a->entity, a->tenor) <
                            std::tie(b->entity, b->tenor);
                   });

  PeriodReport report;
  report.rows.reserve(selected.size() * periods.size());
  for (const ChangeSeries* s : selected) {
    for (const auto& p : periods) {
      PeriodRow row{s->entity, s->tenor, p.label, std::nullopt};
      try {
        const ConformityStats stats = AnalyzePeriod(*s, p, alpha);
        row.result = PeriodCell{stats.chi_square, stats.p_value,
                                stats.verdict, stats.sample_size,
                                stats.small_sample};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptySlice) throw;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

TrackReport BuildTrackReport(std::span<const ChangeSeries> series,
                             const WindowSpec& spec, double alpha) {
  std::vector<const ChangeSeries*> ordered;
  for (const auto& s : series) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ChangeSeries* a, const ChangeSeries* b) {
                     return std::tie(a->entity, a->tenor) <
                            std::tie(b->entity, b->tenor);
                   });

  TrackReport report;
  for (const ChangeSeries* s : ordered) {
    const std::vector<WindowResult> windows = Track(*s, spec, alpha);
    for (const auto& w : windows) {
      report.rows.push_back(TrackRow{s->entity, s->tenor, w.index,
                                     w.start_date, w.end_date,
                                     w.stats.sample_size, w.stats.chi_square,
                                     w.stats.p_value, w.stats.chebyshev,
                                     w.stats.kl_divergence});
    }
    if (windows.size() >= 2) {
      for (TrendMetric m : kAllTrendMetrics) {
        report.trends.push_back(
            SeriesTrend{s->entity, s->tenor, FitTrend(windows, m)});
      }
    }
  }
  return report;
}

std::string ToRoman(int value) {
  if (value < 1 || value > 3999) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("no Roman numeral for {}", value));
  }
  static constexpr std::pair<int, std::string_view> kNumerals[] = {
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"},
      {90, "XC"},  {50, "L"},   {40, "XL"}, {10, "X"},   {9, "IX"},
      {5, "V"},    {4, "IV"},   {1, "I"}};
  std::string out;
  for (const auto& [v, s] : kNumerals) {
    while (value >= v) {
      out += s;
      value -= v;
    }
  }
  return out;
}

void Emit(const PeriodReport& report, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::kText:
      return EmitPeriodText(report, out);
    case ReportFormat::kCsv:
      return EmitPeriodCsv(report, out);
    case ReportFormat::kJson:
      return EmitPeriodJson(report, out);
  }
}

void Emit(const TrackReport& report, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::kText:
      return EmitTrackText(report, out);
    case ReportFormat::kCsv:
      return EmitTrackCsv(report, out);
    case ReportFormat::kJson:
      return EmitTrackJson(report, out);
  }
}

std::string Emit(const PeriodReport& report, ReportFormat format) {
  std::ostringstream out;
  Emit(report, format, out);
  return out.str();
}

std::string Emit(const TrackReport& report, ReportFormat format) {
  std::ostringstream out;
  Emit(report, format, out);
  return out.str();
}

PeriodReport ParsePeriodReportCsv(std::string_view text) {
  const auto lines = CsvLines(text, kPeriodCsvHeader);
  PeriodReport report;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto f = Split(lines[i], ',');
    if (f.size() != 8) {
      ParseFail(fmt::format("line {}: expected 8 fields", line_no));
    }
    PeriodRow row{std::string(f[0]), std::string(f[1]), std::string(f[2]),
                  std::nullopt};
    if (f[5] != kEmptyVerdict) {
      row.result = PeriodCell{ParseDouble(f[3], line_no),
                              ParseDouble(f[4], line_no), ParseVerdict(f[5]),
                              ParseInt<std::uint64_t>(f[6], line_no),
                              ParseBool(f[7], line_no)};
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

PeriodReport ParsePeriodReportJson(std::string_view text) {
  const json doc = ParseJsonDocument(text);
  try {
    PeriodReport report;
    report.meta = MetaFromJson(doc.at("meta"));
    for (const auto& r : doc.at("rows")) {
      PeriodRow row{r.at("entity").get<std::string>(),
                    r.at("tenor").get<std::string>(),
                    r.at("period").get<std::string>(), std::nullopt};
      const auto verdict = r.at("verdict").get<std::string>();
      if (verdict != kEmptyVerdict) {
        row.result = PeriodCell{
            r.at("chi2").get<double>(), r.at("p_value").get<double>(),
            ParseVerdict(verdict), r.at("n").get<std::uint64_t>(),
            r.at("small_sample").get<bool>()};
      }
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const json::exception& e) {
    ParseFail(fmt::format("malformed period report: {}", e.what()));
  }
}

TrackReport ParseTrackReportCsv(std::string_view text) {
  const auto lines = CsvLines(text, kTrackCsvHeader);
  TrackReport report;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto f = Split(lines[i], ',');
    if (f.size() != 10) {
      ParseFail(fmt::format("line {}: expected 10 fields", line_no));
    }
    report.rows.push_back(TrackRow{
        std::string(f[0]), std::string(f[1]), ParseInt<int>(f[2], line_no),
        ParseDateField(f[3], line_no), ParseDateField(f[4], line_no),
        ParseInt<std::uint64_t>(f[5], line_no), ParseDouble(f[6], line_no),
        ParseDouble(f[7], line_no), ParseDouble(f[8], line_no),
        ParseDouble(f[9], line_no)});
  }
  return report;
}

TrackReport ParseTrackReportJson(std::string_view text) {
  const json doc = ParseJsonDocument(text);
  try {
    TrackReport report;
    report.meta = MetaFromJson(doc.at("meta"));
    for (const auto& r : doc.at("rows")) {
      report.rows.push_back(TrackRow{
          r.at("entity").get<std::string>(), r.at("tenor").get<std::string>(),
          r.at("window").get<int>(),
          ParseDateField(r.at("start_date").get<std::string>(), 0),
          ParseDateField(r.at("end_date").get<std::string>(), 0),
          r.at("n").get<std::uint64_t>(), r.at("chi2").get<double>(),
          r.at("p_value").get<double>(), r.at("chebyshev").get<double>(),
          r.at("kl").get<double>()});
    }
    // nlohmann objects iterate in key order, matching emission order for
    // reports built by BuildTrackReport.
    for (const auto& [entity, by_tenor] : doc.at("trends").items()) {
      for (const auto& [tenor, by_metric] : by_tenor.items()) {
        for (TrendMetric m : kAllTrendMetrics) {
          const auto it = by_metric.find(std::string(TrendMetricName(m)));
          if (it == by_metric.end()) continue;
          report.trends.push_back(SeriesTrend{
              entity, tenor,
              TrendFit{m, it->at("slope").get<double>(),
                       it->at("intercept").get<double>(),
                       it->at("r_squared").get<double>()}});
        }
      }
    }
    return report;
  } catch (const json::exception& e) {
    ParseFail(fmt::format("malformed track report: {}", e.what()));
  }
}

}  // namespace bentrack
