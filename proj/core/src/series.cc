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

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <utility>

#include "bentrack/error.h"

namespace bentrack {
namespace {

struct PendingRow {
  Observation obs;
  std::size_t line;
};

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// [+-]? digits [. digits]? | [+-]? . digits
bool IsPlainDecimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = 0;
  while (i < s.size() && IsDigit(s[i])) ++i, ++int_digits;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && IsDigit(s[i])) ++i, ++frac_digits;
  }
  return i == s.size() && int_digits + frac_digits > 0;
}

bool LooksNonFinite(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  std::string lower;
  for (char c : s) {
    lower.push_back(static_cast<char>(
        (c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c));
  }
  return lower == "nan" || lower == "inf" || lower == "infinity";
}

double ParseSpread(std::string_view field, std::size_t line) {
  if (LooksNonFinite(field)) {
    throw Error(ErrorCode::kInvalidSpread,
                fmt::format("line {}: non-finite spread '{}'", line, field));
  }
  if (!IsPlainDecimal(field)) {
    throw Error(ErrorCode::kParse,
                fmt::format("line {}: malformed spread '{}'", line, field));
  }
  // from_chars rejects a leading '+'.
  std::string_view digits = field;
  if (digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidSpread,
                fmt::format("line {}: spread '{}' out of range", line, field));
  }
  if (value <= 0.0) {
    throw Error(ErrorCode::kInvalidSpread,
                fmt::format("line {}: nonpositive spread {}", line, field));
  }
  return value;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view StripCr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::string FormatShortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

SpreadSeries::SpreadSeries(std::string entity, std::string tenor,
                           std::vector<Observation> observations)
    : entity_(std::move(entity)),
      tenor_(std::move(tenor)),
      observations_(std::move(observations)) {
  std::stable_sort(observations_.begin(), observations_.end(),
                   [](const Observation& a, const Observation& b) {
                     return a.date < b.date;
                   });
  for (std::size_t i = 0; i < observations_.size(); ++i) {
    const auto& o = observations_[i];
    if (!std::isfinite(o.spread_bps) || o.spread_bps <= 0.0) {
      throw Error(ErrorCode::kInvalidSpread,
                  fmt::format("{}/{} {}: spread must be finite and positive",
                              entity_, tenor_, o.date.ToString()));
    }
    if (i > 0 && observations_[i - 1].date == o.date) {
      throw Error(ErrorCode::kDuplicateDate,
                  fmt::format("{}/{}: duplicate date {}", entity_, tenor_,
                              o.date.ToString()));
    }
  }
}

std::vector<double> ChangeSeries::Values() const {
  std::vector<double> v;
  v.reserve(changes.size());
  for (const auto& c : changes) v.push_back(c.value);
  return v;
}

std::vector<SpreadSeries> ParsePanel(std::istream& in) {
  std::map<std::pair<std::string, std::string>, std::vector<PendingRow>> rows;
  std::string raw;
  std::size_t line_no = 0;
  bool saw_header = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = StripCr(raw);
    if (!saw_header) {
      if (line != kPanelHeader) {
        throw Error(ErrorCode::kParse,
                    fmt::format("line 1: expected header '{}'", kPanelHeader));
      }
      saw_header = true;
      continue;
    }
    if (line.empty() || line.front() == '#') continue;

    const std::vector<std::string_view> fields = SplitFields(line);
    if (fields.size() != 4) {
      throw Error(ErrorCode::kParse,
                  fmt::format("line {}: expected 4 comma-separated fields, "
                              "got {}",
                              line_no, fields.size()));
    }
    const auto date = Date::TryParse(fields[0]);
    if (!date) {
      throw Error(ErrorCode::kParse,
                  fmt::format("line {}: invalid date '{}'", line_no,
                              fields[0]));
    }
    if (fields[1].empty() || fields[2].empty()) {
      throw Error(ErrorCode::kParse,
                  fmt::format("line {}: empty entity or tenor", line_no));
    }
    const double spread = ParseSpread(fields[3], line_no);
    rows[{std::string(fields[1]), std::string(fields[2])}].push_back(
        {{*date, spread}, line_no});
  }
  if (!saw_header) {
    throw Error(ErrorCode::kParse,
                fmt::format("line 1: expected header '{}'", kPanelHeader));
  }

  std::vector<SpreadSeries> out;
  out.reserve(rows.size());
  for (auto& [key, pending] : rows) {
    std::stable_sort(pending.begin(), pending.end(),
                     [](const PendingRow& a, const PendingRow& b) {
                       return a.obs.date < b.obs.date;
                     });
    std::vector<Observation> obs;
    obs.reserve(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (i > 0 && pending[i - 1].obs.date == pending[i].obs.date) {
        const auto [first, second] =
            std::minmax(pending[i - 1].line, pending[i].line);
        throw Error(ErrorCode::kDuplicateDate,
                    fmt::format("line {}: duplicate date {} for {}/{} "
                                "(first seen on line {})",
                                second, pending[i].obs.date.ToString(),
                                key.first, key.second, first));
      }
      obs.push_back(pending[i].obs);
    }
    out.emplace_back(key.first, key.second, std::move(obs));
  }
  return out;
}

std::vector<SpreadSeries> ParsePanel(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParsePanel(in);
}

void WritePanel(std::ostream& out, std::span<const SpreadSeries> series) {
  out << kPanelHeader << '\n';
  for (const auto& s : series) {
    for (const auto& o : s.observations()) {
      out << o.date.ToString() << ',' << s.entity() << ',' << s.tenor() << ','
          << FormatShortest(o.spread_bps) << '\n';
    }
  }
}

std::string WritePanel(std::span<const SpreadSeries> series) {
  std::ostringstream out;
  WritePanel(out, series);
  return out.str();
}

ChangeSeries DailyChanges(const SpreadSeries& series,
                          const ChangeOptions& options) {
  if (options.max_gap_days && *options.max_gap_days < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "max gap days must be positive");
  }
  const auto& obs = series.observations();
  if (obs.size() < 2) {
    throw Error(ErrorCode::kSeriesTooShort,
                fmt::format("{}/{}: series too short ({} observations)",
                            series.entity(), series.tenor(), obs.size()));
  }
  ChangeSeries out;
  out.entity = series.entity();
  out.tenor = series.tenor();
  out.changes.reserve(obs.size() - 1);
  for (std::size_t i = 1; i < obs.size(); ++i) {
    const int gap = DaysBetween(obs[i - 1].date, obs[i].date);
    if (options.max_gap_days && gap > *options.max_gap_days) {
      ++out.dropped_pairs;
      continue;
    }
    double delta = obs[i].spread_bps - obs[i - 1].spread_bps;
    if (options.mode == ChangeMode::kRelative) delta /= obs[i - 1].spread_bps;
    out.changes.push_back({obs[i].date, delta, gap});
  }
  return out;
}

ChangeSeries Slice(const ChangeSeries& series, Date from, Date to) {
  if (from > to) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("slice bounds reversed: {} > {}", from.ToString(),
                            to.ToString()));
  }
  ChangeSeries out;
  out.entity = series.entity;
  out.tenor = series.tenor;
  out.dropped_pairs = series.dropped_pairs;
  const auto first = std::lower_bound(
      series.changes.begin(), series.changes.end(), from,
      [](const Change& c, Date d) { return c.date < d; });
  const auto last = std::upper_bound(
      first, series.changes.end(), to,
      [](Date d, const Change& c) { return d < c.date; });
  out.changes.assign(first, last);
  return out;
}

}  // namespace bentrack
