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
// Panel ingestion: spread series per (entity, tenor) and their daily changes.
//
// Panel CSV format:
//
//   date,entity,tenor,spread_bps
//   2010-01-04,Germany,5Y,25.5
//
// The header must be the first line. Blank lines and lines starting with '#'
// are ignored. Dates are YYYY-MM-DD, spreads are plain decimals ('.' as the
// separator, no thousands separators) and must be finite and positive.

#ifndef BENTRACK_SERIES_H_
#define BENTRACK_SERIES_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bentrack/date.h"

namespace bentrack {

inline constexpr std::string_view kPanelHeader = "date,entity,tenor,spread_bps";

struct Observation {
  Date date;
  double spread_bps = 0.0;

  friend bool operator==(const Observation&, const Observation&) = default;
};

// One entity/tenor slice of a panel, strictly increasing in date, with finite
// positive spreads.
class SpreadSeries {
 public:
  // Sorts `observations` by date. Throws Error(kDuplicateDate) on repeated
  // dates and Error(kInvalidSpread) on nonpositive or non-finite spreads.
  SpreadSeries(std::string entity, std::string tenor,
               std::vector<Observation> observations);

  const std::string& entity() const noexcept { return entity_; }
  const std::string& tenor() const noexcept { return tenor_; }
  const std::vector<Observation>& observations() const noexcept {
    return observations_;
  }
  std::size_t size() const noexcept { return observations_.size(); }

  friend bool operator==(const SpreadSeries&, const SpreadSeries&) = default;

 private:
  std::string entity_;
  std::string tenor_;
  std::vector<Observation> observations_;
};

struct Change {
  Date date;
  double value = 0.0;
  // Calendar days since the previous available observation.
  int gap_days = 1;

  friend bool operator==(const Change&, const Change&) = default;
};

struct ChangeSeries {
  std::string entity;
  std::string tenor;
  std::vector<Change> changes;
  // Consecutive pairs skipped because their gap exceeded the cap.
  std::size_t dropped_pairs = 0;

  std::vector<double> Values() const;
  bool empty() const noexcept { return changes.empty(); }
  std::size_t size() const noexcept { return changes.size(); }

  friend bool operator==(const ChangeSeries&, const ChangeSeries&) = default;
};

enum class ChangeMode {
  kAbsolute,  // s(t) - s(t-1), basis points
  kRelative,  // (s(t) - s(t-1)) / s(t-1)
};

struct ChangeOptions {
  ChangeMode mode = ChangeMode::kAbsolute;
  // Pairs further apart than this many calendar days are dropped rather than
  // differenced. nullopt means no cap.
  std::optional<int> max_gap_days;
};

// Parses a panel CSV. Series come back ordered by (entity, tenor). Errors
// carry the offending 1-based line number in their message.
std::vector<SpreadSeries> ParsePanel(std::istream& in);
std::vector<SpreadSeries> ParsePanel(std::string_view text);

// Writes the panel CSV, series in the given order. Spreads are printed in
// shortest round-trip form, so ParsePanel(WritePanel(x)) == x.
void WritePanel(std::ostream& out, std::span<const SpreadSeries> series);
std::string WritePanel(std::span<const SpreadSeries> series);

// Differences of consecutive available observations. Throws
// Error(kSeriesTooShort) with fewer than two observations and
// Error(kInvalidArgument) for a nonpositive gap cap.
ChangeSeries DailyChanges(const SpreadSeries& series,
                          const ChangeOptions& options = {});

// Changes dated within [from, to]. Throws Error(kInvalidArgument) if
// from > to; an empty result is not an error.
ChangeSeries Slice(const ChangeSeries& series, Date from, Date to);

}  // namespace bentrack

#endif  // BENTRACK_SERIES_H_
