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

#ifndef BENTRACK_DATE_H_
#define BENTRACK_DATE_H_

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace bentrack {

// A proleptic Gregorian calendar day.
class Date {
 public:
  constexpr Date() = default;
  constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}

  // Throws Error(kInvalidArgument) for a nonexistent calendar day.
  static Date FromYmd(int year, unsigned month, unsigned day);

  // Strict ISO-8601 "YYYY-MM-DD"; nullopt on any deviation.
  static std::optional<Date> TryParse(std::string_view text);
  // As TryParse, but throws Error(kParse).
  static Date Parse(std::string_view text);

  std::string ToString() const;

  std::chrono::sys_days days() const noexcept { return days_; }
  bool IsWeekend() const;

  Date AddDays(int n) const { return Date(days_ + std::chrono::days(n)); }
  Date NextWeekday() const;

  friend constexpr auto operator<=>(const Date&, const Date&) = default;

 private:
  std::chrono::sys_days days_{};
};

// Signed number of calendar days from `from` to `to`.
int DaysBetween(Date from, Date to);

}  // namespace bentrack

#endif  // BENTRACK_DATE_H_
