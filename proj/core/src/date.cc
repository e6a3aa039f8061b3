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

#include "bentrack/date.h"

#include <fmt/format.h>

#include <cctype>

#include "bentrack/error.h"

namespace bentrack {
namespace {

std::optional<unsigned> ParseDigits(std::string_view s) {
  unsigned v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

}  // namespace

Date Date::FromYmd(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("invalid calendar date {:04}-{:02}-{:02}", year,
                            month, day));
  }
  return Date(std::chrono::sys_days{ymd});
}

std::optional<Date> Date::TryParse(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    return std::nullopt;
  }
  const auto y = ParseDigits(text.substr(0, 4));
  const auto m = ParseDigits(text.substr(5, 2));
  const auto d = ParseDigits(text.substr(8, 2));
  if (!y || !m || !d) return std::nullopt;
  const std::chrono::year_month_day ymd{std::chrono::year{static_cast<int>(*y)},
                                        std::chrono::month{*m},
                                        std::chrono::day{*d}};
  if (!ymd.ok()) return std::nullopt;
  return Date(std::chrono::sys_days{ymd});
}

Date Date::Parse(std::string_view text) {
  if (auto d = TryParse(text)) return *d;
  throw Error(ErrorCode::kParse,
              fmt::format("invalid date '{}' (expected YYYY-MM-DD)", text));
}

std::string Date::ToString() const {
  const std::chrono::year_month_day ymd{days_};
  return fmt::format("{:04}-{:02}-{:02}", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()),
                     static_cast<unsigned>(ymd.day()));
}

bool Date::IsWeekend() const {
  const std::chrono::weekday wd{days_};
  return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

Date Date::NextWeekday() const {
  Date next = AddDays(1);
  while (next.IsWeekend()) next = next.AddDays(1);
  return next;
}

int DaysBetween(Date from, Date to) {
  return static_cast<int>((to.days() - from.days()).count());
}

}  // namespace bentrack
