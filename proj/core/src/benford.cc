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

#include "bentrack/benford.h"

#include <charconv>
#include <cmath>
#include <string>

#include "bentrack/error.h"

namespace bentrack {
namespace {

void CheckDigit(int digit) {
  if (digit < 1 || digit > kNumDigits) {
    throw Error(ErrorCode::kInvalidArgument,
                "digit out of range 1..9: " + std::to_string(digit));
  }
}

// Rounding applied inside the guard band below each power of ten.
constexpr int kSignificantDigits = 12;
constexpr double kGuardLow = 9.9999999999;
constexpr double kBoundaryBand = 1e-9;
// Enough digits to print any double exactly.
constexpr int kExactDigits = 800;

int LeadingDigit(double a, int precision) {
  char buf[kExactDigits + 16];
  std::to_chars(buf, buf + sizeof(buf), a, std::chars_format::scientific,
                precision);
  return buf[0] - '0';
}

}  // namespace

FrequencyVector FrequencyVector::FromValues(const DigitValues& values) {
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "frequency entries must lie in [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::kInvalidArgument,
                "frequency entries must sum to 1");
  }
  return FrequencyVector(values);
}

double FrequencyVector::at(int digit) const {
  CheckDigit(digit);
  return values_[digit - 1];
}

const FrequencyVector& BenfordPmf() {
  static const FrequencyVector pmf = [] {
    DigitValues p{};
    for (int d = 1; d <= kNumDigits; ++d) {
      p[d - 1] = std::log10(1.0 + 1.0 / d);
    }
    return FrequencyVector::FromValues(p);
  }();
  return pmf;
}

DigitHistogram DigitHistogram::FromCounts(const DigitCounts& counts,
                                          std::uint64_t excluded) {
  DigitHistogram h;
  h.counts_ = counts;
  h.excluded_ = excluded;
  for (auto c : counts) h.total_ += c;
  return h;
}

void DigitHistogram::Add(int digit) {
  CheckDigit(digit);
  ++counts_[digit - 1];
  ++total_;
}

std::uint64_t DigitHistogram::count(int digit) const {
  CheckDigit(digit);
  return counts_[digit - 1];
}

DigitHistogram& DigitHistogram::operator+=(const DigitHistogram& other) {
  for (int i = 0; i < kNumDigits; ++i) counts_[i] += other.counts_[i];
  excluded_ += other.excluded_;
  total_ += other.total_;
  return *this;
}

std::optional<int> FirstSignificantDigit(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::kNonFiniteValue, "non-finite value");
  }
  if (x == 0.0) return std::nullopt;
  const double a = std::abs(x);
  int e = static_cast<int>(std::floor(std::log10(a)));
  double m = a / std::pow(10.0, e);
  if (m < 1.0) {
    m = a / std::pow(10.0, --e);
  } else if (m >= 10.0) {
    m = a / std::pow(10.0, ++e);
  }
  if (!(m >= 1.0 && m < 10.0)) {
    // pow() under- or overflows near the ends of the double range.
    return LeadingDigit(a, kExactDigits);
  }
  if (m >= kGuardLow) {
    return LeadingDigit(a, kSignificantDigits - 1);
  }
  const double frac = m - std::floor(m);
  if (frac < kBoundaryBand || frac > 1.0 - kBoundaryBand) {
    // The quotient is not trustworthy this close to a digit boundary.
    return LeadingDigit(a, kExactDigits);
  }
  return static_cast<int>(m);
}

DigitHistogram ComputeDigitHistogram(std::span<const double> values,
                                     NonFinitePolicy policy) {
  DigitHistogram h;
  for (double v : values) {
    if (!std::isfinite(v)) {
      if (policy == NonFinitePolicy::kExclude) {
        h.AddExcluded();
        continue;
      }
      throw Error(ErrorCode::kNonFiniteValue, "non-finite value");
    }
    if (auto d = FirstSignificantDigit(v)) {
      h.Add(*d);
    } else {
      h.AddExcluded();
    }
  }
  return h;
}

FrequencyVector ObservedFrequencies(const DigitHistogram& histogram) {
  if (histogram.total() == 0) {
    throw Error(ErrorCode::kEmptySample, "empty sample");
  }
  DigitValues f{};
  const double total = static_cast<double>(histogram.total());
  for (int i = 0; i < kNumDigits; ++i) {
    f[i] = static_cast<double>(histogram.counts()[i]) / total;
  }
  return FrequencyVector::FromValues(f);
}

}  // namespace bentrack
