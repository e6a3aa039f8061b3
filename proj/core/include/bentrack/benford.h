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
// Benford reference distribution and first-significant-digit histograms.

#ifndef BENTRACK_BENFORD_H_
#define BENTRACK_BENFORD_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace bentrack {

inline constexpr int kNumDigits = 9;

using DigitCounts = std::array<std::uint64_t, kNumDigits>;
using DigitValues = std::array<double, kNumDigits>;

// A probability vector over the first digits 1..9.
//
// Entries lie in [0, 1] and sum to 1 within 1e-12. Accessors take the digit
// itself (1-based); `values()` exposes the underlying 0-based array.
class FrequencyVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws Error(kInvalidArgument) if the entries are not a valid
  // probability vector.
  static FrequencyVector FromValues(const DigitValues& values);

  double at(int digit) const;
  const DigitValues& values() const noexcept { return values_; }

  friend bool operator==(const FrequencyVector&,
                         const FrequencyVector&) = default;

 private:
  explicit FrequencyVector(const DigitValues& values) : values_(values) {}

  DigitValues values_{};
};

// P(d) = log10(1 + 1/d) for d = 1..9.
const FrequencyVector& BenfordPmf();

// Counts of first significant digits, plus values that have none.
class DigitHistogram {
 public:
  DigitHistogram() = default;

  static DigitHistogram FromCounts(const DigitCounts& counts,
                                   std::uint64_t excluded = 0);

  // `digit` must be in 1..9.
  void Add(int digit);
  void AddExcluded() { ++excluded_; }

  std::uint64_t count(int digit) const;
  const DigitCounts& counts() const noexcept { return counts_; }
  std::uint64_t excluded() const noexcept { return excluded_; }
  std::uint64_t total() const noexcept { return total_; }

  DigitHistogram& operator+=(const DigitHistogram& other);

  friend bool operator==(const DigitHistogram&,
                         const DigitHistogram&) = default;

 private:
  DigitCounts counts_{};
  std::uint64_t excluded_ = 0;
  std::uint64_t total_ = 0;
};

// Leading nonzero decimal digit of |x|, or nullopt for x == 0.
//
// The digit is that of the exact binary value, so 0.3 (stored as
// 0.2999...) reports 2. Mantissas in [9.9999999999, 10) are rounded to 12
// significant digits first, which sends 999.9999999999 to 1.
// Throws Error(kNonFiniteValue) for NaN and infinities.
std::optional<int> FirstSignificantDigit(double x);

enum class NonFinitePolicy {
  kReject,   // throw Error(kNonFiniteValue)
  kExclude,  // count in DigitHistogram::excluded()
};

DigitHistogram ComputeDigitHistogram(
    std::span<const double> values,
    NonFinitePolicy policy = NonFinitePolicy::kReject);

// counts[d] / total. Throws Error(kEmptySample) when total() == 0.
FrequencyVector ObservedFrequencies(const DigitHistogram& histogram);

}  // namespace bentrack

#endif  // BENTRACK_BENFORD_H_
