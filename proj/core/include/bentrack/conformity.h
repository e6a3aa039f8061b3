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
// Goodness-of-fit statistics of an observed first-digit distribution against
// Benford's law: Pearson chi-square (8 degrees of freedom) with its upper-tail
// p-value, Chebyshev (L-infinity) distance and Kullback-Leibler divergence.

#ifndef BENTRACK_CONFORMITY_H_
#define BENTRACK_CONFORMITY_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "bentrack/benford.h"

namespace bentrack {

// Degrees of freedom of the first-digit chi-square test (9 categories).
inline constexpr int kFirstDigitDof = kNumDigits - 1;

inline constexpr double kDefaultAlpha = 0.05;

enum class Verdict { kAccept, kReject };

std::string_view VerdictName(Verdict v);

struct ConformityStats {
  double chi_square = 0.0;
  double p_value = 1.0;
  Verdict verdict = Verdict::kAccept;
  double chebyshev = 0.0;
  double kl_divergence = 0.0;
  std::uint64_t sample_size = 0;
  // Some expected count N * P(d) is below 5; the chi-square approximation is
  // unreliable, but the statistics are still reported.
  bool small_sample = false;

  friend bool operator==(const ConformityStats&,
                         const ConformityStats&) = default;
};

// Sum over digits of (observed - expected)^2 / expected with real-valued
// expected counts total * P(d). Throws Error(kEmptySample) on an empty
// histogram.
double ChiSquareStatistic(const DigitHistogram& histogram);

// Same statistic for real-valued observed counts (their sum is the sample
// size). Throws Error(kEmptySample) if the counts sum to zero and
// Error(kInvalidArgument) on negative or non-finite entries.
double ChiSquareStatistic(std::span<const double, kNumDigits> observed);

// Q(df/2, stat/2): probability that a chi-square(df) variate exceeds `stat`.
// Throws Error(kInvalidArgument) for stat < 0, NaN, or df < 1.
double ChiSquarePValue(double stat, int df = kFirstDigitDof);

// The statistic value whose upper-tail probability is `alpha`, obtained by
// inverting ChiSquarePValue. For alpha = 0.05, df = 8 this is 15.507...
double ChiSquareCriticalValue(double alpha, int df = kFirstDigitDof);

// max_d |observed(d) - reference(d)|.
double ChebyshevDistance(const FrequencyVector& observed,
                         const FrequencyVector& reference);

// sum_d observed(d) * ln(observed(d) / reference(d)), with 0 * ln 0 = 0.
// Throws Error(kReferenceSupport) if any reference entry is zero.
double KlDivergence(const FrequencyVector& observed,
                    const FrequencyVector& reference);

// Smallest sample size for which every expected Benford count is at least 5.
std::uint64_t MinReliableSampleSize();

// All statistics for one sample against Benford's law. The verdict is accept
// iff p_value >= alpha. Throws Error(kEmptySample) on an empty histogram and
// Error(kInvalidArgument) for alpha outside (0, 1).
ConformityStats Conformity(const DigitHistogram& histogram,
                           double alpha = kDefaultAlpha);

}  // namespace bentrack

#endif  // BENTRACK_CONFORMITY_H_
