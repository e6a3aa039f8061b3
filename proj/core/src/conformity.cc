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

#include "bentrack/conformity.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bentrack/error.h"

namespace bentrack {
namespace {

constexpr double kGammaEpsilon = 1e-14;
constexpr int kGammaMaxIterations = 10000;
constexpr double kMinExpectedCount = 5.0;

// Regularized lower incomplete gamma P(a, x) by its power series; converges
// quickly for x < a + 1.
double GammaPSeries(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kGammaMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kGammaEpsilon) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by its continued fraction
// (modified Lentz); used for x >= a + 1.
double GammaQContinuedFraction(double a, double x) {
  constexpr double kTiny = std::numeric_limits<double>::min() / kGammaEpsilon;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kGammaMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kGammaEpsilon) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double RegularizedGammaQ(double a, double x) {
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - GammaPSeries(a, x);
  return GammaQContinuedFraction(a, x);
}

void CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "significance level must lie in (0, 1)");
  }
}

}  // namespace

std::string_view VerdictName(Verdict v) {
  return v == Verdict::kAccept ? "accept" : "reject";
}

double ChiSquareStatistic(std::span<const double, kNumDigits> observed) {
  double total = 0.0;
  for (double o : observed) {
    if (!std::isfinite(o) || o < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "observed counts must be finite and nonnegative");
    }
    total += o;
  }
  if (total == 0.0) throw Error(ErrorCode::kEmptySample, "empty sample");

  const auto& pmf = BenfordPmf().values();
  double stat = 0.0;
  for (int i = 0; i < kNumDigits; ++i) {
    const double expected = total * pmf[i];
    const double diff = observed[i] - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

double ChiSquareStatistic(const DigitHistogram& histogram) {
  if (histogram.total() == 0) {
    throw Error(ErrorCode::kEmptySample, "empty sample");
  }
  DigitValues observed{};
  for (int i = 0; i < kNumDigits; ++i) {
    observed[i] = static_cast<double>(histogram.counts()[i]);
  }
  return ChiSquareStatistic(std::span<const double, kNumDigits>(observed));
}

double ChiSquarePValue(double stat, int df) {
  if (std::isnan(stat) || stat < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "chi-square statistic must be nonnegative");
  }
  if (df < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "degrees of freedom must be positive");
  }
  if (std::isinf(stat)) return 0.0;
  return std::clamp(RegularizedGammaQ(0.5 * df, 0.5 * stat), 0.0, 1.0);
}

double ChiSquareCriticalValue(double alpha, int df) {
  CheckAlpha(alpha);
  double lo = 0.0;
  double hi = std::max(1.0, 2.0 * df);
  while (ChiSquarePValue(hi, df) > alpha) {
    lo = hi;
    hi *= 2.0;
  }
  // The p-value is strictly decreasing in the statistic, so bisection on
  // [lo, hi] brackets the root throughout.
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (ChiSquarePValue(mid, df) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double ChebyshevDistance(const FrequencyVector& observed,
                         const FrequencyVector& reference) {
  double d = 0.0;
  for (int i = 0; i < kNumDigits; ++i) {
    d = std::max(d, std::abs(observed.values()[i] - reference.values()[i]));
  }
  return d;
}

double KlDivergence(const FrequencyVector& observed,
                    const FrequencyVector& reference) {
  double kl = 0.0;
  for (int i = 0; i < kNumDigits; ++i) {
    const double q = reference.values()[i];
    if (q <= 0.0) {
      throw Error(ErrorCode::kReferenceSupport,
                  "reference support violation");
    }
    const double p = observed.values()[i];
    if (p > 0.0) kl += p * std::log(p / q);
  }
  // Rounding can leave a tiny negative sum when observed == reference.
  return std::max(kl, 0.0);
}

std::uint64_t MinReliableSampleSize() {
  static const std::uint64_t n = [] {
    const auto& pmf = BenfordPmf().values();
    const double smallest = *std::min_element(pmf.begin(), pmf.end());
    auto candidate =
        static_cast<std::uint64_t>(std::floor(kMinExpectedCount / smallest));
    while (static_cast<double>(candidate) * smallest < kMinExpectedCount) {
      ++candidate;
    }
    return candidate;
  }();
  return n;
}

ConformityStats Conformity(const DigitHistogram& histogram, double alpha) {
  CheckAlpha(alpha);
  const FrequencyVector observed = ObservedFrequencies(histogram);
  const FrequencyVector& benford = BenfordPmf();

  ConformityStats s;
  s.chi_square = ChiSquareStatistic(histogram);
  s.p_value = ChiSquarePValue(s.chi_square);
  s.verdict = s.p_value >= alpha ? Verdict::kAccept : Verdict::kReject;
  s.chebyshev = ChebyshevDistance(observed, benford);
  s.kl_divergence = KlDivergence(observed, benford);
  s.sample_size = histogram.total();
  s.small_sample = s.sample_size < MinReliableSampleSize();
  return s;
}

}  // namespace bentrack
