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

#include "bentrack/synthetic.h"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "bentrack/benford.h"
#include "bentrack/error.h"

namespace bentrack {
namespace {

// Decorrelates the manipulation stream from the value stream of one seed.
constexpr std::uint64_t kManipulationStream = 0x9E3779B97F4A7C15ULL;

constexpr double kBenfordDecades = 3.0;
constexpr int kUniformMantissaDigits = 6;

// Decimal exponent e with |x| = m * 10^e, m in [1, 10), agreeing with
// FirstSignificantDigit's rounding.
int DecimalExponent(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), std::abs(x),
                                 std::chars_format::scientific, 11);
  const char* e = buf;
  while (e != res.ptr && *e != 'e') ++e;
  int exponent = 0;
  const char* p = e + 1;
  if (p != res.ptr && *p == '+') ++p;
  std::from_chars(p, res.ptr, exponent);
  return exponent;
}

double Rescale(double x, int target_digit) {
  const int exponent = DecimalExponent(x);
  const double scale = std::pow(10.0, exponent);
  const double mantissa = std::abs(x) / scale;
  double frac = mantissa - std::floor(mantissa);
  if (mantissa < 1.0 || mantissa >= 10.0) frac = 0.0;
  const double sign = x < 0.0 ? -1.0 : 1.0;
  double out = sign * (target_digit + frac) * scale;
  if (FirstSignificantDigit(out) != target_digit ||
      DecimalExponent(out) != exponent) {
    // Rounding carried the mantissa across a digit boundary.
    out = sign * (target_digit + 0.5) * scale;
  }
  return out;
}

}  // namespace

double Rng::NextUniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::NextBelow(std::uint64_t bound) {
  if (bound == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  }
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<double> GenBenford(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = std::pow(10.0, kBenfordDecades * rng.NextUniform());
  return out;
}

std::vector<double> GenUniformDigit(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto unit =
      static_cast<std::uint64_t>(std::pow(10, kUniformMantissaDigits));
  std::vector<double> out(n);
  for (auto& v : out) {
    const std::uint64_t digit = 1 + rng.NextBelow(9);
    const std::uint64_t tail = rng.NextBelow(unit);
    const int decade = static_cast<int>(rng.NextBelow(2));
    // digit.tail * 10^decade, computed as an integer over a power of ten so
    // the value is the nearest double to a short decimal.
    const double mantissa_digits = static_cast<double>(digit * unit + tail);
    v = mantissa_digits / std::pow(10.0, kUniformMantissaDigits - decade);
  }
  return out;
}

std::vector<double> GenConstant(std::size_t n, double value) {
  return std::vector<double>(n, value);
}

std::vector<double> InjectManipulation(std::span<const double> values,
                                       double fraction, int target_digit,
                                       std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "manipulation fraction must lie in [0, 1]");
  }
  if (target_digit < 1 || target_digit > kNumDigits) {
    throw Error(ErrorCode::kInvalidArgument,
                "target digit must lie in 1..9");
  }
  std::vector<double> out(values.begin(), values.end());
  const auto count = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(values.size())));
  if (count == 0) return out;

  // Partial Fisher-Yates: the first `count` slots become a uniform random
  // subset of indices.
  std::vector<std::size_t> index(values.size());
  std::iota(index.begin(), index.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.NextBelow(index.size() - i);
    std::swap(index[i], index[j]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    double& v = out[index[i]];
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteValue, "non-finite value");
    }
    if (v != 0.0) v = Rescale(v, target_digit);
  }
  return out;
}

std::string_view SynthKindName(SynthKind kind) {
  switch (kind) {
    case SynthKind::kBenford:
      return "benford";
    case SynthKind::kUniformDigit:
      return "uniform_digit";
    case SynthKind::kConstant:
      return "constant";
  }
  return "unknown";
}

std::optional<SynthKind> ParseSynthKind(std::string_view name) {
  for (SynthKind k : {SynthKind::kBenford, SynthKind::kUniformDigit,
                      SynthKind::kConstant}) {
    if (SynthKindName(k) == name) return k;
  }
  return std::nullopt;
}

void SynthSpec::Validate() const {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sample size must be positive");
  }
  if (manipulation) {
    if (!(manipulation->fraction >= 0.0 && manipulation->fraction <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "manipulation fraction must lie in [0, 1]");
    }
    if (manipulation->target_digit < 1 ||
        manipulation->target_digit > kNumDigits) {
      throw Error(ErrorCode::kInvalidArgument,
                  "target digit must lie in 1..9");
    }
  }
  if (!std::isfinite(constant_value) || constant_value <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "constant value must be finite and positive");
  }
}

std::vector<double> Generate(const SynthSpec& spec) {
  spec.Validate();
  std::vector<double> values;
  switch (spec.kind) {
    case SynthKind::kBenford:
      values = GenBenford(spec.n, spec.seed);
      break;
    case SynthKind::kUniformDigit:
      values = GenUniformDigit(spec.n, spec.seed);
      break;
    case SynthKind::kConstant:
      values = GenConstant(spec.n, spec.constant_value);
      break;
  }
  if (spec.manipulation) {
    values = InjectManipulation(values, spec.manipulation->fraction,
                                spec.manipulation->target_digit,
                                spec.seed ^ kManipulationStream);
  }
  return values;
}

SpreadSeries BuildSpreadSeries(std::span<const double> changes,
                               const PanelLayout& layout) {
  if (!std::isfinite(layout.initial_spread_bps) ||
      layout.initial_spread_bps <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "initial spread must be finite and positive");
  }
  std::vector<Observation> obs;
  obs.reserve(changes.size() + 1);
  Date date = layout.start.IsWeekend() ? layout.start.NextWeekday()
                                       : layout.start;
  double spread = layout.initial_spread_bps;
  obs.push_back({date, spread});
  for (std::size_t i = 0; i < changes.size(); ++i) {
    const double magnitude = changes[i];
    if (!std::isfinite(magnitude) || magnitude < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("change {} must be finite and nonnegative", i));
    }
    const bool down = (i % 2 == 1) && spread - magnitude > 0.0;
    spread = down ? spread - magnitude : spread + magnitude;
    date = date.NextWeekday();
    obs.push_back({date, spread});
  }
  return SpreadSeries(layout.entity, layout.tenor, std::move(obs));
}

}  // namespace bentrack
