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
// Seeded generators of Benford-conforming, non-conforming and manipulated
// samples.
//
// All randomness comes from Rng, a 64-bit Mersenne Twister (std::mt19937_64,
// whose output sequence is fixed by the C++ standard) with hand-written
// conversions to doubles and bounded integers. Standard library distributions
// are not used because their algorithms are implementation-defined, so the
// same seed yields bit-identical samples with any conforming toolchain.

#ifndef BENTRACK_SYNTHETIC_H_
#define BENTRACK_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bentrack/date.h"
#include "bentrack/series.h"

namespace bentrack {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double NextUniform();
  // Uniform on {0, ..., bound - 1}; bound must be positive. Unbiased.
  std::uint64_t NextBelow(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Values 10^U, U uniform on [0, 3): first digits follow Benford's law
// exactly in expectation.
std::vector<double> GenBenford(std::size_t n, std::uint64_t seed);

// First digit uniform on 1..9. Each value is a seven-significant-digit
// decimal m * 10^k with m in [d, d + 1) and k in {0, 1}.
std::vector<double> GenUniformDigit(std::size_t n, std::uint64_t seed);

std::vector<double> GenConstant(std::size_t n, double value = 1.0);

// Rescales a seeded random subset of round(fraction * size) values so their
// first digit becomes `target_digit`: the mantissa moves to
// [target_digit, target_digit + 1) keeping its fractional part, while sign
// and decimal exponent are preserved. Zeros in the subset are left alone.
// Throws Error(kInvalidArgument) for fraction outside [0, 1] or a digit
// outside 1..9, and Error(kNonFiniteValue) if a selected value is not finite.
std::vector<double> InjectManipulation(std::span<const double> values,
                                       double fraction, int target_digit,
                                       std::uint64_t seed);

enum class SynthKind { kBenford, kUniformDigit, kConstant };

std::string_view SynthKindName(SynthKind kind);
std::optional<SynthKind> ParseSynthKind(std::string_view name);

struct Manipulation {
  double fraction = 0.0;
  int target_digit = 1;
};

struct SynthSpec {
  SynthKind kind = SynthKind::kBenford;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::optional<Manipulation> manipulation;
  double constant_value = 1.0;

  // Throws Error(kInvalidArgument) for n == 0, an invalid manipulation, or
  // a nonpositive/non-finite constant.
  void Validate() const;
};

// Sample described by `spec`. The manipulation subset is drawn from a stream
// derived from spec.seed, independent of the one that generated the values.
std::vector<double> Generate(const SynthSpec& spec);

struct PanelLayout {
  std::string entity = "SYNTH";
  std::string tenor = "5Y";
  Date start = Date::FromYmd(2008, 8, 8);
  double initial_spread_bps = 100.0;
};

// Spread path whose consecutive differences have the magnitudes in `changes`
// (which must be finite and nonnegative), dated on consecutive weekdays from
// layout.start (rolled forward off a weekend). Moves alternate up and down,
// except that a move which would take the spread to zero or below goes up
// instead. The result has changes.size() + 1 observations.
SpreadSeries BuildSpreadSeries(std::span<const double> changes,
                               const PanelLayout& layout = {});

}  // namespace bentrack

#endif  // BENTRACK_SYNTHETIC_H_
