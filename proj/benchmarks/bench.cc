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


#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "bentrack/benford.h"
#include "bentrack/conformity.h"
#include "bentrack/periods.h"
#include "bentrack/report.h"
#include "bentrack/series.h"
#include "bentrack/synthetic.h"

namespace bentrack {
namespace {

void BM_DigitHistogram(benchmark::State& state) {
  const auto values = GenBenford(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeDigitHistogram(values));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DigitHistogram)->Arg(1750)->Arg(100000);

void BM_Conformity(benchmark::State& state) {
  const auto h = ComputeDigitHistogram(GenBenford(1750, 2));
  for (auto _ : state) benchmark::DoNotOptimize(Conformity(h));
}
BENCHMARK(BM_Conformity);

void BM_Track(benchmark::State& state) {
  const ChangeSeries c = DailyChanges(BuildSpreadSeries(GenBenford(1749, 3)));
  for (auto _ : state) {
    const auto windows = Track(c, WindowSpec{});
    benchmark::DoNotOptimize(FitTrend(windows, TrendMetric::kChiSquare));
  }
}
BENCHMARK(BM_Track);

void BM_ParsePanel(benchmark::State& state) {
  std::vector<SpreadSeries> panel;
  for (int e = 0; e < 26; ++e) {
    PanelLayout layout;
    layout.entity = std::string(1, static_cast<char>('A' + e));
    panel.push_back(BuildSpreadSeries(GenBenford(1749, 10 + e), layout));
  }
  const std::string text = WritePanel(panel);
  for (auto _ : state) benchmark::DoNotOptimize(ParsePanel(text));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParsePanel);

}  // namespace
}  // namespace bentrack

BENCHMARK_MAIN();
