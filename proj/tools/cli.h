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
// The bentrack command line: `analyze`, `track` and `synth`.
//
// Exit status: 0 on success, 1 for usage or configuration errors (reported
// before any input is read), 2 for data errors such as an unparsable panel,
// an empty period or a series too short to window.

#ifndef BENTRACK_TOOLS_CLI_H_
#define BENTRACK_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bentrack/conformity.h"
#include "bentrack/periods.h"
#include "bentrack/report.h"
#include "bentrack/series.h"
#include "bentrack/synthetic.h"

namespace bentrack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

enum class Command { kAnalyze, kTrack, kSynth };

struct RunConfig {
  Command command = Command::kAnalyze;

  // analyze / track. "-" reads standard input.
  std::string input;
  std::vector<std::string> entities;
  std::vector<std::string> tenors;
  // Named period labels; analyze defaults to all five when neither these nor
  // a custom range are given.
  std::vector<std::string> periods;
  std::optional<std::string> from;
  std::optional<std::string> to;
  double alpha = kDefaultAlpha;
  WindowSpec window;
  ChangeMode change_mode = ChangeMode::kAbsolute;
  std::optional<int> max_gap_days;
  ReportFormat format = ReportFormat::kText;

  // synth
  SynthSpec synth;
  std::optional<std::uint64_t> seed;
  PanelLayout layout;

  // Empty writes to standard output.
  std::string out_path;

  // Throws Error(kInvalidArgument) describing the first invalid setting.
  void Validate() const;
};

// Runs a fully parsed configuration. Diagnostics go to `err`.
int Run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

// Parses `args` (args[0] is the program name) and runs the command.
int Main(const std::vector<std::string>& args, std::istream& in,
         std::ostream& out, std::ostream& err);

}  // namespace bentrack::cli

#endif  // BENTRACK_TOOLS_CLI_H_
