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

#include "cli.h"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bentrack/error.h"

namespace bentrack::cli {
namespace {

std::string_view CommandName(Command c) {
  switch (c) {
    case Command::kAnalyze:
      return "analyze";
    case Command::kTrack:
      return "track";
    case Command::kSynth:
      return "synth";
  }
  return "unknown";
}

std::string_view ChangeModeName(ChangeMode m) {
  return m == ChangeMode::kAbsolute ? "absolute" : "relative";
}

std::string FormatDouble(double v) { return fmt::format("{}", v); }

void Usage(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

Date ParseDateFlag(std::string_view flag, const std::string& text) {
  if (auto d = Date::TryParse(text)) return *d;
  Usage(fmt::format("{}: invalid date '{}' (expected YYYY-MM-DD)", flag, text));
  return {};
}

// Periods requested by the configuration, in report order.
std::vector<PeriodSpec> ResolvePeriods(const RunConfig& c) {
  std::vector<PeriodSpec> out;
  for (const auto& label : c.periods) {
    auto p = FindNamedPeriod(label);
    if (!p) Usage(fmt::format("unknown period '{}'", label));
    out.push_back(*p);
  }
  if (c.from || c.to) {
    out.push_back(PeriodSpec::Custom("custom", ParseDateFlag("--from", *c.from),
                                     ParseDateFlag("--to", *c.to)));
  }
  if (out.empty()) out = NamedPeriods();
  return out;
}

std::vector<SpreadSeries> ReadPanel(const std::string& path, std::istream& in) {
  if (path == "-") return ParsePanel(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kParse, fmt::format("cannot open input '{}'", path));
  }
  return ParsePanel(file);
}

bool Selected(const std::vector<std::string>& filter, const std::string& v) {
  return filter.empty() ||
         std::find(filter.begin(), filter.end(), v) != filter.end();
}

std::vector<ChangeSeries> LoadChanges(const RunConfig& c, std::istream& in) {
  const std::vector<SpreadSeries> panel = ReadPanel(c.input, in);
  ChangeOptions options;
  options.mode = c.change_mode;
  options.max_gap_days = c.max_gap_days;
  std::vector<ChangeSeries> out;
  for (const auto& s : panel) {
    if (!Selected(c.entities, s.entity()) || !Selected(c.tenors, s.tenor())) {
      continue;
    }
    out.push_back(DailyChanges(s, options));
  }
  if (out.empty()) {
    throw Error(ErrorCode::kSeriesTooShort,
                "no series in the input match the entity/tenor filters");
  }
  return out;
}

ReportMeta BaseMeta(const RunConfig& c) {
  ReportMeta meta;
  meta.version = std::string(Version());
  meta.command = std::string(CommandName(c.command));
  meta.parameters["input"] = c.input;
  meta.parameters["alpha"] = FormatDouble(c.alpha);
  meta.parameters["change_mode"] = std::string(ChangeModeName(c.change_mode));
  meta.parameters["max_gap_days"] =
      c.max_gap_days ? std::to_string(*c.max_gap_days) : "unlimited";
  meta.parameters["entities"] = fmt::format("{}", fmt::join(c.entities, ";"));
  meta.parameters["tenors"] = fmt::format("{}", fmt::join(c.tenors, ";"));
  return meta;
}

std::string RunAnalyze(const RunConfig& c, std::istream& in,
                       std::ostream& err) {
  const std::vector<PeriodSpec> periods = ResolvePeriods(c);
  const std::vector<ChangeSeries> series = LoadChanges(c, in);
  PeriodReport report = BuildPeriodReport(series, periods, {}, c.alpha);
  report.meta = BaseMeta(c);
  std::vector<std::string> labels;
  for (const auto& p : periods) {
    labels.push_back(fmt::format("{}:{}:{}", p.label, p.from.ToString(),
                                 p.to.ToString()));
  }
  report.meta.parameters["periods"] = fmt::format("{}", fmt::join(labels, ";"));
  for (const auto& row : report.rows) {
    if (!row.result) {
      err << fmt::format("warning: {}/{} period '{}' has no usable changes\n",
                         row.entity, row.tenor, row.period);
    }
  }
  return Emit(report, c.format);
}

std::string RunTrack(const RunConfig& c, std::istream& in) {
  std::vector<ChangeSeries> series = LoadChanges(c, in);
  if (c.from || c.to) {
    const Date from = ParseDateFlag("--from", *c.from);
    const Date to = ParseDateFlag("--to", *c.to);
    for (auto& s : series) s = Slice(s, from, to);
  }
  TrackReport report = BuildTrackReport(series, c.window, c.alpha);
  report.meta = BaseMeta(c);
  report.meta.parameters["window_len"] = std::to_string(c.window.length);
  report.meta.parameters["step"] = std::to_string(c.window.step);
  report.meta.parameters["min_fill"] = FormatDouble(c.window.min_fill);
  if (c.from) report.meta.parameters["from"] = *c.from;
  if (c.to) report.meta.parameters["to"] = *c.to;
  return Emit(report, c.format);
}

std::string RunSynth(const RunConfig& c) {
  SynthSpec spec = c.synth;
  spec.seed = *c.seed;
  const std::vector<double> values = Generate(spec);
  const SpreadSeries series = BuildSpreadSeries(values, c.layout);
  std::ostringstream out;
  out << kPanelHeader << '\n';
  std::string manipulation = "none";
  if (spec.manipulation) {
    manipulation = fmt::format("fraction={} target_digit={}",
                               spec.manipulation->fraction,
                               spec.manipulation->target_digit);
  }
  out << fmt::format("# bentrack {} synth kind={} n={} seed={} "
                     "manipulation={}\n",
                     Version(), SynthKindName(spec.kind), spec.n, spec.seed,
                     manipulation);
  const std::string body = WritePanel(std::span(&series, 1));
  out << body.substr(body.find('\n') + 1);
  return out.str();
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("cannot open output '{}'", path));
  }
  file << text;
}

}  // namespace

void RunConfig::Validate() const {
  if (command == Command::kSynth) {
    if (!seed) Usage("synth requires --seed");
    synth.Validate();
    return;
  }
  if (input.empty()) Usage("--input is required");
  if (!(alpha > 0.0 && alpha < 1.0)) Usage("--alpha must lie in (0, 1)");
  if (max_gap_days && *max_gap_days < 1) {
    Usage("--max-gap-days must be positive");
  }
  if (from.has_value() != to.has_value()) {
    Usage("--from and --to must be given together");
  }
  if (from) {
    const Date f = ParseDateFlag("--from", *from);
    const Date t = ParseDateFlag("--to", *to);
    if (f > t) Usage("--from must not be after --to");
  }
  if (command == Command::kAnalyze) {
    for (const auto& label : periods) {
      if (!FindNamedPeriod(label)) {
        Usage(fmt::format("unknown period '{}'", label));
      }
    }
  } else {
    if (!periods.empty()) Usage("--period applies to analyze only");
    window.Validate();
  }
}

int Run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    config.Validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    std::string text;
    switch (config.command) {
      case Command::kAnalyze:
        text = RunAnalyze(config, in, err);
        break;
      case Command::kTrack:
        text = RunTrack(config, in);
        break;
      case Command::kSynth:
        text = RunSynth(config);
        break;
    }
    WriteOutput(config.out_path, text, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_data_error() ? kExitData : kExitUsage;
  }
}

int Main(const std::vector<std::string>& args, std::istream& in,
         std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string change_mode = "absolute";
  std::string format = "text";
  std::string kind = "benford";
  std::string start = config.layout.start.ToString();
  std::optional<double> fraction;
  int target_digit = 1;

  CLI::App app{"Benford first-digit conformity analysis of time-series panels",
               "bentrack"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", std::string(Version()));

  auto add_input_options = [&](CLI::App* sub) {
    sub->add_option("--input", config.input,
                    "Panel CSV (date,entity,tenor,spread_bps); '-' for stdin")
        ->required();
    sub->add_option("--entity", config.entities,
                    "Only analyze these entities (repeatable; default all)");
    sub->add_option("--tenor", config.tenors,
                    "Only analyze these tenors (repeatable; default all)");
    sub->add_option("--from", config.from,
                    "Start date YYYY-MM-DD, inclusive (with --to)");
    sub->add_option("--to", config.to,
                    "End date YYYY-MM-DD, inclusive (with --from)");
    sub->add_option("--alpha", config.alpha, "Significance level in (0, 1)");
    sub->add_option("--change-mode", change_mode,
                    "Daily change definition: absolute (bps) or relative")
        ->check(CLI::IsMember({"absolute", "relative"}));
    sub->add_option("--max-gap-days", config.max_gap_days,
                    "Drop changes spanning more calendar days than this "
                    "(default: unlimited)");
    sub->add_option("--format", format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", config.out_path,
                    "Write the report here instead of stdout");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Chi-square conformity per entity, tenor and period");
  add_input_options(analyze);
  analyze->add_option("--period", config.periods,
                      "Named period: full, pre_crisis, crisis, post_crisis, "
                      "post2010 (repeatable; default all five unless "
                      "--from/--to is given)");

  CLI::App* track = app.add_subcommand(
      "track", "Rolling-window conformity track with linear trends");
  add_input_options(track);
  track->add_option("--window-len", config.window.length,
                    "Window length in observations");
  track->add_option("--step", config.window.step,
                    "Offset between window starts in observations");
  track->add_option("--min-fill", config.window.min_fill,
                    "Keep a trailing partial window holding at least this "
                    "fraction of --window-len");

  CLI::App* synth = app.add_subcommand(
      "synth", "Write a synthetic single-series panel CSV");
  synth->add_option("--kind", kind, "benford, uniform_digit or constant")
      ->check(CLI::IsMember({"benford", "uniform_digit", "constant"}));
  synth->add_option("--n", config.synth.n, "Number of daily changes")
      ->required();
  synth->add_option("--seed", config.seed, "Random seed (required)")
      ->required();
  synth->add_option("--manipulate-fraction", fraction,
                    "Fraction of changes rescaled to --target-digit "
                    "(default: no manipulation)");
  synth->add_option("--target-digit", target_digit,
                    "First digit forced on manipulated changes");
  synth->add_option("--constant-value", config.synth.constant_value,
                    "Change magnitude for --kind constant");
  synth->add_option("--entity", config.layout.entity, "Entity name");
  synth->add_option("--tenor", config.layout.tenor, "Tenor label");
  synth->add_option("--start", start,
                    "First observation date (rolled to a weekday)");
  synth->add_option("--initial-spread", config.layout.initial_spread_bps,
                    "First spread level in bps");
  synth->add_option("--out", config.out_path,
                    "Write the panel here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      config.command = Command::kAnalyze;
    } else if (track->parsed()) {
      config.command = Command::kTrack;
    } else {
      config.command = Command::kSynth;
      config.synth.kind = *ParseSynthKind(kind);
      if (fraction) config.synth.manipulation = Manipulation{*fraction,
                                                             target_digit};
      config.layout.start = ParseDateFlag("--start", start);
    }
    config.change_mode = change_mode == "relative" ? ChangeMode::kRelative
                                                   : ChangeMode::kAbsolute;
    config.format = *ParseReportFormat(format);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return Run(config, in, out, err);
}

}  // namespace bentrack::cli
