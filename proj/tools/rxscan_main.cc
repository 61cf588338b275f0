//
// Copyright 2026 The rxscan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// rxscan: static detection of exponential backtracking in regular
// expressions.
//
//   rxscan analyze patterns.txt --format json
//   rxscan analyze rules.rules --snort
//   rxscan simulate '(a*)*$' 'aaaaaaaaaaaaaaaab'
//   rxscan dump '(a|b)*c'

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rxscan/attack.h"
#include "rxscan/corpus.h"
#include "rxscan/parser.h"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitVulnerable = 1;
constexpr int kExitUsage = 2;

struct AnalyzeOptions {
  std::string file;
  std::string format = "text";
  bool snort = false;
  bool no_verify = false;
  bool syntax = false;
  bool full_match = false;
  bool no_timing = false;
  unsigned threads = 0;
};

int RunAnalyze(const AnalyzeOptions& opts, rxscan::AnalysisConfig config) {
  if (opts.syntax) {
    std::cout << rxscan::SyntaxReportToJson() << "\n";
    return kExitClean;
  }
  if (opts.file.empty()) {
    std::cerr << "rxscan: analyze needs a file (or - for stdin)\n";
    return kExitUsage;
  }
  config.verify = !opts.no_verify;
  if (opts.full_match) config.mode = rxscan::MatchMode::kFull;
  if (std::string bad = config.Validate(); !bad.empty()) {
    std::cerr << "rxscan: " << bad << "\n";
    return kExitUsage;
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  std::string source = "<stdin>";
  if (opts.file != "-") {
    file.open(opts.file, std::ios::binary);
    if (!file) {
      std::cerr << "rxscan: cannot open " << opts.file << "\n";
      return kExitUsage;
    }
    in = &file;
    source = opts.file;
  }

  std::vector<std::string> warnings;
  std::vector<rxscan::SourcePattern> patterns =
      opts.snort ? rxscan::IngestSnort(*in, source, &warnings)
                 : rxscan::IngestLines(*in, source);
  if (in->bad()) {
    std::cerr << "rxscan: read error on " << source << "\n";
    return kExitUsage;
  }

  rxscan::CorpusReport report = rxscan::Run(config, patterns, opts.threads);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  for (const rxscan::CorpusRecord& r : report.records)
    for (const std::string& w : r.verdict.warnings)
      std::cerr << "warning: " << r.pattern.Origin() << ": " << w << "\n";

  if (opts.format == "json")
    std::cout << rxscan::ReportToJson(report, !opts.no_timing);
  else
    std::cout << rxscan::ReportToText(report);
  return report.summary.vulnerable > 0 ? kExitVulnerable : kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static detection of exponential backtracking in regexes"};
  app.require_subcommand(1);

  rxscan::AnalysisConfig config;
  AnalyzeOptions analyze;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "Classify a file of patterns");
  cmd_analyze->add_option("file", analyze.file,
                          "One pattern per line, or - for stdin");
  cmd_analyze->add_option("--format", analyze.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_analyze->add_flag("--snort", analyze.snort,
                        "Extract pcre options from Snort rules");
  cmd_analyze->add_flag("--no-verify", analyze.no_verify,
                        "Report attacks without measuring growth");
  cmd_analyze->add_option("--hfpi-cap", config.hfpi_cap,
                          "Search steps per star");
  cmd_analyze->add_option("--budget", config.budget,
                          "Matcher steps per attack input");
  cmd_analyze->add_option("--pump-max", config.pump_max,
                          "Largest pump count tried");
  cmd_analyze->add_option("--threshold", config.threshold,
                          "Minimum step growth ratio per pump");
  cmd_analyze->add_option("--suffix-trials", config.suffix_trials,
                          "Failure suffix candidates tried");
  cmd_analyze->add_flag("--syntax", analyze.syntax,
                        "Print the supported syntax as JSON and exit");
  cmd_analyze->add_flag("--full-match", analyze.full_match,
                        "Inputs must be matched entirely");
  cmd_analyze->add_flag("--no-timing", analyze.no_timing,
                        "Leave durations out of JSON reports");
  cmd_analyze->add_option("--threads", analyze.threads,
                          "Worker threads (0: one per core)");

  std::string pattern, input, flags;
  uint64_t budget = config.budget;
  bool full_match = false, escaped = false;
  CLI::App* cmd_simulate = app.add_subcommand(
      "simulate", "Run the backtracking matcher and count its steps");
  cmd_simulate->add_option("pattern", pattern)->required();
  cmd_simulate->add_option("input", input)->required();
  cmd_simulate->add_option("--flags", flags, "Flag letters, e.g. i");
  cmd_simulate->add_option("--budget", budget, "Step budget");
  cmd_simulate->add_flag("--full-match", full_match,
                         "Input must be matched entirely");
  cmd_simulate->add_flag("--escaped", escaped,
                         "Input uses \\xHH and \\\\ escapes");

  uint64_t cap = config.hfpi_cap;
  CLI::App* cmd_dump = app.add_subcommand(
      "dump", "Print the node table and per-star search results");
  cmd_dump->add_option("pattern", pattern)->required();
  cmd_dump->add_option("--flags", flags, "Flag letters, e.g. i");
  cmd_dump->add_option("--hfpi-cap", cap, "Search steps per star");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_analyze->parsed()) return RunAnalyze(analyze, config);

  rxscan::SourcePattern source = rxscan::SourcePattern::WithFlags(pattern, flags);
  if (cmd_simulate->parsed()) {
    std::string bytes = input;
    if (escaped) {
      auto decoded = rxscan::UnescapeBytes(input);
      if (!decoded) {
        std::cerr << "rxscan: bad escape in input\n";
        return kExitUsage;
      }
      bytes = *decoded;
    }
    auto mode = full_match ? rxscan::MatchMode::kFull : rxscan::MatchMode::kPrefix;
    std::cout << rxscan::SimulateToJson(source, bytes, budget, mode) << "\n";
    return kExitClean;
  }
  if (cmd_dump->parsed()) {
    std::cout << rxscan::ParseToJson(source) << "\n"
              << rxscan::PumpableToJson(source, cap) << "\n";
    return kExitClean;
  }
  return kExitUsage;
}
