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
#ifndef RXSCAN_CORPUS_H_
#define RXSCAN_CORPUS_H_

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "rxscan/attack.h"
#include "rxscan/parser.h"

namespace rxscan {

inline constexpr int kReportSchemaVersion = 1;

// One pattern per line. Blank lines and lines starting with '#' are
// skipped; bytes are taken verbatim apart from a trailing '\r'.
std::vector<SourcePattern> IngestLines(std::istream& in,
                                       const std::string& source = "");

// Extracts the body of every pcre:"/.../flags" option in Snort rule text.
// Malformed options produce a pattern-less warning in `warnings`.
std::vector<SourcePattern> IngestSnort(std::istream& in,
                                       const std::string& source,
                                       std::vector<std::string>* warnings);

struct CorpusRecord {
  SourcePattern pattern;
  Verdict verdict;
};

struct CorpusSummary {
  size_t total = 0;
  size_t analyzable = 0;  // everything not unsupported
  size_t uses_kleene = 0;
  size_t vulnerable = 0;
  size_t pumpable_only = 0;
  size_t safe = 0;
  size_t unsupported = 0;
  uint64_t max_hfpi_steps = 0;

  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

struct CorpusReport {
  std::vector<CorpusRecord> records;  // input order
  CorpusSummary summary;
  double wall_ms = 0;
};

CorpusSummary Summarize(const std::vector<CorpusRecord>& records);

// Classifies every pattern on up to `threads` workers (0: hardware
// concurrency). Records keep the input order.
CorpusReport Run(const AnalysisConfig& config,
                 const std::vector<SourcePattern>& patterns,
                 unsigned threads = 0);

// JSON report; with include_timing false the duration fields are left out
// so that equal inputs give byte-identical output.
std::string ReportToJson(const CorpusReport& report, bool include_timing = true);
std::string VerdictToJson(const SourcePattern& pattern, const Verdict& verdict,
                          bool include_timing = true);
std::string ReportToText(const CorpusReport& report);

// Structure of one pattern: parse tree, arena with continuations and star
// list, or the parse error.
std::string ParseToJson(const SourcePattern& pattern);

// PwfRun of `pattern` on `input`.
std::string SimulateToJson(const SourcePattern& pattern,
                           std::string_view input, uint64_t budget,
                           MatchMode mode);

// FindPumpable for every star of `pattern`.
std::string PumpableToJson(const SourcePattern& pattern, uint64_t step_cap);

std::string SyntaxReportToJson();

}  // namespace rxscan

#endif  // RXSCAN_CORPUS_H_
