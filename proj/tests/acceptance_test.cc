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
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "oracle/checks.h"
#include "oracle/generators.h"
#include "oracle/oracle.h"
#include "rxscan/analyzer.h"
#include "rxscan/attack.h"
#include "rxscan/corpus.h"
#include "rxscan/machine.h"
#include "rxscan/parser.h"

namespace rxscan {
namespace {

// Criterion 1.
constexpr int kBlowupMinN = 5;
constexpr int kBlowupMaxN = 16;
constexpr double kBlowupMinRatio = 1.9;
constexpr double kBlowupMaxSeconds = 10.0;
// Criterion 2.
constexpr double kExampleMaxMs = 100.0;
// Criterion 3.
constexpr double kExtremeMaxSeconds = 30.0;
// Criterion 4.
constexpr size_t kCorpusSize = 1000;
constexpr double kCorpusMaxSeconds = 60.0;
// Criteria 5 and 6.
constexpr int kRandomPatterns = 1000;
constexpr int kRandomDepth = 4;
constexpr size_t kOracleMaxLen = 6;
constexpr size_t kPathMaxLen = 4;
constexpr uint64_t kRandomSeed = 0x5eed0005;
// Criterion 8.
constexpr int kNullablePatterns = 500;
constexpr uint64_t kNullableBudget = 1000000;
constexpr uint64_t kNullableSeed = 0x5eed0008;

constexpr char kClock[] = "^(([01][0-9]|[012][0-3]):([0-5][0-9]))*$";
constexpr char kZip[] =
    "^([a-zA-z]:((\\\\([-*\\.*\\w+\\s+\\d+]+)|(\\w+)\\\\)+)(\\w+.zip)|"
    "(\\w+.ZIP))$";

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Every vulnerable verdict seen by any criterion, re-checked by criterion 7.
struct Emitted {
  std::string pattern;
  Verdict verdict;
};
std::vector<Emitted>& AllVulnerable() {
  static std::vector<Emitted> v;
  return v;
}
void Record(const std::string& pattern, const Verdict& v) {
  if (v.IsVulnerable()) AllVulnerable().push_back({pattern, v});
}

// Whether some prefix of s is in the language, by the independent oracle.
bool OraclePrefixMatch(const AstNode& tree, const std::string& s) {
  AstPtr any = ast::Concat(std::make_shared<const AstNode>(tree),
                           ast::Star(ast::Constant(CharSet::All())));
  return oracle::FullMatch(*any, s);
}

std::string Abbrev(const std::vector<std::string>& lines) {
  if (lines.empty()) return "";
  std::string out = "; first: " + lines.front();
  return out.size() > 240 ? out.substr(0, 240) + "..." : out;
}

Outcome Blowup() {
  Clock::time_point start = Clock::now();
  ExprArena arena = ExprArena::Build(*Parse("a**").ast());
  std::vector<uint64_t> steps;
  for (int n = kBlowupMinN; n <= kBlowupMaxN; ++n) {
    MatchOutcome m = PwfRun(arena, std::string(n, 'a') + "b",
                            std::numeric_limits<uint64_t>::max(),
                            MatchMode::kFull);
    if (m.status != MatchStatus::kNoMatch)
      return {false, "a^" + std::to_string(n) + "b was not rejected"};
    steps.push_back(m.steps);
  }
  double secs = Seconds(start);
  double min_ratio = 1e300;
  bool bound = true;
  for (size_t i = 0; i < steps.size(); ++i) {
    int n = kBlowupMinN + static_cast<int>(i);
    if (static_cast<double>(steps[i]) < std::ldexp(1.0, n)) bound = false;
    if (i > 0)
      min_ratio = std::min(min_ratio, static_cast<double>(steps[i]) /
                                          static_cast<double>(steps[i - 1]));
  }
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "full match, n=%d..%d: min ratio %.3f, steps(%d)=%llu, "
                "steps>=2^n %s, %.2fs",
                kBlowupMinN, kBlowupMaxN, min_ratio, kBlowupMaxN,
                static_cast<unsigned long long>(steps.back()),
                bound ? "yes" : "no", secs);
  return {min_ratio >= kBlowupMinRatio && bound && secs < kBlowupMaxSeconds,
          buf};
}

Outcome Examples() {
  bool ok = true;
  std::string detail;
  for (const char* text : {kClock, kZip}) {
    Clock::time_point start = Clock::now();
    Verdict v = Classify(SourcePattern::Raw(text), AnalysisConfig{});
    double ms = Seconds(start) * 1000;
    Record(text, v);
    const auto* vuln = std::get_if<Vulnerable>(&v.classification);
    bool good = vuln != nullptr && vuln->report && vuln->report->confirmed &&
                ms < kExampleMaxMs;
    if (good && text == kClock)
      good = vuln->triple.pump.size() == 5 && vuln->triple.suffix.size() == 1;
    if (good && text == kZip) good = vuln->triple.suffix.empty();
    ok = ok && good;
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%s%s %s", detail.empty() ? "" : "; ",
                  text == kClock ? "24h" : "zip", v.Name());
    detail += buf;
    if (vuln != nullptr) {
      std::snprintf(buf, sizeof(buf), " |w|=%zu |z|=%zu", vuln->triple.pump.size(),
                    vuln->triple.suffix.size());
      detail += buf;
    }
    std::snprintf(buf, sizeof(buf), " %.1fms", ms);
    detail += buf;
  }
  return {ok, detail};
}

Outcome Extreme() {
  bool ok = true;
  std::string detail;
  for (const char* text :
       {"([\\d\\w][-\\d\\w]{0,253}[\\d\\w]\\.)+", "([^\\x00]{0,255}\\x00)*"}) {
    Clock::time_point start = Clock::now();
    ParseResult parsed = Parse(text);
    if (!parsed.ok()) return {false, std::string(text) + " failed to parse"};
    ExprArena arena = ExprArena::Build(*parsed.ast());
    Analyzer analyzer(arena);
    uint64_t max_steps = 0;
    bool capped = false;
    for (NodeId star : arena.KleeneNodes()) {
      PumpResult r = analyzer.FindPumpable(star, kDefaultHfpiCap);
      capped = capped || std::holds_alternative<CapExceeded>(r);
      max_steps = std::max(max_steps, HfpiSteps(r));
    }
    double secs = Seconds(start);
    ok = ok && !capped && secs < kExtremeMaxSeconds;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s%zu nodes, %zu stars, %llu steps%s, %.2fs",
                  detail.empty() ? "" : "; ", arena.size(),
                  arena.KleeneNodes().size(),
                  static_cast<unsigned long long>(max_steps),
                  capped ? " (cap exceeded)" : "", secs);
    detail += buf;
  }
  return {ok, detail};
}

Outcome Corpus() {
  std::ifstream patterns_in(RXSCAN_TEST_DATA "/mini_corpus.txt");
  std::ifstream labels_in(RXSCAN_TEST_DATA "/mini_corpus_labels.txt");
  std::vector<SourcePattern> patterns = IngestLines(patterns_in, "mini_corpus");
  std::vector<std::string> labels;
  for (std::string l; std::getline(labels_in, l);) labels.push_back(l);
  if (patterns.size() != kCorpusSize || labels.size() != kCorpusSize)
    return {false, "corpus or labels missing or of the wrong size"};

  Clock::time_point start = Clock::now();
  CorpusReport report = Run(AnalysisConfig{}, patterns);
  double secs = Seconds(start);

  size_t unsound = 0, agree = 0;
  std::vector<std::string> bad;
  for (size_t i = 0; i < report.records.size(); ++i) {
    const Verdict& v = report.records[i].verdict;
    Record(patterns[i].text, v);
    if (labels[i] == v.Name()) ++agree;
    if (!v.IsVulnerable()) continue;
    if (labels[i] != "vulnerable") {
      ++unsound;
      bad.push_back(patterns[i].text + " labelled " + labels[i]);
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%zu patterns, %zu vulnerable, %zu unsound, %zu/%zu agree with "
                "labels, %.1fs (%.0f patterns/s)",
                report.summary.total, report.summary.vulnerable, unsound, agree,
                report.records.size(), secs, report.records.size() / secs);
  return {unsound == 0 && secs < kCorpusMaxSeconds,
          std::string(buf) + Abbrev(bad)};
}

std::vector<AstPtr> RandomPatterns() {
  oracle::Rng rng(kRandomSeed);
  std::vector<AstPtr> out;
  for (int i = 0; i < kRandomPatterns; ++i)
    out.push_back(oracle::RandomAst(rng, kRandomDepth));
  return out;
}

Outcome OracleEquivalence() {
  std::vector<std::string> bad;
  size_t stars = 0, pumpable = 0;
  for (const AstPtr& tree : RandomPatterns()) {
    ExprArena arena = ExprArena::Build(*tree);
    stars += arena.KleeneNodes().size();
    for (NodeId s : arena.KleeneNodes())
      pumpable += std::holds_alternative<PumpableWitness>(FindPumpable(arena, s));
    for (std::string& d : oracle::CheckPumpable(*tree, kOracleMaxLen))
      bad.push_back(std::move(d));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d patterns, %zu stars (%zu pumpable), %zu disagreements",
                kRandomPatterns, stars, pumpable, bad.size());
  return {bad.empty(), buf + Abbrev(bad)};
}

Outcome PathExistence() {
  std::vector<std::string> bad;
  for (const AstPtr& tree : RandomPatterns())
    for (std::string& d : oracle::CheckPathExistence(*tree, kPathMaxLen))
      bad.push_back(std::move(d));
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d patterns, every node, |w|<=%zu: %zu mismatches",
                kRandomPatterns, kPathMaxLen, bad.size());
  return {bad.empty(), buf + Abbrev(bad)};
}

// Runs after the others so that it covers every vulnerable verdict they
// produced, plus a sweep of anchored random patterns.
Outcome Soundness() {
  oracle::Rng rng(kRandomSeed + 7);
  for (int i = 0; i < 300; ++i) {
    AstPtr tree = oracle::RandomAst(rng, kRandomDepth);
    std::string text = "^(" + ToPattern(*tree) + ")*$";
    Record(text, Classify(SourcePattern::Raw(text), AnalysisConfig{}));
  }
  std::vector<std::string> bad;
  size_t inputs = 0;
  for (const Emitted& e : AllVulnerable()) {
    const auto& vuln = std::get<Vulnerable>(e.verdict.classification);
    if (!vuln.report || !vuln.report->confirmed || vuln.report->pumps.empty()) {
      bad.push_back(e.pattern + ": no confirmed report");
      continue;
    }
    ParseResult parsed = Parse(e.pattern);
    ExprArena arena = ExprArena::Build(*parsed.ast());
    std::vector<int> tested = vuln.report->pumps;
    if (vuln.report->exhausted_at) tested.push_back(*vuln.report->exhausted_at);
    for (int n : tested) {
      std::string input = vuln.triple.Build(n);
      ++inputs;
      MatchOutcome m = PwfRun(arena, input, AnalysisConfig{}.budget);
      bool oracle_match = n <= 8 && OraclePrefixMatch(*parsed.ast(), input);
      if (m.status == MatchStatus::kMatched || oracle_match) {
        bad.push_back(e.pattern + ": matched at n=" + std::to_string(n));
        break;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%zu vulnerable verdicts, %zu pumped inputs re-run, %zu failures",
                AllVulnerable().size(), inputs, bad.size());
  return {bad.empty(), buf + Abbrev(bad)};
}

Outcome NullableTermination() {
  oracle::Rng rng(kNullableSeed);
  std::vector<std::string> bad;
  Clock::time_point start = Clock::now();
  for (int i = 0; i < kNullablePatterns; ++i) {
    std::string text = "(" + oracle::Render(*oracle::RandomNullable(rng, 4)) + ")*";
    ParseResult parsed = Parse(text);
    if (!parsed.ok()) {
      bad.push_back(text + ": " + parsed.error().ToString());
      continue;
    }
    for (std::string& d :
         oracle::CheckNullableTermination(*parsed.ast(), kNullableBudget))
      bad.push_back(std::move(d));
  }
  for (const char* text : {"(a?)*", "((a|)*)*"}) {
    for (std::string& d :
         oracle::CheckNullableTermination(*Parse(text).ast(), kNullableBudget))
      bad.push_back(std::move(d));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d fuzzed nullable stars, budget %llu: %zu failures, %.2fs",
                kNullablePatterns, static_cast<unsigned long long>(kNullableBudget),
                bad.size(), Seconds(start));
  return {bad.empty(), buf + Abbrev(bad)};
}

}  // namespace
}  // namespace rxscan

int main() {
  using rxscan::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  // Soundness goes last so it sees every vulnerable verdict.
  const std::vector<Criterion> criteria{
      {1, "exponential blowup on a**", rxscan::Blowup},
      {2, "worked examples", rxscan::Examples},
      {3, "extreme-case stars", rxscan::Extreme},
      {4, "mini-corpus", rxscan::Corpus},
      {5, "oracle equivalence", rxscan::OracleEquivalence},
      {6, "path existence", rxscan::PathExistence},
      {8, "nullable-loop termination", rxscan::NullableTermination},
      {7, "attack soundness", rxscan::Soundness},
  };
  std::vector<std::string> lines(9);
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o = c.run();
    failures += !o.pass;
    lines[c.id] = std::string(o.pass ? "PASS" : "FAIL") + " criterion " +
                  std::to_string(c.id) + " (" + c.name + "): " + o.detail;
    std::fprintf(stderr, "%s\n", lines[c.id].c_str());
  }
  std::printf("\n");
  for (int id = 1; id <= 8; ++id) std::printf("%s\n", lines[id].c_str());
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
