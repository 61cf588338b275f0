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
#ifndef RXSCAN_ATTACK_H_
#define RXSCAN_ATTACK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rxscan/analyzer.h"
#include "rxscan/arena.h"
#include "rxscan/machine.h"
#include "rxscan/parser.h"

namespace rxscan {

struct AnalysisConfig {
  uint64_t hfpi_cap = kDefaultHfpiCap;
  uint64_t budget = 1000000;  // PwfRun steps per attack input
  int pump_max = 20;
  double threshold = 1.8;
  int suffix_trials = 64;
  bool verify = true;
  MatchMode mode = MatchMode::kPrefix;

  // Empty if valid, otherwise a description of the first bad field.
  std::string Validate() const;
};

// x . w^n . z drives the matcher into exponential backtracking.
struct AttackTriple {
  std::string prefix;
  std::string pump;  // non-empty
  std::string suffix;
  NodeId kleene;

  std::string Build(int n) const;
};

struct VerificationReport {
  std::vector<int> pumps;         // n values with a completed run
  std::vector<uint64_t> steps;    // PwfRun steps per entry of pumps
  std::vector<double> ratios;     // steps[i + 1] / steps[i]
  std::optional<int> exhausted_at;  // n whose run hit the budget
  bool confirmed = false;
};

// Some tested input was accepted; the suffix does not force failure.
struct RejectedTriple {
  int pump = 0;
  size_t match_length = 0;
};

// Shortest input leading from the root to `kleene`; nullopt if the star is
// unreachable. Uses one representative byte per character set, preferring
// printable ones.
std::optional<std::string> GenPrefix(const ExprArena& arena, NodeId kleene);

// Candidate failure suffixes in the order they are tried, at most
// `trials` of them.
std::vector<std::string> SuffixCandidates(const ExprArena& arena,
                                          std::string_view x,
                                          std::string_view w, int trials,
                                          MatchMode mode);

// First candidate z for which x . w^2 . z is rejected outright.
std::optional<std::string> GenSuffix(const ExprArena& arena, std::string_view x,
                                     std::string_view w,
                                     const AnalysisConfig& config);

std::variant<VerificationReport, RejectedTriple> VerifyAttack(
    const ExprArena& arena, const AttackTriple& triple,
    const AnalysisConfig& config);

// True when ratios meet the threshold for three consecutive pumps, or the
// budget ran out and every observed ratio (at least one) met it.
bool GrowthConfirmed(const VerificationReport& report, double threshold);

struct Vulnerable {
  AttackTriple triple;
  std::optional<VerificationReport> report;  // absent when verification is off
};

struct PumpableOnly {
  NodeId kleene;
  std::string pump;
  std::string reason;  // "no-prefix" | "suffix-not-found" | "growth-not-confirmed"
};

struct Safe {
  std::string reason;  // "no-kleene" | "no-pumpable" | "hfpi-cap-exceeded"
};

struct Unsupported {
  std::string construct;  // "back-reference" | "look-around" | "other" | "malformed"
  std::string detail;
};

using Classification = std::variant<Vulnerable, PumpableOnly, Safe, Unsupported>;

struct KleeneFinding {
  NodeId kleene;
  enum class Status { kPumpable, kNotPumpable, kCapExceeded } status;
  std::string pump;  // kPumpable only
  uint64_t hfpi_steps = 0;
};

const char* KleeneStatusName(KleeneFinding::Status status);

struct Verdict {
  Classification classification;
  std::vector<KleeneFinding> findings;  // one per star, pre-order
  uint64_t hfpi_steps = 0;              // max over findings
  size_t arena_size = 0;
  std::vector<std::string> warnings;
  double duration_ms = 0;

  // "vulnerable" | "pumpable-only" | "safe" | "unsupported"
  const char* Name() const;
  bool IsVulnerable() const {
    return std::holds_alternative<Vulnerable>(classification);
  }
};

Verdict Classify(const SourcePattern& pattern, const AnalysisConfig& config);

}  // namespace rxscan

#endif  // RXSCAN_ATTACK_H_
