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
#include "rxscan/attack.h"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>

namespace rxscan {

std::string AnalysisConfig::Validate() const {
  if (hfpi_cap == 0) return "hfpi cap must be positive";
  if (budget == 0) return "budget must be positive";
  if (pump_max < 4) return "pump max must be at least 4";
  if (!(threshold > 1.0)) return "threshold must exceed 1";
  if (suffix_trials <= 0) return "suffix trials must be positive";
  return "";
}

std::string AttackTriple::Build(int n) const {
  std::string out = prefix;
  out.reserve(prefix.size() + pump.size() * n + suffix.size());
  for (int i = 0; i < n; ++i) out += pump;
  out += suffix;
  return out;
}

// 0-1 breadth-first search over (node, still at offset 0). Zero-width
// moves cost 0, constants cost 1; '^' needs offset 0 and '$' is never
// crossed since more input follows the prefix.
std::optional<std::string> GenPrefix(const ExprArena& arena, NodeId kleene) {
  const size_t n = arena.size();
  auto index = [n](NodeId id, bool start) {
    return static_cast<size_t>(id.value) + (start ? 0 : n);
  };
  constexpr size_t kUnseen = std::numeric_limits<size_t>::max();
  std::vector<size_t> dist(2 * n, kUnseen);
  std::vector<size_t> from(2 * n, kUnseen);
  std::vector<int> byte(2 * n, -1);

  std::deque<std::pair<NodeId, bool>> queue;
  dist[index(arena.root(), true)] = 0;
  queue.emplace_back(arena.root(), true);
  auto relax = [&](size_t src, NodeId to, bool start, int b) {
    if (to.IsTerminal()) return;
    size_t dst = index(to, start);
    size_t d = dist[src] + (b >= 0 ? 1 : 0);
    if (d >= dist[dst]) return;
    dist[dst] = d;
    from[dst] = src;
    byte[dst] = b;
    if (b >= 0)
      queue.emplace_back(to, start);
    else
      queue.emplace_front(to, start);
  };

  std::optional<size_t> found;
  std::vector<bool> done(2 * n, false);
  while (!queue.empty()) {
    auto [id, start] = queue.front();
    queue.pop_front();
    size_t src = index(id, start);
    if (done[src]) continue;
    done[src] = true;
    if (id == kleene) {
      found = src;
      break;
    }
    const ArenaNode& node = arena.node(id);
    NodeId next = arena.kont(id);
    switch (node.kind) {
      case NodeKind::kAlt:
        relax(src, node.left, start, -1);
        relax(src, node.right, start, -1);
        break;
      case NodeKind::kStar:
        relax(src, node.left, start, -1);
        relax(src, next, start, -1);
        break;
      case NodeKind::kConcat:
        relax(src, node.left, start, -1);
        break;
      case NodeKind::kEpsilon:
        relax(src, next, start, -1);
        break;
      case NodeKind::kAnchorStart:
        if (start) relax(src, next, start, -1);
        break;
      case NodeKind::kAnchorEnd:
        break;
      case NodeKind::kConstant:
        if (auto b = node.chars.Representative()) relax(src, next, false, *b);
        break;
    }
  }
  if (!found) return std::nullopt;
  std::string x;
  for (size_t at = *found; from[at] != kUnseen; at = from[at])
    if (byte[at] >= 0) x.push_back(static_cast<char>(byte[at]));
  std::reverse(x.begin(), x.end());
  return x;
}

namespace {

// Nodes live after consuming `input` from the root, before any further
// zero-width moves.
std::vector<NodeId> LiveAfter(const ExprArena& arena, std::string_view input) {
  std::vector<NodeId> current{arena.root()};
  for (size_t at = 0;; ++at) {
    // Zero-width closure, collecting constants that can consume input[at].
    std::vector<bool> seen(arena.size(), false);
    std::vector<NodeId> stack = current;
    std::vector<NodeId> constants;
    while (!stack.empty()) {
      NodeId id = stack.back();
      stack.pop_back();
      if (id.IsTerminal() || seen[id.value]) continue;
      seen[id.value] = true;
      const ArenaNode& node = arena.node(id);
      switch (node.kind) {
        case NodeKind::kAlt:
          stack.push_back(node.right);
          stack.push_back(node.left);
          break;
        case NodeKind::kStar:
          stack.push_back(arena.kont(id));
          stack.push_back(node.left);
          break;
        case NodeKind::kConcat:
          stack.push_back(node.left);
          break;
        case NodeKind::kEpsilon:
          stack.push_back(arena.kont(id));
          break;
        case NodeKind::kAnchorStart:
          if (at == 0) stack.push_back(arena.kont(id));
          break;
        case NodeKind::kAnchorEnd:
          break;
        case NodeKind::kConstant:
          constants.push_back(id);
          break;
      }
    }
    if (at == input.size()) return current;
    std::vector<NodeId> next;
    std::vector<bool> added(arena.size() + 1, false);
    for (NodeId c : constants) {
      if (!arena.node(c).chars.Contains(static_cast<uint8_t>(input[at])))
        continue;
      NodeId k = arena.kont(c);
      size_t slot = k.IsTerminal() ? arena.size() : k.value;
      if (!added[slot]) {
        added[slot] = true;
        next.push_back(k);
      }
    }
    current = std::move(next);
    if (current.empty()) return current;
  }
}

// Union of the character sets of constants reachable from `roots`.
// With `transitive`, consuming moves are followed too.
CharSet ReachableBytes(const ExprArena& arena, const std::vector<NodeId>& roots,
                       bool transitive) {
  CharSet out;
  std::vector<bool> seen(arena.size(), false);
  std::vector<NodeId> stack = roots;
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (id.IsTerminal() || seen[id.value]) continue;
    seen[id.value] = true;
    const ArenaNode& node = arena.node(id);
    switch (node.kind) {
      case NodeKind::kAlt:
        stack.push_back(node.left);
        stack.push_back(node.right);
        break;
      case NodeKind::kStar:
        stack.push_back(node.left);
        stack.push_back(arena.kont(id));
        break;
      case NodeKind::kConcat:
        stack.push_back(node.left);
        break;
      case NodeKind::kEpsilon:
        stack.push_back(arena.kont(id));
        break;
      case NodeKind::kAnchorStart:
      case NodeKind::kAnchorEnd:
        break;
      case NodeKind::kConstant:
        out.AddSet(node.chars);
        if (transitive) stack.push_back(arena.kont(id));
        break;
    }
  }
  return out;
}

// Printable bytes first, each group ascending.
std::vector<uint8_t> OrderedBytes(const CharSet& set) {
  std::vector<uint8_t> printable, other;
  for (int b = 0; b < 256; ++b) {
    if (!set.Contains(static_cast<uint8_t>(b))) continue;
    (b >= 0x20 && b < 0x7f ? printable : other).push_back(static_cast<uint8_t>(b));
  }
  printable.insert(printable.end(), other.begin(), other.end());
  return printable;
}

}  // namespace

std::vector<std::string> SuffixCandidates(const ExprArena& arena,
                                          std::string_view x,
                                          std::string_view w, int trials,
                                          MatchMode mode) {
  std::string input(x);
  input.append(w);
  input.append(w);
  std::vector<NodeId> live = LiveAfter(arena, input);

  std::vector<std::string> out;
  auto add = [&](std::string z) {
    if (static_cast<int>(out.size()) >= trials) return;
    if (std::find(out.begin(), out.end(), z) == out.end())
      out.push_back(std::move(z));
  };

  CharSet anywhere = ReachableBytes(arena, live, /*transitive=*/true);
  if (auto b = anywhere.Complement().Representative())
    add(std::string(1, static_cast<char>(*b)));
  if (mode == MatchMode::kFull || arena.EndAnchored()) add("");

  CharSet next = ReachableBytes(arena, live, /*transitive=*/false);
  std::vector<uint8_t> fail = OrderedBytes(next.Complement());
  std::vector<std::string> pads;
  if (!w.empty()) pads.emplace_back(1, w.front());
  for (uint8_t b : OrderedBytes(next)) {
    if (pads.size() >= 4) break;
    std::string pad(1, static_cast<char>(b));
    if (std::find(pads.begin(), pads.end(), pad) == pads.end())
      pads.push_back(pad);
  }
  const size_t kSingles = 8, kPadded = 4;
  for (size_t i = 0; i < fail.size() && i < kSingles; ++i)
    add(std::string(1, static_cast<char>(fail[i])));
  for (int reps = 1; reps <= 2; ++reps)
    for (const std::string& pad : pads)
      for (size_t i = 0; i < fail.size() && i < kPadded; ++i) {
        std::string z;
        for (int r = 0; r < reps; ++r) z += pad;
        z.push_back(static_cast<char>(fail[i]));
        add(std::move(z));
      }
  for (size_t i = kSingles; i < fail.size(); ++i)
    add(std::string(1, static_cast<char>(fail[i])));
  return out;
}

namespace {

bool RejectsOutright(const ExprArena& arena, std::string_view x,
                     std::string_view w, std::string_view z,
                     const AnalysisConfig& config) {
  std::string input(x);
  input.append(w);
  input.append(w);
  input.append(z);
  return PwfRun(arena, input, config.budget, config.mode).status ==
         MatchStatus::kNoMatch;
}

}  // namespace

std::optional<std::string> GenSuffix(const ExprArena& arena, std::string_view x,
                                     std::string_view w,
                                     const AnalysisConfig& config) {
  for (std::string& z :
       SuffixCandidates(arena, x, w, config.suffix_trials, config.mode))
    if (RejectsOutright(arena, x, w, z, config)) return std::move(z);
  return std::nullopt;
}

bool GrowthConfirmed(const VerificationReport& report, double threshold) {
  int run = 0;
  for (double r : report.ratios) {
    run = r >= threshold ? run + 1 : 0;
    if (run >= 3) return true;
  }
  if (!report.exhausted_at || report.ratios.empty()) return false;
  return std::all_of(report.ratios.begin(), report.ratios.end(),
                     [threshold](double r) { return r >= threshold; });
}

std::variant<VerificationReport, RejectedTriple> VerifyAttack(
    const ExprArena& arena, const AttackTriple& triple,
    const AnalysisConfig& config) {
  VerificationReport report;
  for (int n = 2; n <= config.pump_max; ++n) {
    MatchOutcome run = PwfRun(arena, triple.Build(n), config.budget, config.mode);
    if (run.status == MatchStatus::kMatched)
      return RejectedTriple{n, run.match_length};
    if (run.status == MatchStatus::kBudgetExceeded) {
      report.exhausted_at = n;
      break;
    }
    if (!report.steps.empty())
      report.ratios.push_back(static_cast<double>(run.steps) /
                              static_cast<double>(report.steps.back()));
    report.pumps.push_back(n);
    report.steps.push_back(run.steps);
  }
  report.confirmed = GrowthConfirmed(report, config.threshold);
  return report;
}

const char* KleeneStatusName(KleeneFinding::Status status) {
  switch (status) {
    case KleeneFinding::Status::kPumpable: return "pumpable";
    case KleeneFinding::Status::kNotPumpable: return "not-pumpable";
    case KleeneFinding::Status::kCapExceeded: return "cap-exceeded";
  }
  return "?";
}

const char* Verdict::Name() const {
  struct {
    const char* operator()(const Vulnerable&) { return "vulnerable"; }
    const char* operator()(const PumpableOnly&) { return "pumpable-only"; }
    const char* operator()(const Safe&) { return "safe"; }
    const char* operator()(const Unsupported&) { return "unsupported"; }
  } name;
  return std::visit(name, classification);
}

namespace {

Classification Weaponize(const ExprArena& arena, const PumpableWitness& witness,
                         const AnalysisConfig& config) {
  std::optional<std::string> x = GenPrefix(arena, witness.kleene);
  if (!x) return PumpableOnly{witness.kleene, witness.w, "no-prefix"};

  for (std::string& z : SuffixCandidates(arena, *x, witness.w,
                                         config.suffix_trials, config.mode)) {
    if (!RejectsOutright(arena, *x, witness.w, z, config)) continue;
    AttackTriple triple{*x, witness.w, std::move(z), witness.kleene};
    if (!config.verify) return Vulnerable{std::move(triple), std::nullopt};
    auto result = VerifyAttack(arena, triple, config);
    if (std::holds_alternative<RejectedTriple>(result)) continue;
    auto& report = std::get<VerificationReport>(result);
    if (!report.confirmed)
      return PumpableOnly{witness.kleene, witness.w, "growth-not-confirmed"};
    return Vulnerable{std::move(triple), std::move(report)};
  }
  return PumpableOnly{witness.kleene, witness.w, "suffix-not-found"};
}

}  // namespace

Verdict Classify(const SourcePattern& pattern, const AnalysisConfig& config) {
  auto started = std::chrono::steady_clock::now();
  Verdict verdict;
  auto finish = [&](Classification c) {
    verdict.classification = std::move(c);
    verdict.duration_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    return verdict;
  };

  verdict.warnings = pattern.notes;
  ParseResult parsed = Parse(pattern);
  verdict.warnings.insert(verdict.warnings.end(), parsed.warnings().begin(),
                          parsed.warnings().end());
  if (!parsed.ok()) {
    const ParseError& e = parsed.error();
    std::string construct =
        e.IsUnsupported() ? UnsupportedKindName(e.unsupported) : "malformed";
    return finish(Unsupported{construct, e.ToString()});
  }

  ExprArena arena = ExprArena::Build(*parsed.ast());
  verdict.arena_size = arena.size();
  if (arena.KleeneNodes().empty()) return finish(Safe{"no-kleene"});

  Analyzer analyzer(arena);
  std::optional<PumpableWitness> first;
  bool capped = false;
  for (NodeId star : arena.KleeneNodes()) {
    PumpResult r = analyzer.FindPumpable(star, config.hfpi_cap);
    KleeneFinding f{star, KleeneFinding::Status::kNotPumpable, "", HfpiSteps(r)};
    if (auto* w = std::get_if<PumpableWitness>(&r)) {
      f.status = KleeneFinding::Status::kPumpable;
      f.pump = w->w;
      if (!first) first = *w;
    } else if (std::holds_alternative<CapExceeded>(r)) {
      f.status = KleeneFinding::Status::kCapExceeded;
      capped = true;
    }
    verdict.hfpi_steps = std::max(verdict.hfpi_steps, f.hfpi_steps);
    verdict.findings.push_back(std::move(f));
  }
  if (first) return finish(Weaponize(arena, *first, config));
  return finish(Safe{capped ? "hfpi-cap-exceeded" : "no-pumpable"});
}

}  // namespace rxscan
