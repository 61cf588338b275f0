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
#include "rxscan/corpus.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace rxscan {

using json = nlohmann::ordered_json;

std::vector<SourcePattern> IngestLines(std::istream& in,
                                       const std::string& source) {
  std::vector<SourcePattern> out;
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    SourcePattern p = SourcePattern::Raw(line);
    p.source = source;
    p.line = number;
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Undoes the rule-level quoting of a pcre option body. Other backslash
// pairs are regex escapes and stay as they are.
std::string UnquoteRule(std::string_view s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() &&
        (s[i + 1] == '/' || s[i + 1] == '"' || s[i + 1] == ';')) {
      out.push_back(s[++i]);
    } else {
      out.push_back(s[i]);
      if (s[i] == '\\' && i + 1 < s.size()) out.push_back(s[++i]);
    }
  }
  return out;
}

}  // namespace

std::vector<SourcePattern> IngestSnort(std::istream& in,
                                       const std::string& source,
                                       std::vector<std::string>* warnings) {
  std::vector<SourcePattern> out;
  std::string line;
  size_t number = 0;
  auto warn = [&](const std::string& msg) {
    if (warnings == nullptr) return;
    std::string where = source.empty() ? "line " : source + ":";
    warnings->push_back(where + std::to_string(number) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;

    for (size_t at = line.find("pcre:"); at != std::string::npos;
         at = line.find("pcre:", at + 1)) {
      size_t i = line.find_first_not_of(" \t", at + 5);
      if (i == std::string::npos || line[i] != '"') {
        warn("pcre option without a quoted value");
        continue;
      }
      // Closing quote: the first unescaped '"'.
      size_t close = std::string::npos;
      for (size_t j = i + 1; j < line.size(); ++j) {
        if (line[j] == '\\') {
          ++j;
        } else if (line[j] == '"') {
          close = j;
          break;
        }
      }
      if (close == std::string::npos) {
        warn("unterminated pcre option");
        break;
      }
      std::string_view value(line.data() + i + 1, close - i - 1);
      if (!value.empty() && value.front() == '!') value.remove_prefix(1);
      size_t last = value.rfind('/');
      if (value.empty() || value.front() != '/' || last == 0) {
        warn("pcre option is not of the form /body/flags");
        at = close;
        continue;
      }
      SourcePattern p = SourcePattern::WithFlags(
          UnquoteRule(value.substr(1, last - 1)), value.substr(last + 1));
      p.source = source;
      p.line = number;
      out.push_back(std::move(p));
      at = close;
    }
  }
  return out;
}

CorpusSummary Summarize(const std::vector<CorpusRecord>& records) {
  CorpusSummary s;
  for (const CorpusRecord& r : records) {
    ++s.total;
    s.max_hfpi_steps = std::max(s.max_hfpi_steps, r.verdict.hfpi_steps);
    const Classification& c = r.verdict.classification;
    if (std::holds_alternative<Unsupported>(c)) {
      ++s.unsupported;
      continue;
    }
    ++s.analyzable;
    if (!r.verdict.findings.empty()) ++s.uses_kleene;
    if (std::holds_alternative<Vulnerable>(c)) ++s.vulnerable;
    if (std::holds_alternative<PumpableOnly>(c)) ++s.pumpable_only;
    if (std::holds_alternative<Safe>(c)) ++s.safe;
  }
  return s;
}

CorpusReport Run(const AnalysisConfig& config,
                 const std::vector<SourcePattern>& patterns, unsigned threads) {
  auto started = std::chrono::steady_clock::now();
  CorpusReport report;
  report.records.resize(patterns.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<size_t>(threads, std::max<size_t>(1, patterns.size())));

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < patterns.size(); i = next++) {
      report.records[i].pattern = patterns[i];
      report.records[i].verdict = Classify(patterns[i], config);
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  report.summary = Summarize(report.records);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return report;
}

namespace {

json TripleJson(const AttackTriple& t) {
  return json{{"kleene", ToString(t.kleene)},
              {"prefix", EscapeBytes(t.prefix)},
              {"pump", EscapeBytes(t.pump)},
              {"suffix", EscapeBytes(t.suffix)}};
}

json ReportJson(const VerificationReport& r) {
  json j{{"pumps", r.pumps}, {"steps", r.steps}, {"ratios", r.ratios}};
  j["exhausted_at"] = r.exhausted_at ? json(*r.exhausted_at) : json(nullptr);
  j["confirmed"] = r.confirmed;
  return j;
}

json RecordJson(const SourcePattern& p, const Verdict& v, bool timing) {
  json j;
  j["origin"] = p.Origin();
  j["pattern"] = EscapeBytes(p.text);
  j["flags"] = p.FlagLetters();
  j["verdict"] = v.Name();
  std::visit(
      [&j](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Vulnerable>) {
          j["triple"] = TripleJson(c.triple);
          j["verified"] = c.report.has_value();
          if (c.report) j["verification"] = ReportJson(*c.report);
        } else if constexpr (std::is_same_v<T, PumpableOnly>) {
          j["reason"] = c.reason;
          j["kleene"] = ToString(c.kleene);
          j["pump"] = EscapeBytes(c.pump);
        } else if constexpr (std::is_same_v<T, Safe>) {
          j["reason"] = c.reason;
        } else {
          j["construct"] = c.construct;
          j["detail"] = c.detail;
        }
      },
      v.classification);
  j["hfpi_steps"] = v.hfpi_steps;
  j["arena_size"] = v.arena_size;
  json findings = json::array();
  for (const KleeneFinding& f : v.findings) {
    json e{{"kleene", ToString(f.kleene)},
           {"status", KleeneStatusName(f.status)},
           {"hfpi_steps", f.hfpi_steps}};
    if (f.status == KleeneFinding::Status::kPumpable)
      e["pump"] = EscapeBytes(f.pump);
    findings.push_back(std::move(e));
  }
  j["findings"] = std::move(findings);
  j["warnings"] = v.warnings;
  if (timing) j["duration_ms"] = v.duration_ms;
  return j;
}

}  // namespace

std::string VerdictToJson(const SourcePattern& pattern, const Verdict& verdict,
                          bool include_timing) {
  return RecordJson(pattern, verdict, include_timing).dump(2);
}

std::string ReportToJson(const CorpusReport& report, bool include_timing) {
  json j;
  j["schema"] = "rxscan-report/" + std::to_string(kReportSchemaVersion);
  json records = json::array();
  for (const CorpusRecord& r : report.records)
    records.push_back(RecordJson(r.pattern, r.verdict, include_timing));
  j["records"] = std::move(records);
  const CorpusSummary& s = report.summary;
  j["summary"] = json{{"total", s.total},
                      {"analyzable", s.analyzable},
                      {"uses_kleene", s.uses_kleene},
                      {"vulnerable", s.vulnerable},
                      {"pumpable_only", s.pumpable_only},
                      {"safe", s.safe},
                      {"unsupported", s.unsupported},
                      {"max_hfpi_steps", s.max_hfpi_steps}};
  if (include_timing) j["summary"]["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

std::string ReportToText(const CorpusReport& report) {
  std::ostringstream out;
  for (const CorpusRecord& r : report.records) {
    const Verdict& v = r.verdict;
    std::string origin = r.pattern.Origin();
    out << (origin.empty() ? "-" : origin) << ": " << v.Name() << "  "
        << EscapeBytes(r.pattern.text) << "\n";
    if (const auto* vul = std::get_if<Vulnerable>(&v.classification)) {
      const AttackTriple& t = vul->triple;
      out << "    attack: prefix=\"" << EscapeBytes(t.prefix) << "\" pump=\""
          << EscapeBytes(t.pump) << "\" suffix=\"" << EscapeBytes(t.suffix)
          << "\" at " << ToString(t.kleene) << "\n";
      if (vul->report) {
        const VerificationReport& rep = *vul->report;
        out << "    verified: " << (rep.confirmed ? "yes" : "no");
        if (!rep.steps.empty())
          out << ", steps " << rep.steps.front() << " (n=" << rep.pumps.front()
              << ") .. " << rep.steps.back() << " (n=" << rep.pumps.back()
              << ")";
        if (rep.exhausted_at)
          out << ", budget exhausted at n=" << *rep.exhausted_at;
        out << "\n";
      } else {
        out << "    verified: skipped\n";
      }
    } else if (const auto* po = std::get_if<PumpableOnly>(&v.classification)) {
      out << "    pump=\"" << EscapeBytes(po->pump) << "\" at "
          << ToString(po->kleene) << ", " << po->reason << "\n";
    } else if (const auto* s = std::get_if<Safe>(&v.classification)) {
      out << "    " << s->reason << "\n";
    } else if (const auto* u = std::get_if<Unsupported>(&v.classification)) {
      out << "    " << u->construct << ": " << u->detail << "\n";
    }
  }
  const CorpusSummary& s = report.summary;
  char wall[64];
  std::snprintf(wall, sizeof(wall), "%.1f ms", report.wall_ms);
  out << "\nTotal patterns           " << s.total
      << "\nAnalyzable               " << s.analyzable
      << "\nUses Kleene star         " << s.uses_kleene
      << "\nVulnerable (attack)      " << s.vulnerable
      << "\nPumpable Kleene only     " << s.pumpable_only
      << "\nNo pumpable Kleene       " << s.safe
      << "\nUnsupported              " << s.unsupported
      << "\nMax HFPI steps           " << s.max_hfpi_steps
      << "\nWall time                " << wall << "\n";
  return out.str();
}

namespace {

json ErrorJson(const ParseError& e) {
  return json{{"kind", ParseErrorKindName(e.kind)},
              {"unsupported", UnsupportedKindName(e.unsupported)},
              {"offset", e.offset},
              {"message", e.ToString()}};
}

}  // namespace

std::string ParseToJson(const SourcePattern& pattern) {
  ParseResult parsed = Parse(pattern);
  json j{{"pattern", EscapeBytes(pattern.text)}, {"ok", parsed.ok()}};
  j["warnings"] = parsed.warnings();
  if (!parsed.ok()) {
    j["error"] = ErrorJson(parsed.error());
    return j.dump(2);
  }
  ExprArena arena = ExprArena::Build(*parsed.ast());
  j["ast"] = DebugString(*parsed.ast());
  j["normalized"] = ToPattern(*parsed.ast());
  json nodes = json::array();
  for (uint32_t i = 0; i < arena.size(); ++i) {
    NodeId id{i};
    const ArenaNode& n = arena.node(id);
    json e{{"id", ToString(id)}, {"kind", NodeKindName(n.kind)}};
    if (!n.left.IsTerminal()) e["left"] = ToString(n.left);
    if (!n.right.IsTerminal()) e["right"] = ToString(n.right);
    if (n.kind == NodeKind::kConstant) e["chars"] = n.chars.ToPattern();
    if (n.kind == NodeKind::kStar) e["greedy"] = n.greedy;
    e["kont"] = ToString(arena.kont(id));
    nodes.push_back(std::move(e));
  }
  j["nodes"] = std::move(nodes);
  json stars = json::array();
  for (NodeId s : arena.KleeneNodes()) stars.push_back(ToString(s));
  j["kleene"] = std::move(stars);
  return j.dump(2);
}

std::string SimulateToJson(const SourcePattern& pattern,
                           std::string_view input, uint64_t budget,
                           MatchMode mode) {
  ParseResult parsed = Parse(pattern);
  json j{{"pattern", EscapeBytes(pattern.text)}, {"input", EscapeBytes(input)}};
  if (!parsed.ok()) {
    j["error"] = ErrorJson(parsed.error());
    return j.dump(2);
  }
  ExprArena arena = ExprArena::Build(*parsed.ast());
  MatchOutcome m = PwfRun(arena, input, budget, mode);
  j["status"] = MatchStatusName(m.status);
  if (m.status == MatchStatus::kMatched) j["match_length"] = m.match_length;
  j["steps"] = m.steps;
  return j.dump(2);
}

std::string PumpableToJson(const SourcePattern& pattern, uint64_t step_cap) {
  ParseResult parsed = Parse(pattern);
  json j{{"pattern", EscapeBytes(pattern.text)}};
  if (!parsed.ok()) {
    j["error"] = ErrorJson(parsed.error());
    return j.dump(2);
  }
  ExprArena arena = ExprArena::Build(*parsed.ast());
  Analyzer analyzer(arena);
  json results = json::array();
  for (NodeId star : arena.KleeneNodes()) {
    PumpResult r = analyzer.FindPumpable(star, step_cap);
    json e{{"kleene", ToString(star)}, {"hfpi_steps", HfpiSteps(r)}};
    if (const auto* w = std::get_if<PumpableWitness>(&r)) {
      e["status"] = "pumpable";
      e["pump"] = EscapeBytes(w->w);
    } else if (std::holds_alternative<NotPumpable>(r)) {
      e["status"] = "not-pumpable";
    } else {
      e["status"] = "cap-exceeded";
    }
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  return j.dump(2);
}

std::string SyntaxReportToJson() {
  const SyntaxReport& report = SupportedSyntaxReport();
  auto items = [](const std::vector<SyntaxItem>& list) {
    json out = json::array();
    for (const SyntaxItem& s : list)
      out.push_back(
          json{{"name", s.name}, {"example", s.example}, {"note", s.note}});
    return out;
  };
  json j{{"version", report.version},
         {"supported", items(report.supported)},
         {"unsupported", items(report.unsupported)}};
  return j.dump(2);
}

}  // namespace rxscan
