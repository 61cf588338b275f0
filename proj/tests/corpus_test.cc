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

#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

namespace rxscan {
namespace {

using json = nlohmann::json;

constexpr char kClock[] = "^(([01][0-9]|[012][0-3]):([0-5][0-9]))*$";
constexpr char kZip[] =
    "^([a-zA-z]:((\\\\([-*\\.*\\w+\\s+\\d+]+)|(\\w+)\\\\)+)(\\w+.zip)|(\\w+.ZIP))$";

TEST(IngestLinesTest, SkipsBlankAndComments) {
  std::istringstream in("a*\n# comment\n\nb+\r\n(c|d)\n");
  std::vector<SourcePattern> p = IngestLines(in, "f.txt");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].text, "a*");
  EXPECT_EQ(p[1].text, "b+");
  EXPECT_EQ(p[1].line, 4u);
  EXPECT_EQ(p[2].Origin(), "f.txt:5");
  std::istringstream empty("");
  EXPECT_TRUE(IngestLines(empty).empty());
}

TEST(IngestLinesTest, RecordsLineNumbers) {
  std::istringstream in("x\ny\n\n#\n\n\n^a*$\n");
  std::vector<SourcePattern> p = IngestLines(in);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[2].text, "^a*$");
  EXPECT_EQ(p[2].line, 7u);
}

TEST(IngestSnortTest, ExtractsPcreOptions) {
  std::istringstream in(
      "alert tcp any any -> any 80 (msg:\"x\"; pcre:\"/^x+$/\"; sid:1;)\n"
      "alert tcp any any -> any 80 (msg:\"no pcre\"; sid:2;)\n"
      "alert tcp any any -> any 80 (pcre:\"/a\\/b/i\"; sid:3;)\n"
      "# alert tcp (pcre:\"/commented/\";)\n"
      "alert tcp (pcre:\"!/neg\\\"q\\;r\\d/smU\"; pcre: \"/two/\";)\n"
      "alert tcp (pcre:\"broken\";)\n");
  std::vector<std::string> warnings;
  std::vector<SourcePattern> p = IngestSnort(in, "r.rules", &warnings);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0].text, "^x+$");
  EXPECT_EQ(p[0].line, 1u);
  EXPECT_EQ(p[1].text, "a/b");
  EXPECT_TRUE(p[1].flags.case_insensitive);
  EXPECT_EQ(p[2].text, "neg\"q;r\\d");
  EXPECT_EQ(p[2].ignored_flags, "smU");
  EXPECT_EQ(p[3].text, "two");
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("r.rules:6"), std::string::npos);
}

TEST(RunTest, ClockAndZipPatterns) {
  std::vector<SourcePattern> patterns{SourcePattern::Raw(kClock),
                                      SourcePattern::Raw(kZip)};
  CorpusReport r = rxscan::Run(AnalysisConfig{}, patterns);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_TRUE(r.records[0].verdict.IsVulnerable());
  EXPECT_TRUE(r.records[1].verdict.IsVulnerable());
  EXPECT_EQ(r.summary.vulnerable, 2u);
  EXPECT_EQ(r.summary.total, 2u);
}

TEST(RunTest, EmptyInput) {
  CorpusReport r = rxscan::Run(AnalysisConfig{}, {});
  EXPECT_EQ(r.summary, CorpusSummary{});
}

std::vector<SourcePattern> Mixed() {
  std::vector<SourcePattern> out;
  for (const char* p : {kClock, "abc", "(a|a)*", "a(?=b)", "x*y*", "(a+)+b",
                        "a(b", "[0-9]+", "(\\d|\\w)+$", "^(a|ab)*c$"})
    out.push_back(SourcePattern::Raw(p));
  return out;
}

TEST(RunTest, OrderAndSummaryConsistency) {
  std::vector<SourcePattern> patterns = Mixed();
  CorpusReport serial = rxscan::Run(AnalysisConfig{}, patterns, 1);
  CorpusReport parallel = rxscan::Run(AnalysisConfig{}, patterns, 4);
  ASSERT_EQ(parallel.records.size(), patterns.size());
  for (size_t i = 0; i < patterns.size(); ++i)
    EXPECT_EQ(parallel.records[i].pattern.text, patterns[i].text);
  EXPECT_EQ(Summarize(parallel.records), parallel.summary);
  EXPECT_EQ(serial.summary, parallel.summary);
  const CorpusSummary& s = serial.summary;
  EXPECT_EQ(s.total, 10u);
  EXPECT_EQ(s.unsupported, 2u);
  EXPECT_EQ(s.analyzable, 8u);
  EXPECT_EQ(s.vulnerable + s.pumpable_only + s.safe, s.analyzable);
  EXPECT_EQ(s.uses_kleene, 7u);
}

TEST(ReportTest, JsonIsDeterministicWithoutTiming) {
  std::vector<SourcePattern> patterns = Mixed();
  std::string a = ReportToJson(rxscan::Run(AnalysisConfig{}, patterns, 1), false);
  std::string b = ReportToJson(rxscan::Run(AnalysisConfig{}, patterns, 3), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("duration_ms"), std::string::npos);
}

TEST(ReportTest, JsonShape) {
  CorpusReport r = rxscan::Run(AnalysisConfig{}, Mixed(), 1);
  json j = json::parse(ReportToJson(r));
  EXPECT_EQ(j["schema"], "rxscan-report/1");
  ASSERT_EQ(j["records"].size(), 10u);
  const json& clock = j["records"][0];
  EXPECT_EQ(clock["verdict"], "vulnerable");
  EXPECT_EQ(clock["triple"]["pump"].get<std::string>().size(), 5u);
  EXPECT_TRUE(clock["verification"]["confirmed"].get<bool>());
  EXPECT_EQ(j["records"][3]["construct"], "look-around");
  EXPECT_EQ(j["summary"]["total"], 10);
  EXPECT_TRUE(j["summary"].contains("wall_ms"));
  // Recompute the summary from the records.
  size_t vulnerable = 0;
  for (const json& rec : j["records"]) vulnerable += rec["verdict"] == "vulnerable";
  EXPECT_EQ(j["summary"]["vulnerable"], vulnerable);
}

TEST(ReportTest, NonPrintableBytesAreEscaped) {
  std::vector<SourcePattern> patterns{SourcePattern::Raw("^(\\x01|\\x01)*$")};
  CorpusReport r = rxscan::Run(AnalysisConfig{}, patterns, 1);
  ASSERT_TRUE(r.records[0].verdict.IsVulnerable());
  json j = json::parse(ReportToJson(r));
  EXPECT_EQ(j["records"][0]["triple"]["pump"], "\\x01");
  std::string text = ReportToText(r);
  EXPECT_NE(text.find("pump=\"\\x01\""), std::string::npos) << text;
  EXPECT_NE(text.find("Total patterns"), std::string::npos);
}

TEST(ReportTest, HelpersProduceJson) {
  SourcePattern p = SourcePattern::Raw("(a|b)*c");
  json parsed = json::parse(ParseToJson(p));
  EXPECT_EQ(parsed["nodes"].size(), 6u);
  EXPECT_EQ(parsed["nodes"][1]["kont"], "p5");
  json sim = json::parse(SimulateToJson(p, "abc", 1000, MatchMode::kPrefix));
  EXPECT_EQ(sim["status"], "matched");
  EXPECT_EQ(sim["match_length"], 3);
  json pump = json::parse(PumpableToJson(SourcePattern::Raw("(a|a)*"), 100));
  EXPECT_EQ(pump["results"][0]["pump"], "a");
  json syntax = json::parse(SyntaxReportToJson());
  EXPECT_EQ(syntax["version"], 1);
  json bad = json::parse(ParseToJson(SourcePattern::Raw("a(")));
  EXPECT_FALSE(bad["ok"].get<bool>());
}

}  // namespace
}  // namespace rxscan
