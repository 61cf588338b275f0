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
// Python extension module. Results cross the boundary as JSON text and are
// decoded by the rxscan package.

#include <stdexcept>
#include <string>
#include <vector>

#include "pybind11/pybind11.h"
#include "pybind11/stl.h"
#include "rxscan/attack.h"
#include "rxscan/corpus.h"

namespace py = pybind11;

namespace rxscan {
namespace {

AnalysisConfig MakeConfig(uint64_t hfpi_cap, uint64_t budget, int pump_max,
                          double threshold, int suffix_trials, bool verify,
                          bool full_match) {
  AnalysisConfig c;
  c.hfpi_cap = hfpi_cap;
  c.budget = budget;
  c.pump_max = pump_max;
  c.threshold = threshold;
  c.suffix_trials = suffix_trials;
  c.verify = verify;
  c.mode = full_match ? MatchMode::kFull : MatchMode::kPrefix;
  if (std::string error = c.Validate(); !error.empty())
    throw std::invalid_argument(error);
  return c;
}

MatchMode ModeOf(bool full_match) {
  return full_match ? MatchMode::kFull : MatchMode::kPrefix;
}

}  // namespace
}  // namespace rxscan

PYBIND11_MODULE(_core, m) {
  using namespace rxscan;
  m.doc() = "Static detection of exponential backtracking in regexes.";

  m.def(
      "parse",
      [](const std::string& pattern, const std::string& flags) {
        return ParseToJson(SourcePattern::WithFlags(pattern, flags));
      },
      py::arg("pattern"), py::arg("flags") = "");

  m.def(
      "simulate",
      [](const std::string& pattern, py::bytes input, uint64_t budget,
         bool full_match, const std::string& flags) {
        std::string in = input;
        py::gil_scoped_release release;
        return SimulateToJson(SourcePattern::WithFlags(pattern, flags), in,
                              budget, ModeOf(full_match));
      },
      py::arg("pattern"), py::arg("input"), py::arg("budget") = 1000000,
      py::arg("full_match") = false, py::arg("flags") = "");

  m.def(
      "find_pumpable",
      [](const std::string& pattern, uint64_t hfpi_cap,
         const std::string& flags) {
        py::gil_scoped_release release;
        return PumpableToJson(SourcePattern::WithFlags(pattern, flags), hfpi_cap);
      },
      py::arg("pattern"), py::arg("hfpi_cap") = kDefaultHfpiCap,
      py::arg("flags") = "");

  m.def(
      "classify",
      [](const std::string& pattern, const std::string& flags,
         uint64_t hfpi_cap, uint64_t budget, int pump_max, double threshold,
         int suffix_trials, bool verify, bool full_match) {
        AnalysisConfig config = MakeConfig(hfpi_cap, budget, pump_max,
                                           threshold, suffix_trials, verify,
                                           full_match);
        SourcePattern p = SourcePattern::WithFlags(pattern, flags);
        py::gil_scoped_release release;
        return VerdictToJson(p, Classify(p, config), false);
      },
      py::arg("pattern"), py::arg("flags") = "",
      py::arg("hfpi_cap") = kDefaultHfpiCap, py::arg("budget") = 1000000,
      py::arg("pump_max") = 20, py::arg("threshold") = 1.8,
      py::arg("suffix_trials") = 64, py::arg("verify") = true,
      py::arg("full_match") = false);

  m.def(
      "analyze",
      [](const std::vector<std::string>& patterns, uint64_t hfpi_cap,
         uint64_t budget, int pump_max, double threshold, int suffix_trials,
         bool verify, bool full_match, unsigned threads) {
        AnalysisConfig config = MakeConfig(hfpi_cap, budget, pump_max,
                                           threshold, suffix_trials, verify,
                                           full_match);
        std::vector<SourcePattern> sources;
        for (const std::string& p : patterns)
          sources.push_back(SourcePattern::FromDelimited(p));
        py::gil_scoped_release release;
        return ReportToJson(Run(config, sources, threads), false);
      },
      py::arg("patterns"), py::arg("hfpi_cap") = kDefaultHfpiCap,
      py::arg("budget") = 1000000, py::arg("pump_max") = 20,
      py::arg("threshold") = 1.8, py::arg("suffix_trials") = 64,
      py::arg("verify") = true, py::arg("full_match") = false,
      py::arg("threads") = 0);

  m.def("syntax", &SyntaxReportToJson);
}
