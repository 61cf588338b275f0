# Copyright 2026 The rxscan Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Static detection of exponential backtracking in regular expressions.

Every function returns plain dicts decoded from the JSON the native
library produces; the shapes match the rxscan command-line tool.
"""

import json

from . import _core

__all__ = ["parse", "simulate", "find_pumpable", "classify", "analyze",
           "syntax"]


def parse(pattern, flags=""):
  """Parse tree, node table with continuations, and star list."""
  return json.loads(_core.parse(pattern, flags))


def simulate(pattern, data, budget=1000000, full_match=False, flags=""):
  """Runs the backtracking matcher on data (bytes or str)."""
  if isinstance(data, str):
    data = data.encode("latin-1")
  return json.loads(_core.simulate(pattern, data, budget, full_match, flags))


def find_pumpable(pattern, hfpi_cap=100000, flags=""):
  """Pumpable-string search result for every star of the pattern."""
  return json.loads(_core.find_pumpable(pattern, hfpi_cap, flags))


def classify(pattern, flags="", **config):
  """Verdict for one pattern; config keys as in analyze."""
  return json.loads(_core.classify(pattern, flags, **config))


def analyze(patterns, **config):
  """Report for a list of patterns ("/body/flags" or raw text).

  Config keys: hfpi_cap, budget, pump_max, threshold, suffix_trials,
  verify, full_match, threads.
  """
  return json.loads(_core.analyze(list(patterns), **config))


def syntax():
  """Supported and unsupported regex constructs."""
  return json.loads(_core.syntax())
