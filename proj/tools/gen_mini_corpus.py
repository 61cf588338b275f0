#!/usr/bin/env python3
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
"""Writes the labelled mini-corpus used by the acceptance suite.

Every pattern is built from a family whose label is known by construction:

  vulnerable     a star with an ambiguous body followed by a tail that some
                 input cannot satisfy
  pumpable-only  an ambiguous star with nothing after it that can fail
  safe           only stars whose bodies can match a string in one way
  unsupported    back-references and look-around

Output: <out>/mini_corpus.txt (one pattern per line) and
<out>/mini_corpus_labels.txt (one label per line, same order).
"""

import argparse
import os
import random

SEED = 20260117
TOTAL = 1000

FIXED = [
    ("vulnerable", r"^(([01][0-9]|[012][0-3]):([0-5][0-9]))*$"),
    ("vulnerable",
     r"^([a-zA-z]:((\\([-*\.*\w+\s+\d+]+)|(\w+)\\)+)(\w+.zip)|(\w+.ZIP))$"),
    ("vulnerable", r"(\w+\d+)+C"),
    ("vulnerable", r"^(a+)+$"),
    ("vulnerable", r"(a|b|ab)*c"),
    ("vulnerable", r"a**$"),
    ("pumpable-only", r"(a|a)*"),
    ("pumpable-only", r"(a*)*"),
    ("safe", r"(a?)*"),
    ("safe", r"x*y*"),
    ("unsupported", r"(a+)\1"),
    ("unsupported", r"a(?=b)"),
]

# Character pools, each with one member.
POOLS = [
    ("a", "a"),
    ("x", "x"),
    ("[0-9]", "7"),
    (r"\d", "3"),
    ("[a-f]", "c"),
    (r"\w", "k"),
    ("[A-Z]", "Q"),
    (r"[^,]", "m"),
]
WORDS = ["GET", "id", "user", "key", "x-", "abc", "tok", "q", "z9", "pre"]
TAILS = ["$", "!", ";", "END", r"\.", "#", "@"]


def esc(s):
  return "".join("\\" + c if c in ".^$*+?()[]{}|\\" else c for c in s)


def ambiguous_body(rng):
  """A star whose body matches some string in two or more ways."""
  cls, member = rng.choice(POOLS)
  shape = rng.randrange(7)
  if shape == 0:
    return "(%s+)+" % cls
  if shape == 1:
    return "(%s|%s)*" % (cls, member)
  if shape == 2:
    return "(%s*)*" % cls
  if shape == 3:
    return "(%s|%s%s)+" % (cls, cls, cls)
  if shape == 4:
    return "(%s+%s)*" % (cls, cls)
  if shape == 5:
    return "(%s{1,3})+" % cls
  return "(%s?%s)+" % (cls, cls)


def prefix(rng):
  r = rng.random()
  if r < 0.3:
    return "^"
  if r < 0.6:
    return "^" + esc(rng.choice(WORDS))
  if r < 0.8:
    return esc(rng.choice(WORDS))
  return ""


def failing_tail(rng):
  # Any tail that some input fails to satisfy.
  return rng.choice(TAILS)


def vulnerable(rng):
  body = ambiguous_body(rng)
  return prefix(rng) + body + failing_tail(rng)


def pumpable_only(rng):
  body = ambiguous_body(rng)
  # Nothing after the star, and no start-of-input requirement that a
  # suffix could break.
  return rng.choice(["", esc(rng.choice(WORDS))]) + body


def safe_piece(rng):
  k = rng.randrange(6)
  if k == 0:
    return esc(rng.choice(WORDS))
  if k == 1:
    return rng.choice(POOLS)[0] + rng.choice(["+", "*", "?"])
  if k == 2:
    lo = rng.randrange(0, 4)
    return "%s{%d,%d}" % (rng.choice(POOLS)[0], lo, lo + rng.randrange(0, 4))
  if k == 3:
    return "(%s)*" % esc(rng.choice(WORDS))
  if k == 4:
    a, b = rng.sample(["ab", "cd", "x", "yz", "1", "Q"], 2)
    return "(%s|%s)*" % (a, b)
  return "[%s]" % "".join(sorted(rng.sample("abcxyz0129", 3)))


def safe(rng):
  n = rng.randrange(1, 5)
  body = "".join(safe_piece(rng) for _ in range(n))
  return rng.choice(["", "^"]) + body + rng.choice(["", "$"])


def unsupported(rng):
  k = rng.randrange(4)
  w = esc(rng.choice(WORDS))
  if k == 0:
    return "(%s+)\\1" % rng.choice(POOLS)[0]
  if k == 1:
    return "%s(?=%s)" % (w, esc(rng.choice(WORDS)))
  if k == 2:
    return "(?<!%s)%s" % (w, esc(rng.choice(WORDS)))
  return "(?!%s)\\w+" % w


def main():
  ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  ap.add_argument("--out", default=os.path.join(
      os.path.dirname(__file__), "..", "tests", "data"))
  args = ap.parse_args()
  rng = random.Random(SEED)
  rows = list(FIXED)
  seen = {p for _, p in rows}
  makers = [("vulnerable", vulnerable, 0.35), ("pumpable-only", pumpable_only,
            0.15), ("safe", safe, 0.42), ("unsupported", unsupported, 0.08)]
  while len(rows) < TOTAL:
    r = rng.random()
    for label, fn, weight in makers:
      if r < weight:
        break
      r -= weight
    p = fn(rng)
    if p in seen or p.startswith("#"):
      continue
    seen.add(p)
    rows.append((label, p))
  os.makedirs(args.out, exist_ok=True)
  with open(os.path.join(args.out, "mini_corpus.txt"), "w") as f:
    f.writelines(p + "\n" for _, p in rows)
  with open(os.path.join(args.out, "mini_corpus_labels.txt"), "w") as f:
    f.writelines(l + "\n" for l, _ in rows)


if __name__ == "__main__":
  main()
