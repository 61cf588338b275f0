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
#ifndef RXSCAN_ANALYZER_H_
#define RXSCAN_ANALYZER_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rxscan/arena.h"
#include "rxscan/charset.h"

namespace rxscan {

// Occurrences of a node beyond this count carry no extra information: two
// already show that a frontier is ambiguous.
inline constexpr int kMultiplicityCap = 2;

inline constexpr uint64_t kDefaultHfpiCap = 100000;

// A frontier: the sub-expressions still to be matched, one entry per
// distinct way of reaching them.
using Frontier = std::vector<NodeId>;

// (w, P): the frontier P reached from the star body after consuming w.
struct WpFrame {
  std::string w;
  Frontier P;
};

// Canonical frontier keys seen so far during one search. Insert-only.
class History {
 public:
  // Returns false if the key of P was already present.
  bool Insert(const Frontier& P);
  bool Contains(const Frontier& P) const;
  size_t size() const { return keys_.size(); }

  static std::vector<NodeId> Key(const Frontier& P);

 private:
  std::set<std::vector<NodeId>> keys_;
};

struct PumpableWitness {
  NodeId kleene;
  std::string w;  // non-empty; at least two paths from the body back to kleene
  uint64_t hfpi_steps = 0;
};

struct NotPumpable {
  NodeId kleene;
  uint64_t hfpi_steps = 0;
};

struct CapExceeded {
  NodeId kleene;
  uint64_t hfpi_steps = 0;
};

using PumpResult = std::variant<PumpableWitness, NotPumpable, CapExceeded>;

uint64_t HfpiSteps(const PumpResult& result);

// Per-arena analysis state: memoized zero-width closures. Not thread-safe;
// use one instance per thread.
class Analyzer {
 public:
  explicit Analyzer(const ExprArena& arena);

  const ExprArena& arena() const { return arena_; }

  // Constant nodes reachable from p without consuming input, once per
  // distinct path (up to kMultiplicityCap), in depth-first order trying a
  // star body before its exit and an alternation's left before its right.
  // A star is not re-entered before a byte has been consumed; if p is a
  // star body, that star counts as just entered. Anchors are not crossed.
  const Frontier& Evolve(NodeId p);

  // As Evolve, for a node reached by consuming a byte: no star counts as
  // entered yet. Differs from Evolve only for star bodies.
  const Frontier& EvolveAfterByte(NodeId p);

  // One-byte derivative of a frontier. Non-constant entries are expanded
  // with EvolveAfterByte; the result keeps kMultiplicityCap occurrences of
  // each id at most.
  Frontier Derive(uint8_t a, std::span<const NodeId> P);

  // Bytes for which Derive(a, P) is non-empty.
  CharSet RelevantSymbols(std::span<const NodeId> P);

  // Breadth-first search for a string that can be matched by the body of
  // `kleene` in two different ways, each returning to `kleene`.
  PumpResult FindPumpable(NodeId kleene, uint64_t step_cap = kDefaultHfpiCap);

  // Number of zero-width paths (capped) from `from`, entered right after a
  // byte was consumed, to the first arrival at `target`.
  int EpsilonPathsTo(NodeId from, NodeId target);

 private:
  using Guard = std::vector<uint32_t>;  // sorted star ids
  using Counts = std::vector<std::pair<NodeId, int>>;

  const Counts& Closure(NodeId v, const Guard& guard);
  int PathsTo(NodeId v, const Guard& guard, NodeId target);
  void Expand(const Frontier& P, std::vector<NodeId>* constants);
  bool IsWitness(const Frontier& P, NodeId kleene);

  const ExprArena& arena_;
  std::map<std::pair<uint32_t, Guard>, Counts> closure_memo_;
  const Frontier& CachedClosure(NodeId p, bool seeded);

  std::vector<Frontier> evolve_cache_[2];
  std::vector<bool> evolve_done_[2];
  std::map<std::tuple<uint32_t, uint32_t, Guard>, int> paths_memo_;
};

// Convenience wrappers building a throwaway Analyzer.
Frontier Evolve(const ExprArena& arena, NodeId p);
Frontier Derive(const ExprArena& arena, uint8_t a, std::span<const NodeId> P);
CharSet RelevantSymbols(const ExprArena& arena, std::span<const NodeId> P);
PumpResult FindPumpable(const ExprArena& arena, NodeId kleene,
                        uint64_t step_cap = kDefaultHfpiCap);

// Keeps the first kMultiplicityCap occurrences of every id.
Frontier CapMultiplicity(const Frontier& P);

}  // namespace rxscan

#endif  // RXSCAN_ANALYZER_H_
