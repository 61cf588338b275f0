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
#include "rxscan/analyzer.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "rxscan/machine.h"

namespace rxscan {

std::vector<NodeId> History::Key(const Frontier& P) {
  std::vector<NodeId> key = CapMultiplicity(P);
  std::sort(key.begin(), key.end());
  return key;
}

bool History::Insert(const Frontier& P) { return keys_.insert(Key(P)).second; }

bool History::Contains(const Frontier& P) const {
  return keys_.count(Key(P)) > 0;
}

uint64_t HfpiSteps(const PumpResult& result) {
  return std::visit([](const auto& r) { return r.hfpi_steps; }, result);
}

Frontier CapMultiplicity(const Frontier& P) {
  std::unordered_map<uint32_t, int> seen;
  Frontier out;
  out.reserve(P.size());
  for (NodeId id : P)
    if (++seen[id.value] <= kMultiplicityCap) out.push_back(id);
  return out;
}

namespace {

void MergeCounts(std::vector<std::pair<NodeId, int>>* into,
                 const std::vector<std::pair<NodeId, int>>& from) {
  for (const auto& [id, n] : from) {
    auto it = std::find_if(into->begin(), into->end(),
                           [id = id](const auto& e) { return e.first == id; });
    if (it == into->end())
      into->emplace_back(id, n);
    else
      it->second = std::min(kMultiplicityCap, it->second + n);
  }
}

}  // namespace

Analyzer::Analyzer(const ExprArena& arena)
    : arena_(arena),
      evolve_cache_{std::vector<Frontier>(arena.size()),
                    std::vector<Frontier>(arena.size())},
      evolve_done_{std::vector<bool>(arena.size(), false),
                   std::vector<bool>(arena.size(), false)} {}

// The (node, guard) graph is acyclic: every cycle of zero-width moves in
// the expression tree passes through a star, and a star adds itself to the
// guard before entering its body. Plain recursion therefore terminates.
const Analyzer::Counts& Analyzer::Closure(NodeId v, const Guard& guard) {
  auto key = std::make_pair(v.value, guard);
  auto it = closure_memo_.find(key);
  if (it != closure_memo_.end()) return it->second;

  Counts out;
  if (!v.IsTerminal()) {
    const ArenaNode& n = arena_.node(v);
    switch (n.kind) {
      case NodeKind::kConstant:
        out.emplace_back(v, 1);
        break;
      case NodeKind::kEpsilon:
        out = Closure(arena_.kont(v), guard);
        break;
      case NodeKind::kConcat:
        out = Closure(n.left, guard);
        break;
      case NodeKind::kAlt:
        out = Closure(n.left, guard);
        MergeCounts(&out, Closure(n.right, guard));
        break;
      case NodeKind::kStar: {
        if (std::binary_search(guard.begin(), guard.end(), v.value)) break;
        Guard inner = guard;
        inner.insert(std::upper_bound(inner.begin(), inner.end(), v.value),
                     v.value);
        out = Closure(n.left, inner);
        MergeCounts(&out, Closure(arena_.kont(v), guard));
        break;
      }
      case NodeKind::kAnchorStart:
      case NodeKind::kAnchorEnd:
        break;
    }
  }
  return closure_memo_.emplace(std::move(key), std::move(out)).first->second;
}

const Frontier& Analyzer::CachedClosure(NodeId p, bool seeded) {
  if (p.IsTerminal()) {
    static const Frontier kEmpty;
    return kEmpty;
  }
  Frontier& slot = evolve_cache_[seeded][p.value];
  if (evolve_done_[seeded][p.value]) return slot;
  Guard seed;
  NodeId star = arena_.EnclosingStarOfBody(p);
  if (seeded && !star.IsTerminal()) seed.push_back(star.value);
  Frontier out;
  for (const auto& [id, n] : Closure(p, seed))
    for (int i = 0; i < n; ++i) out.push_back(id);
  evolve_done_[seeded][p.value] = true;
  slot = std::move(out);
  return slot;
}

const Frontier& Analyzer::Evolve(NodeId p) { return CachedClosure(p, true); }

const Frontier& Analyzer::EvolveAfterByte(NodeId p) {
  return CachedClosure(p, false);
}

Frontier Analyzer::Derive(uint8_t a, std::span<const NodeId> P) {
  Frontier out;
  auto step = [&](NodeId c) {
    if (arena_.node(c).chars.Contains(a)) out.push_back(arena_.kont(c));
  };
  for (NodeId h : P) {
    if (h.IsTerminal()) continue;
    if (arena_.IsConstant(h)) {
      step(h);
    } else {
      for (NodeId c : EvolveAfterByte(h)) step(c);
    }
  }
  return CapMultiplicity(out);
}

void Analyzer::Expand(const Frontier& P, std::vector<NodeId>* constants) {
  for (NodeId h : P) {
    if (h.IsTerminal()) continue;
    if (arena_.IsConstant(h)) {
      constants->push_back(h);
    } else {
      const Frontier& e = EvolveAfterByte(h);
      constants->insert(constants->end(), e.begin(), e.end());
    }
  }
}

CharSet Analyzer::RelevantSymbols(std::span<const NodeId> P) {
  std::vector<NodeId> constants;
  Expand(Frontier(P.begin(), P.end()), &constants);
  CharSet out;
  for (NodeId c : constants) out.AddSet(arena_.node(c).chars);
  return out;
}

int Analyzer::PathsTo(NodeId v, const Guard& guard, NodeId target) {
  if (v == target) return 1;
  if (v.IsTerminal()) return 0;
  auto key = std::make_tuple(v.value, target.value, guard);
  auto it = paths_memo_.find(key);
  if (it != paths_memo_.end()) return it->second;

  int out = 0;
  const ArenaNode& n = arena_.node(v);
  switch (n.kind) {
    case NodeKind::kEpsilon:
      out = PathsTo(arena_.kont(v), guard, target);
      break;
    case NodeKind::kConcat:
      out = PathsTo(n.left, guard, target);
      break;
    case NodeKind::kAlt:
      out = PathsTo(n.left, guard, target) + PathsTo(n.right, guard, target);
      break;
    case NodeKind::kStar: {
      if (std::binary_search(guard.begin(), guard.end(), v.value)) break;
      Guard inner = guard;
      inner.insert(std::upper_bound(inner.begin(), inner.end(), v.value),
                   v.value);
      out = PathsTo(n.left, inner, target) +
            PathsTo(arena_.kont(v), guard, target);
      break;
    }
    case NodeKind::kConstant:
    case NodeKind::kAnchorStart:
    case NodeKind::kAnchorEnd:
      break;
  }
  out = std::min(out, kMultiplicityCap);
  paths_memo_.emplace(std::move(key), out);
  return out;
}

int Analyzer::EpsilonPathsTo(NodeId from, NodeId target) {
  return PathsTo(from, Guard{}, target);
}

bool Analyzer::IsWitness(const Frontier& P, NodeId kleene) {
  int total = 0;
  for (NodeId q : P) {
    total += EpsilonPathsTo(q, kleene);
    if (total >= 2) return true;
  }
  return false;
}

namespace {

// Splits `universe` into classes of bytes that no set in `sets`
// distinguishes, ordered by smallest member.
std::vector<CharSet> ByteClasses(const CharSet& universe,
                                 const std::vector<CharSet>& sets) {
  std::vector<CharSet> classes;
  if (!universe.Empty()) classes.push_back(universe);
  for (const CharSet& s : sets) {
    std::vector<CharSet> next;
    next.reserve(classes.size() * 2);
    for (const CharSet& c : classes) {
      CharSet in = c.Intersect(s);
      CharSet out = c.Minus(s);
      if (!in.Empty()) next.push_back(in);
      if (!out.Empty()) next.push_back(out);
    }
    classes = std::move(next);
  }
  std::sort(classes.begin(), classes.end(),
            [](const CharSet& a, const CharSet& b) {
              return *a.Min() < *b.Min();
            });
  return classes;
}

}  // namespace

PumpResult Analyzer::FindPumpable(NodeId kleene, uint64_t step_cap) {
  if (!arena_.IsStar(kleene))
    throw std::invalid_argument("FindPumpable: not a star node");
  const NodeId body = arena_.node(kleene).left;

  // Frames are kept for the whole run so that w can be rebuilt from the
  // parent chain; P is released once a frame has been expanded.
  struct Node {
    int64_t parent;
    uint8_t byte;
    size_t depth;
    Frontier P;
  };
  std::vector<Node> frames;
  frames.push_back({-1, 0, 0, Evolve(body)});
  auto text = [&](int64_t i) {
    std::string w(frames[i].depth, '\0');
    for (; frames[i].parent >= 0; i = frames[i].parent)
      w[frames[i].depth - 1] = static_cast<char>(frames[i].byte);
    return w;
  };

  History history;
  std::deque<int64_t> queue{0};
  uint64_t steps = 0;
  std::vector<NodeId> constants;
  std::vector<CharSet> sets;

  while (!queue.empty()) {
    int64_t head = queue.front();
    if (frames[head].depth > 0 && IsWitness(frames[head].P, kleene)) {
      std::string w = text(head);
      if (CountPathsTo(arena_, body, w, kleene, 2) >= 2)
        return PumpableWitness{kleene, std::move(w), steps};
    }
    if (steps >= step_cap) return CapExceeded{kleene, steps};
    queue.pop_front();
    ++steps;

    Frontier P = std::move(frames[head].P);
    constants.clear();
    Expand(P, &constants);
    sets.clear();
    CharSet universe;
    for (NodeId c : constants) {
      const CharSet& s = arena_.node(c).chars;
      universe.AddSet(s);
      if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
    }
    for (const CharSet& cls : ByteClasses(universe, sets)) {
      uint8_t a = *cls.Representative();
      Frontier next = Derive(a, P);
      if (next.empty() || !history.Insert(next)) continue;
      frames.push_back({head, a, frames[head].depth + 1, std::move(next)});
      queue.push_back(static_cast<int64_t>(frames.size() - 1));
    }
  }
  return NotPumpable{kleene, steps};
}

Frontier Evolve(const ExprArena& arena, NodeId p) {
  return Analyzer(arena).Evolve(p);
}

Frontier Derive(const ExprArena& arena, uint8_t a, std::span<const NodeId> P) {
  return Analyzer(arena).Derive(a, P);
}

CharSet RelevantSymbols(const ExprArena& arena, std::span<const NodeId> P) {
  return Analyzer(arena).RelevantSymbols(P);
}

PumpResult FindPumpable(const ExprArena& arena, NodeId kleene,
                        uint64_t step_cap) {
  return Analyzer(arena).FindPumpable(kleene, step_cap);
}

}  // namespace rxscan
