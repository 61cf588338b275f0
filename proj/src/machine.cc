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
#include "rxscan/machine.h"

#include <algorithm>

namespace rxscan {

const char* MatchStatusName(MatchStatus status) {
  switch (status) {
    case MatchStatus::kMatched: return "matched";
    case MatchStatus::kNoMatch: return "no-match";
    case MatchStatus::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::vector<PwConfig> Successors(const ExprArena& arena, std::string_view input,
                                 PwConfig config) {
  const ArenaNode& n = arena.node(config.code);
  NodeId next = arena.kont(config.code);
  size_t at = config.rest;
  switch (n.kind) {
    case NodeKind::kAlt:
      return {{n.left, at}, {n.right, at}};
    case NodeKind::kStar:
      return {{n.left, at}, {next, at}};
    case NodeKind::kConcat:
      return {{n.left, at}};
    case NodeKind::kConstant:
      if (at < input.size() && n.chars.Contains(static_cast<uint8_t>(input[at])))
        return {{next, at + 1}};
      return {};
    case NodeKind::kEpsilon:
      return {{next, at}};
    case NodeKind::kAnchorStart:
      if (at == 0) return {{next, at}};
      return {};
    case NodeKind::kAnchorEnd:
      if (at == input.size()) return {{next, at}};
      return {};
  }
  return {};
}

namespace {

// Stars whose body was entered since the last byte was consumed, as a
// persistent linked list so that frames can share tails.
class GuardCells {
 public:
  static constexpr int32_t kEmpty = -1;

  int32_t Push(int32_t list, NodeId star) {
    cells_.push_back({star, list});
    return static_cast<int32_t>(cells_.size() - 1);
  }

  bool Contains(int32_t list, NodeId star) const {
    for (int32_t c = list; c != kEmpty; c = cells_[c].next)
      if (cells_[c].star == star) return true;
    return false;
  }

 private:
  struct Cell {
    NodeId star;
    int32_t next;
  };
  std::vector<Cell> cells_;
};

struct Frame {
  NodeId code;
  uint32_t at;
  int32_t guard;
};

}  // namespace

MatchOutcome PwfRun(const ExprArena& arena, std::string_view input,
                    uint64_t budget, MatchMode mode) {
  MatchOutcome out;
  GuardCells guards;
  std::vector<Frame> stack;
  stack.push_back({arena.root(), 0, GuardCells::kEmpty});
  const uint32_t len = static_cast<uint32_t>(input.size());

  while (true) {
    if (stack.empty()) {
      out.status = MatchStatus::kNoMatch;
      return out;
    }
    Frame top = stack.back();
    bool accepts = top.code.IsTerminal() &&
                   (mode == MatchMode::kPrefix || top.at == len);
    if (accepts) {
      out.status = MatchStatus::kMatched;
      out.match_length = top.at;
      return out;
    }
    if (out.steps >= budget) {
      out.status = MatchStatus::kBudgetExceeded;
      return out;
    }
    ++out.steps;
    if (top.code.IsTerminal()) {
      stack.pop_back();
      continue;
    }

    const ArenaNode& n = arena.node(top.code);
    NodeId next = arena.kont(top.code);
    Frame& slot = stack.back();
    switch (n.kind) {
      case NodeKind::kAlt:
        slot = {n.right, top.at, top.guard};
        stack.push_back({n.left, top.at, top.guard});
        break;
      case NodeKind::kStar:
        if (guards.Contains(top.guard, top.code)) {
          stack.pop_back();
          break;
        }
        slot = {next, top.at, top.guard};
        stack.push_back({n.left, top.at, guards.Push(top.guard, top.code)});
        break;
      case NodeKind::kConcat:
        slot = {n.left, top.at, top.guard};
        break;
      case NodeKind::kConstant:
        if (top.at < len && n.chars.Contains(static_cast<uint8_t>(input[top.at])))
          slot = {next, top.at + 1, GuardCells::kEmpty};
        else
          stack.pop_back();
        break;
      case NodeKind::kEpsilon:
        slot = {next, top.at, top.guard};
        break;
      case NodeKind::kAnchorStart:
        if (top.at == 0)
          slot = {next, top.at, top.guard};
        else
          stack.pop_back();
        break;
      case NodeKind::kAnchorEnd:
        if (top.at == len)
          slot = {next, top.at, top.guard};
        else
          stack.pop_back();
        break;
    }
  }
}

namespace {

// Depth-first path walker shared by EnumeratePaths and CountPathsTo.
class PathWalker {
 public:
  PathWalker(const ExprArena& arena, std::string_view w, size_t limit)
      : arena_(arena), w_(w), limit_(limit) {}

  // Mode 1: collect paths that end right after the last byte of w.
  void Collect(NodeId from) {
    collect_ = true;
    Start(from, /*seed=*/false);
  }

  // Mode 2: count paths that consume w then reach `target`.
  void Count(NodeId from, NodeId target) {
    collect_ = false;
    target_ = target;
    Start(from, /*seed=*/true);
  }

  PathEnumeration TakeEnumeration() {
    return PathEnumeration{std::move(paths_), truncated_};
  }
  size_t count() const { return count_; }

 private:
  // With `seed`, a star body start counts as just entered by its star.
  void Start(NodeId from, bool seed) {
    NodeId star = arena_.EnclosingStarOfBody(from);
    if (seed && !star.IsTerminal()) guard_.push_back(star);
    path_.push_back(from);
    Walk(from, 0);
  }

  bool Done() const {
    return collect_ ? truncated_ : count_ >= limit_;
  }

  // Called when the current path is a complete answer.
  void Emit() {
    if (collect_) {
      if (paths_.size() >= limit_) {
        truncated_ = true;
        return;
      }
      paths_.push_back(Path{path_, std::string(w_)});
    } else {
      ++count_;
    }
  }

  void Step(NodeId to, size_t i) {
    path_.push_back(to);
    Walk(to, i);
    path_.pop_back();
  }

  void Walk(NodeId at, size_t i) {
    if (Done()) return;
    if (collect_ && i == w_.size() && (w_.empty() || consumed_last_)) {
      Emit();
      return;
    }
    if (!collect_ && i == w_.size() && at == target_) {
      Emit();
      return;
    }
    if (at.IsTerminal()) return;
    const ArenaNode& n = arena_.node(at);
    NodeId next = arena_.kont(at);
    consumed_last_ = false;
    switch (n.kind) {
      case NodeKind::kAlt:
        Step(n.left, i);
        Step(n.right, i);
        break;
      case NodeKind::kStar: {
        if (std::find(guard_.begin(), guard_.end(), at) != guard_.end()) break;
        guard_.push_back(at);
        Step(n.left, i);
        guard_.pop_back();
        Step(next, i);
        break;
      }
      case NodeKind::kConcat:
        Step(n.left, i);
        break;
      case NodeKind::kEpsilon:
        Step(next, i);
        break;
      case NodeKind::kConstant: {
        if (i >= w_.size() || !n.chars.Contains(static_cast<uint8_t>(w_[i])))
          break;
        std::vector<NodeId> saved;
        saved.swap(guard_);
        consumed_last_ = true;
        Step(next, i + 1);
        consumed_last_ = false;
        guard_.swap(saved);
        break;
      }
      case NodeKind::kAnchorStart:
      case NodeKind::kAnchorEnd:
        break;
    }
  }

  const ExprArena& arena_;
  std::string_view w_;
  size_t limit_;
  bool collect_ = true;
  NodeId target_ = NodeId::Terminal();
  bool consumed_last_ = false;
  std::vector<NodeId> guard_;
  std::vector<NodeId> path_;
  std::vector<Path> paths_;
  bool truncated_ = false;
  size_t count_ = 0;
};

}  // namespace

PathEnumeration EnumeratePaths(const ExprArena& arena, NodeId from,
                               std::string_view w, size_t limit) {
  PathWalker walker(arena, w, limit);
  walker.Collect(from);
  return walker.TakeEnumeration();
}

size_t CountPathsTo(const ExprArena& arena, NodeId from, std::string_view w,
                    NodeId target, size_t limit) {
  PathWalker walker(arena, w, limit);
  walker.Count(from, target);
  return walker.count();
}

}  // namespace rxscan
