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
#ifndef RXSCAN_MACHINE_H_
#define RXSCAN_MACHINE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rxscan/arena.h"

namespace rxscan {

// A configuration of the non-deterministic matcher: the sub-expression to
// match next and the offset of the unread input.
struct PwConfig {
  NodeId code;
  size_t rest = 0;

  friend bool operator==(const PwConfig&, const PwConfig&) = default;
};

// All single-transition successors of `config` (which must not be
// Terminal), in the order the backtracking matcher tries them: the body
// before the exit for a star, left before right for an alternation.
// Anchors are zero-width: '^' passes only at offset 0, '$' only at the end.
std::vector<PwConfig> Successors(const ExprArena& arena, std::string_view input,
                                 PwConfig config);

// Prefix: accept as soon as Terminal is reached (any prefix matches).
// Full: Terminal only accepts at the end of the input, as if the pattern
// ended in '$'.
enum class MatchMode { kPrefix, kFull };

enum class MatchStatus { kMatched, kNoMatch, kBudgetExceeded };

const char* MatchStatusName(MatchStatus status);

struct MatchOutcome {
  MatchStatus status = MatchStatus::kNoMatch;
  size_t match_length = 0;  // meaningful for kMatched
  uint64_t steps = 0;
};

// Backtracking matcher over a stack of configurations. Every rule
// application costs one step: advancing the top configuration, popping a
// stuck one, or splitting a branch (the first alternative stays on top,
// the second goes beneath it).
//
// A configuration is stuck when it arrives at a star whose body was
// entered at the same input offset; this stops empty iterations of
// nullable bodies from looping.
MatchOutcome PwfRun(const ExprArena& arena, std::string_view input,
                    uint64_t budget, MatchMode mode = MatchMode::kPrefix);

// A path of pointers: consecutive entries are related by one transition.
struct Path {
  std::vector<NodeId> nodes;
  std::string consumed;
};

struct PathEnumeration {
  std::vector<Path> paths;
  bool truncated = false;  // more paths exist than the limit allowed
};

// Every distinct path from `from` consuming exactly `w`. A path ends right
// after the transition that consumes the last byte of w (for empty w only
// the identity path [from] is produced). Uses the same empty-iteration
// guard as PwfRun, starting empty. Anchors are not traversed.
PathEnumeration EnumeratePaths(const ExprArena& arena, NodeId from,
                               std::string_view w, size_t limit);

// Number of distinct paths from `from` that consume w and then continue
// by zero-width transitions until they first arrive at `target`, capped
// at `limit`. A start node that is a star body counts as having just been
// entered by that star.
size_t CountPathsTo(const ExprArena& arena, NodeId from, std::string_view w,
                    NodeId target, size_t limit);

}  // namespace rxscan

#endif  // RXSCAN_MACHINE_H_
