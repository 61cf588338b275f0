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
#ifndef RXSCAN_ARENA_H_
#define RXSCAN_ARENA_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rxscan/ast.h"
#include "rxscan/charset.h"

namespace rxscan {

// Index of one arena slot. Terminal stands for the successful-match
// continuation of the root and is never a valid index.
struct NodeId {
  uint32_t value = 0;

  static constexpr NodeId Terminal() {
    return NodeId{std::numeric_limits<uint32_t>::max()};
  }
  constexpr bool IsTerminal() const { return *this == Terminal(); }

  friend constexpr bool operator==(NodeId, NodeId) = default;
  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

std::string ToString(NodeId id);  // "p3", or "⊥" for Terminal

struct ArenaNode {
  NodeKind kind = NodeKind::kEpsilon;
  NodeId left = NodeId::Terminal();   // Concat/Alt left, Star body
  NodeId right = NodeId::Terminal();  // Concat/Alt right
  CharSet chars;                      // kConstant
  bool greedy = true;                 // kStar
};

// The expression tree numbered in depth-first pre-order, overlaid with the
// continuation map: kont(p) is the node to match after p succeeds.
//   Alt(l, r) at p:    kont(l) = kont(r) = kont(p)
//   Concat(l, r) at p: kont(l) = r, kont(r) = kont(p)
//   Star(b) at p:      kont(b) = p
//   root:              kont(root) = Terminal
// Anchors are zero-width and get continuations like constants.
class ExprArena {
 public:
  static ExprArena Build(const AstNode& root);

  size_t size() const { return nodes_.size(); }
  NodeId root() const { return NodeId{0}; }

  const ArenaNode& node(NodeId id) const { return nodes_[id.value]; }
  NodeKind kind(NodeId id) const { return nodes_[id.value].kind; }
  NodeId kont(NodeId id) const { return kont_[id.value]; }
  // Syntactic parent; Terminal for the root.
  NodeId parent(NodeId id) const { return parent_[id.value]; }

  bool IsStar(NodeId id) const {
    return !id.IsTerminal() && kind(id) == NodeKind::kStar;
  }
  bool IsConstant(NodeId id) const {
    return !id.IsTerminal() && kind(id) == NodeKind::kConstant;
  }

  // The star whose body is `id`, or Terminal.
  NodeId EnclosingStarOfBody(NodeId id) const;

  // Star nodes in pre-order.
  const std::vector<NodeId>& KleeneNodes() const { return stars_; }
  // Position of a star in KleeneNodes(); -1 for other nodes.
  int StarOrdinal(NodeId id) const { return star_ordinal_[id.value]; }

  bool EndAnchored() const;

  // One line per node: "<id> <kind> <children> <kont>".
  std::string Dump() const;

  friend bool operator==(const ExprArena& a, const ExprArena& b);

 private:
  std::vector<ArenaNode> nodes_;
  std::vector<NodeId> kont_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> stars_;
  std::vector<int> star_ordinal_;
};

}  // namespace rxscan

#endif  // RXSCAN_ARENA_H_
