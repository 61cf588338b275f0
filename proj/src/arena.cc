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
#include "rxscan/arena.h"

namespace rxscan {

std::string ToString(NodeId id) {
  if (id.IsTerminal()) return "⊥";
  return "p" + std::to_string(id.value);
}

namespace {

class Builder {
 public:
  explicit Builder(std::vector<ArenaNode>* nodes, std::vector<NodeId>* parent)
      : nodes_(nodes), parent_(parent) {}

  NodeId Add(const AstNode& n, NodeId parent) {
    NodeId id{static_cast<uint32_t>(nodes_->size())};
    nodes_->push_back(ArenaNode{n.kind, NodeId::Terminal(), NodeId::Terminal(),
                                n.chars, n.greedy});
    parent_->push_back(parent);
    switch (n.kind) {
      case NodeKind::kConcat:
      case NodeKind::kAlt: {
        NodeId l = Add(*n.left, id);
        NodeId r = Add(*n.right, id);
        (*nodes_)[id.value].left = l;
        (*nodes_)[id.value].right = r;
        break;
      }
      case NodeKind::kStar:
        (*nodes_)[id.value].left = Add(*n.left, id);
        break;
      default:
        break;
    }
    return id;
  }

 private:
  std::vector<ArenaNode>* nodes_;
  std::vector<NodeId>* parent_;
};

}  // namespace

ExprArena ExprArena::Build(const AstNode& root) {
  ExprArena arena;
  arena.nodes_.reserve(root.size);
  arena.parent_.reserve(root.size);
  Builder(&arena.nodes_, &arena.parent_).Add(root, NodeId::Terminal());

  // Pre-order guarantees a parent's kont is assigned before its children.
  const size_t n = arena.nodes_.size();
  arena.kont_.assign(n, NodeId::Terminal());
  arena.star_ordinal_.assign(n, -1);
  for (uint32_t i = 0; i < n; ++i) {
    const ArenaNode& node = arena.nodes_[i];
    NodeId self{i};
    switch (node.kind) {
      case NodeKind::kAlt:
        arena.kont_[node.left.value] = arena.kont_[i];
        arena.kont_[node.right.value] = arena.kont_[i];
        break;
      case NodeKind::kConcat:
        arena.kont_[node.left.value] = node.right;
        arena.kont_[node.right.value] = arena.kont_[i];
        break;
      case NodeKind::kStar:
        arena.kont_[node.left.value] = self;
        arena.star_ordinal_[i] = static_cast<int>(arena.stars_.size());
        arena.stars_.push_back(self);
        break;
      default:
        break;
    }
  }
  return arena;
}

NodeId ExprArena::EnclosingStarOfBody(NodeId id) const {
  if (id.IsTerminal()) return NodeId::Terminal();
  NodeId p = parent(id);
  if (!p.IsTerminal() && kind(p) == NodeKind::kStar) return p;
  return NodeId::Terminal();
}

bool ExprArena::EndAnchored() const {
  NodeId n = root();
  while (kind(n) == NodeKind::kConcat) n = node(n).right;
  return kind(n) == NodeKind::kAnchorEnd;
}

std::string ExprArena::Dump() const {
  std::string out;
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    const ArenaNode& n = nodes_[i];
    out += ToString(NodeId{i});
    out += ' ';
    out += NodeKindName(n.kind);
    out += ' ';
    switch (n.kind) {
      case NodeKind::kConcat:
      case NodeKind::kAlt:
        out += ToString(n.left) + "," + ToString(n.right);
        break;
      case NodeKind::kStar:
        out += ToString(n.left);
        break;
      case NodeKind::kConstant:
        out += "{" + n.chars.ToPattern() + "}";
        break;
      default:
        out += '-';
    }
    out += ' ';
    out += ToString(kont_[i]);
    out += '\n';
  }
  return out;
}

bool operator==(const ExprArena& a, const ExprArena& b) {
  if (a.nodes_.size() != b.nodes_.size() || a.kont_ != b.kont_ ||
      a.parent_ != b.parent_)
    return false;
  for (size_t i = 0; i < a.nodes_.size(); ++i) {
    const ArenaNode& x = a.nodes_[i];
    const ArenaNode& y = b.nodes_[i];
    if (x.kind != y.kind || x.left != y.left || x.right != y.right ||
        x.chars != y.chars || x.greedy != y.greedy)
      return false;
  }
  return true;
}

}  // namespace rxscan
