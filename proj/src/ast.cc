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
#include "rxscan/ast.h"

#include <utility>

namespace rxscan {

const char* NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kEpsilon: return "Epsilon";
    case NodeKind::kConstant: return "Constant";
    case NodeKind::kConcat: return "Concat";
    case NodeKind::kAlt: return "Alt";
    case NodeKind::kStar: return "Star";
    case NodeKind::kAnchorStart: return "AnchorStart";
    case NodeKind::kAnchorEnd: return "AnchorEnd";
  }
  return "?";
}

namespace ast {

namespace {

AstPtr Leaf(NodeKind kind) {
  auto n = std::make_shared<AstNode>();
  n->kind = kind;
  return n;
}

AstPtr Binary(NodeKind kind, AstPtr left, AstPtr right) {
  auto n = std::make_shared<AstNode>();
  n->kind = kind;
  n->size = 1 + left->size + right->size;
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

}  // namespace

AstPtr Epsilon() { return Leaf(NodeKind::kEpsilon); }

AstPtr Constant(const CharSet& chars) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kConstant;
  n->chars = chars;
  return n;
}

AstPtr Concat(AstPtr left, AstPtr right) {
  return Binary(NodeKind::kConcat, std::move(left), std::move(right));
}

AstPtr Alt(AstPtr left, AstPtr right) {
  return Binary(NodeKind::kAlt, std::move(left), std::move(right));
}

AstPtr Star(AstPtr body, bool greedy) {
  auto n = std::make_shared<AstNode>();
  n->kind = NodeKind::kStar;
  n->size = 1 + body->size;
  n->left = std::move(body);
  n->greedy = greedy;
  return n;
}

AstPtr AnchorStart() { return Leaf(NodeKind::kAnchorStart); }
AstPtr AnchorEnd() { return Leaf(NodeKind::kAnchorEnd); }

}  // namespace ast

bool StructurallyEqual(const AstNode& a, const AstNode& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::kConstant:
      return a.chars == b.chars;
    case NodeKind::kConcat:
    case NodeKind::kAlt:
      return StructurallyEqual(*a.left, *b.left) &&
             StructurallyEqual(*a.right, *b.right);
    case NodeKind::kStar:
      return a.greedy == b.greedy && StructurallyEqual(*a.left, *b.left);
    default:
      return true;
  }
}

namespace {

void AppendDebug(const AstNode& n, std::string* out) {
  switch (n.kind) {
    case NodeKind::kConstant:
      out->append("Constant{");
      out->append(n.chars.ToPattern());
      out->push_back('}');
      return;
    case NodeKind::kConcat:
    case NodeKind::kAlt:
      out->append(NodeKindName(n.kind));
      out->push_back('(');
      AppendDebug(*n.left, out);
      out->push_back(',');
      AppendDebug(*n.right, out);
      out->push_back(')');
      return;
    case NodeKind::kStar:
      out->append(n.greedy ? "Star(" : "LazyStar(");
      AppendDebug(*n.left, out);
      out->push_back(')');
      return;
    default:
      out->append(NodeKindName(n.kind));
  }
}

void AppendPattern(const AstNode& n, std::string* out);

void AppendGrouped(const AstNode& n, std::string* out) {
  out->append("(?:");
  AppendPattern(n, out);
  out->push_back(')');
}

void AppendPattern(const AstNode& n, std::string* out) {
  switch (n.kind) {
    case NodeKind::kEpsilon:
      out->append("(?:)");
      return;
    case NodeKind::kConstant:
      out->append(n.chars.ToPattern());
      return;
    case NodeKind::kAnchorStart:
      out->push_back('^');
      return;
    case NodeKind::kAnchorEnd:
      out->push_back('$');
      return;
    case NodeKind::kConcat:
      // Concatenation re-parses right-nested, so a left operand that is
      // itself a sequence (or an alternation) needs its own group.
      if (n.left->kind == NodeKind::kConcat || n.left->kind == NodeKind::kAlt)
        AppendGrouped(*n.left, out);
      else
        AppendPattern(*n.left, out);
      if (n.right->kind == NodeKind::kAlt)
        AppendGrouped(*n.right, out);
      else
        AppendPattern(*n.right, out);
      return;
    case NodeKind::kAlt:
      if (n.left->kind == NodeKind::kAlt)
        AppendGrouped(*n.left, out);
      else
        AppendPattern(*n.left, out);
      out->push_back('|');
      AppendPattern(*n.right, out);
      return;
    case NodeKind::kStar:
      if (n.left->kind == NodeKind::kConstant)
        AppendPattern(*n.left, out);
      else
        AppendGrouped(*n.left, out);
      out->append(n.greedy ? "*" : "*?");
      return;
  }
}

}  // namespace

std::string DebugString(const AstNode& node) {
  std::string out;
  AppendDebug(node, &out);
  return out;
}

std::string ToPattern(const AstNode& node) {
  std::string out;
  AppendPattern(node, &out);
  return out;
}

}  // namespace rxscan
