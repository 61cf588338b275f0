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
#ifndef RXSCAN_AST_H_
#define RXSCAN_AST_H_

#include <cstddef>
#include <memory>
#include <string>

#include "rxscan/charset.h"

namespace rxscan {

// Node kinds of the desugared expression language. Counted repetition, '+'
// and '?' never appear here: the parser rewrites them into these forms.
enum class NodeKind : uint8_t {
  kEpsilon,
  kConstant,
  kConcat,
  kAlt,
  kStar,
  kAnchorStart,
  kAnchorEnd,
};

const char* NodeKindName(NodeKind kind);

struct AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

// Immutable tree node. Subtrees may be shared (counted repetition reuses the
// operand); every occurrence is still a distinct node once numbered into an
// ExprArena.
struct AstNode {
  NodeKind kind = NodeKind::kEpsilon;
  CharSet chars;        // kConstant
  AstPtr left;          // kConcat, kAlt; the body of kStar
  AstPtr right;         // kConcat, kAlt
  bool greedy = true;   // kStar; recorded, not used by the analysis
  size_t size = 1;      // number of nodes in this tree, shared parts counted
                        // once per occurrence
};

namespace ast {

AstPtr Epsilon();
AstPtr Constant(const CharSet& chars);
AstPtr Concat(AstPtr left, AstPtr right);
AstPtr Alt(AstPtr left, AstPtr right);
AstPtr Star(AstPtr body, bool greedy = true);
AstPtr AnchorStart();
AstPtr AnchorEnd();

}  // namespace ast

bool StructurallyEqual(const AstNode& a, const AstNode& b);

// S-expression form, e.g. Concat(Star(Alt(Constant{a},Constant{b})),Constant{c}).
std::string DebugString(const AstNode& node);

// Pattern text that re-parses to a structurally identical tree.
std::string ToPattern(const AstNode& node);

}  // namespace rxscan

#endif  // RXSCAN_AST_H_
