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

#include "gtest/gtest.h"
#include "oracle/generators.h"
#include "rxscan/parser.h"

namespace rxscan {
namespace {

ExprArena BuildFrom(std::string_view pattern) {
  ParseResult r = Parse(pattern);
  EXPECT_TRUE(r.ok()) << pattern;
  return ExprArena::Build(*r.ast());
}

constexpr NodeId p(uint32_t v) { return NodeId{v}; }
const NodeId kEnd = NodeId::Terminal();

TEST(ArenaTest, ContinuationTable) {
  ExprArena a = BuildFrom("(a|b)*c");
  ASSERT_EQ(a.size(), 6u);
  EXPECT_EQ(a.kind(p(0)), NodeKind::kConcat);
  EXPECT_EQ(a.kind(p(1)), NodeKind::kStar);
  EXPECT_EQ(a.kind(p(2)), NodeKind::kAlt);
  EXPECT_EQ(a.kind(p(5)), NodeKind::kConstant);
  EXPECT_EQ(a.kont(p(0)), kEnd);
  EXPECT_EQ(a.kont(p(1)), p(5));
  EXPECT_EQ(a.kont(p(2)), p(1));
  EXPECT_EQ(a.kont(p(3)), p(1));
  EXPECT_EQ(a.kont(p(4)), p(1));
  EXPECT_EQ(a.kont(p(5)), kEnd);
  EXPECT_EQ(a.Dump(),
            "p0 Concat p1,p5 ⊥\n"
            "p1 Star p2 p5\n"
            "p2 Alt p3,p4 p1\n"
            "p3 Constant {a} p1\n"
            "p4 Constant {b} p1\n"
            "p5 Constant {c} ⊥\n");
}

TEST(ArenaTest, SmallPatterns) {
  ExprArena one = BuildFrom("a");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.kont(one.root()), kEnd);

  ExprArena ab = BuildFrom("ab");
  ASSERT_EQ(ab.size(), 3u);
  EXPECT_EQ(ab.kont(p(1)), p(2));
  EXPECT_EQ(ab.kont(p(2)), kEnd);
}

TEST(ArenaTest, KleeneNodesInPreOrder) {
  EXPECT_EQ(BuildFrom("(a|b)*c").KleeneNodes(), std::vector<NodeId>{p(1)});
  EXPECT_TRUE(BuildFrom("abc").KleeneNodes().empty());
  ExprArena nested = BuildFrom("(a*)*");
  EXPECT_EQ(nested.KleeneNodes(), (std::vector<NodeId>{p(0), p(1)}));
  EXPECT_EQ(nested.StarOrdinal(p(1)), 1);
  EXPECT_EQ(nested.StarOrdinal(p(2)), -1);
  EXPECT_EQ(nested.EnclosingStarOfBody(p(1)), p(0));
  EXPECT_EQ(nested.EnclosingStarOfBody(p(0)), kEnd);
}

TEST(ArenaTest, EndAnchored) {
  EXPECT_TRUE(BuildFrom("^a*$").EndAnchored());
  EXPECT_TRUE(BuildFrom("(a|b)$").EndAnchored());
  EXPECT_FALSE(BuildFrom("^a*").EndAnchored());
  EXPECT_TRUE(BuildFrom("$").EndAnchored());
}

TEST(ArenaTest, SharedSubtreesBecomeDistinctNodes) {
  ExprArena a = BuildFrom("(ab){3}");
  EXPECT_EQ(a.size(), 3u * 3 + 2);
}

// Every clause of the continuation definition, node by node, on random
// trees; plus totality and determinism.
TEST(ArenaPropertyTest, ContinuationClauses) {
  oracle::Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    AstPtr tree = oracle::RandomAst(rng, 5);
    ExprArena a = ExprArena::Build(*tree);
    ASSERT_EQ(a.size(), tree->size);
    EXPECT_EQ(a.kont(a.root()), kEnd);
    EXPECT_EQ(a.parent(a.root()), kEnd);
    for (uint32_t v = 0; v < a.size(); ++v) {
      NodeId id{v};
      const ArenaNode& n = a.node(id);
      switch (n.kind) {
        case NodeKind::kAlt:
          EXPECT_EQ(a.kont(n.left), a.kont(id));
          EXPECT_EQ(a.kont(n.right), a.kont(id));
          break;
        case NodeKind::kConcat:
          EXPECT_EQ(a.kont(n.left), n.right);
          EXPECT_EQ(a.kont(n.right), a.kont(id));
          break;
        case NodeKind::kStar:
          EXPECT_EQ(a.kont(n.left), id);
          EXPECT_EQ(a.EnclosingStarOfBody(n.left), id);
          break;
        default:
          EXPECT_EQ(n.left, kEnd);
          break;
      }
      // Pre-order: children come after their parent.
      if (!n.left.IsTerminal()) EXPECT_GT(n.left.value, v);
      if (!n.right.IsTerminal()) EXPECT_GT(n.right.value, n.left.value);
    }
    EXPECT_TRUE(a == ExprArena::Build(*tree));
  }
}

}  // namespace
}  // namespace rxscan
