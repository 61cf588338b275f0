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
#include "rxscan/charset.h"

#include <random>

#include "gtest/gtest.h"
#include "rxscan/parser.h"

namespace rxscan {
namespace {

TEST(CharSetTest, MembershipIsTotal) {
  CharSet s = CharSet::Range('a', 'c');
  for (int c = 0; c < 256; ++c)
    EXPECT_EQ(s.Contains(static_cast<uint8_t>(c)), c >= 'a' && c <= 'c') << c;
  EXPECT_EQ(s.Size(), 3);
  EXPECT_TRUE(CharSet().Empty());
  EXPECT_EQ(CharSet::All().Size(), 256);
}

TEST(CharSetTest, RangesAreNormalized) {
  CharSet s = CharSet::FromRanges({{'x', 'z'}, {'a', 'c'}, {'d', 'f'}, {'b', 'b'}});
  std::vector<ByteRange> expected{{'a', 'f'}, {'x', 'z'}};
  EXPECT_EQ(s.Ranges(), expected);
  EXPECT_EQ(CharSet::All().Ranges(), (std::vector<ByteRange>{{0, 255}}));
  EXPECT_TRUE(CharSet().Ranges().empty());
}

TEST(CharSetTest, SetAlgebra) {
  CharSet ab = CharSet::Range('a', 'b');
  CharSet bc = CharSet::Range('b', 'c');
  EXPECT_EQ(ab.Intersect(bc), CharSet::Of('b'));
  EXPECT_EQ(ab.Union(bc), CharSet::Range('a', 'c'));
  EXPECT_EQ(ab.Minus(bc), CharSet::Of('a'));
  EXPECT_EQ(ab.Complement().Size(), 254);
  EXPECT_EQ(ab.Complement().Complement(), ab);
}

TEST(CharSetTest, NamedClasses) {
  EXPECT_EQ(CharSet::Digit(), CharSet::Range('0', '9'));
  EXPECT_TRUE(CharSet::Word().Contains('_'));
  EXPECT_EQ(CharSet::Word().Size(), 63);
  EXPECT_EQ(CharSet::Space().Size(), 6);
  EXPECT_FALSE(CharSet::AnyButNewline().Contains('\n'));
  EXPECT_EQ(CharSet::AnyButNewline().Size(), 255);
}

TEST(CharSetTest, CaseFoldAddsPartners) {
  CharSet s = CharSet::FromRanges({{'a', 'c'}, {'X', 'X'}, {'1', '1'}});
  CharSet f = s.CaseFolded();
  for (char c : std::string("abcABCxX1")) EXPECT_TRUE(f.Contains(c)) << c;
  EXPECT_EQ(f.Size(), 9);
}

TEST(CharSetTest, RepresentativePrefersPrintable) {
  CharSet s = CharSet::FromRanges({{0, 3}, {'z', 'z'}});
  EXPECT_EQ(s.Min(), 0);
  EXPECT_EQ(s.Representative(), 'z');
  EXPECT_EQ(CharSet::Of(7).Representative(), 7);
  EXPECT_FALSE(CharSet().Representative().has_value());
  EXPECT_EQ(CharSet::All().Representative(), ' ');
}

TEST(CharSetTest, ToPatternReparsesToSameSet) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    CharSet s;
    int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      uint8_t lo = static_cast<uint8_t>(rng() % 256);
      uint8_t hi = static_cast<uint8_t>(std::min<int>(255, lo + rng() % 8));
      s.AddRange(lo, hi);
    }
    ParseResult r = Parse(s.ToPattern());
    ASSERT_TRUE(r.ok()) << s.ToPattern();
    ASSERT_EQ(r.ast()->kind, NodeKind::kConstant) << s.ToPattern();
    EXPECT_EQ(r.ast()->chars, s) << s.ToPattern();
  }
}

TEST(CharSetTest, EscapeBytesRoundTrips) {
  std::string all;
  for (int c = 0; c < 256; ++c) all.push_back(static_cast<char>(c));
  std::string escaped = EscapeBytes(all);
  for (char c : escaped) {
    EXPECT_GE(c, 0x20);
    EXPECT_LT(c, 0x7f);
  }
  EXPECT_EQ(UnescapeBytes(escaped), all);
  EXPECT_EQ(EscapeBytes("a\\b\n"), "a\\\\b\\x0a");
  EXPECT_FALSE(UnescapeBytes("\\q").has_value());
  EXPECT_FALSE(UnescapeBytes("\\x4").has_value());
}

}  // namespace
}  // namespace rxscan
