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
#ifndef RXSCAN_CHARSET_H_
#define RXSCAN_CHARSET_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rxscan {

// An inclusive byte range [lo, hi].
struct ByteRange {
  uint8_t lo;
  uint8_t hi;

  friend bool operator==(const ByteRange&, const ByteRange&) = default;
};

// A set of byte values 0..255. Negation is resolved at construction, so a
// CharSet is always held in positive form. Ranges() yields the normalized
// view: sorted, disjoint and non-adjacent.
class CharSet {
 public:
  CharSet() = default;

  static CharSet Of(uint8_t c);
  static CharSet Range(uint8_t lo, uint8_t hi);
  static CharSet All();
  static CharSet FromRanges(const std::vector<ByteRange>& ranges);

  // Named classes, ASCII semantics.
  static CharSet Digit();       // \d
  static CharSet Word();        // \w
  static CharSet Space();       // \s
  static CharSet HorizSpace();  // \h
  static CharSet VertSpace();   // \v
  static CharSet AnyButNewline();

  bool Contains(uint8_t c) const {
    return (words_[c >> 6] >> (c & 63)) & 1u;
  }
  bool Empty() const;
  int Size() const;

  void Add(uint8_t c) { words_[c >> 6] |= uint64_t{1} << (c & 63); }
  void AddRange(uint8_t lo, uint8_t hi);
  void AddSet(const CharSet& other);

  CharSet Complement() const;
  CharSet Union(const CharSet& other) const;
  CharSet Intersect(const CharSet& other) const;
  CharSet Minus(const CharSet& other) const;

  // Adds the ASCII case partner of every letter in the set.
  CharSet CaseFolded() const;

  // Smallest member, preferring printable ASCII (0x20..0x7e) when the set
  // has any. nullopt for the empty set.
  std::optional<uint8_t> Representative() const;
  std::optional<uint8_t> Min() const;

  std::vector<ByteRange> Ranges() const;

  // Pattern syntax for this set: a bare literal when possible, otherwise a
  // bracket expression with \xHH escapes. Re-parses to an equal set.
  std::string ToPattern() const;

  friend bool operator==(const CharSet&, const CharSet&) = default;
  friend auto operator<=>(const CharSet&, const CharSet&) = default;

 private:
  std::array<uint64_t, 4> words_{};
};

// Printable-ASCII escaping used in reports: non-printables and the backslash
// become \xHH (backslash becomes \\).
std::string EscapeBytes(std::string_view bytes);

// Inverse of EscapeBytes; nullopt on a malformed escape.
std::optional<std::string> UnescapeBytes(std::string_view text);

}  // namespace rxscan

#endif  // RXSCAN_CHARSET_H_
