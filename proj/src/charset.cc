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

#include <bit>
#include <cstdio>

namespace rxscan {

namespace {

bool IsPrintable(uint8_t c) { return c >= 0x20 && c <= 0x7e; }

bool IsAlnum(uint8_t c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

void AppendHex(std::string* out, uint8_t c) {
  char buf[5];
  std::snprintf(buf, sizeof buf, "\\x%02x", c);
  out->append(buf);
}

// Endpoint spelling inside a bracket expression.
void AppendClassByte(std::string* out, uint8_t c) {
  if (IsAlnum(c))
    out->push_back(static_cast<char>(c));
  else
    AppendHex(out, c);
}

}  // namespace

CharSet CharSet::Of(uint8_t c) {
  CharSet s;
  s.Add(c);
  return s;
}

CharSet CharSet::Range(uint8_t lo, uint8_t hi) {
  CharSet s;
  s.AddRange(lo, hi);
  return s;
}

CharSet CharSet::All() { return Range(0, 255); }

CharSet CharSet::FromRanges(const std::vector<ByteRange>& ranges) {
  CharSet s;
  for (const ByteRange& r : ranges) s.AddRange(r.lo, r.hi);
  return s;
}

CharSet CharSet::Digit() { return Range('0', '9'); }

CharSet CharSet::Word() {
  CharSet s = Range('a', 'z');
  s.AddRange('A', 'Z');
  s.AddRange('0', '9');
  s.Add('_');
  return s;
}

CharSet CharSet::Space() {
  CharSet s = Range('\t', '\r');  // \t \n \v \f \r
  s.Add(' ');
  return s;
}

CharSet CharSet::HorizSpace() {
  CharSet s = Of('\t');
  s.Add(' ');
  return s;
}

CharSet CharSet::VertSpace() { return Range('\n', '\r'); }

CharSet CharSet::AnyButNewline() { return Of('\n').Complement(); }

bool CharSet::Empty() const {
  for (uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

int CharSet::Size() const {
  int n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

void CharSet::AddRange(uint8_t lo, uint8_t hi) {
  for (int c = lo; c <= hi; ++c) Add(static_cast<uint8_t>(c));
}

void CharSet::AddSet(const CharSet& other) {
  for (int i = 0; i < 4; ++i) words_[i] |= other.words_[i];
}

CharSet CharSet::Complement() const {
  CharSet s;
  for (int i = 0; i < 4; ++i) s.words_[i] = ~words_[i];
  return s;
}

CharSet CharSet::Union(const CharSet& other) const {
  CharSet s = *this;
  s.AddSet(other);
  return s;
}

CharSet CharSet::Intersect(const CharSet& other) const {
  CharSet s;
  for (int i = 0; i < 4; ++i) s.words_[i] = words_[i] & other.words_[i];
  return s;
}

CharSet CharSet::Minus(const CharSet& other) const {
  CharSet s;
  for (int i = 0; i < 4; ++i) s.words_[i] = words_[i] & ~other.words_[i];
  return s;
}

CharSet CharSet::CaseFolded() const {
  CharSet s = *this;
  for (int c = 'a'; c <= 'z'; ++c) {
    uint8_t lower = static_cast<uint8_t>(c);
    uint8_t upper = static_cast<uint8_t>(c - 'a' + 'A');
    if (Contains(lower) || Contains(upper)) {
      s.Add(lower);
      s.Add(upper);
    }
  }
  return s;
}

std::optional<uint8_t> CharSet::Min() const {
  for (int i = 0; i < 4; ++i)
    if (words_[i] != 0)
      return static_cast<uint8_t>(i * 64 + std::countr_zero(words_[i]));
  return std::nullopt;
}

std::optional<uint8_t> CharSet::Representative() const {
  CharSet printable = Intersect(Range(0x20, 0x7e));
  if (auto c = printable.Min()) return c;
  return Min();
}

std::vector<ByteRange> CharSet::Ranges() const {
  std::vector<ByteRange> out;
  int c = 0;
  while (c < 256) {
    if (!Contains(static_cast<uint8_t>(c))) {
      ++c;
      continue;
    }
    int lo = c;
    while (c + 1 < 256 && Contains(static_cast<uint8_t>(c + 1))) ++c;
    out.push_back({static_cast<uint8_t>(lo), static_cast<uint8_t>(c)});
    ++c;
  }
  return out;
}

namespace {

// Bytes that stand for themselves outside a bracket expression.
bool IsBareLiteral(uint8_t c) {
  constexpr std::string_view kSafePunct = "_ -,:;'\"!@#%&=<>~`/";
  return IsAlnum(c) ||
         kSafePunct.find(static_cast<char>(c)) != std::string_view::npos;
}

}  // namespace

std::string CharSet::ToPattern() const {
  if (Size() == 1) {
    uint8_t c = *Min();
    if (IsBareLiteral(c)) return std::string(1, static_cast<char>(c));
    std::string out;
    AppendHex(&out, c);
    return out;
  }
  if (*this == AnyButNewline()) return ".";
  std::string out = "[";
  for (const ByteRange& r : Ranges()) {
    AppendClassByte(&out, r.lo);
    if (r.hi != r.lo) {
      if (r.hi != r.lo + 1) out.push_back('-');
      AppendClassByte(&out, r.hi);
    }
  }
  out.push_back(']');
  return out;
}

std::string EscapeBytes(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (char ch : bytes) {
    uint8_t c = static_cast<uint8_t>(ch);
    if (c == '\\')
      out.append("\\\\");
    else if (IsPrintable(c))
      out.push_back(ch);
    else
      AppendHex(&out, c);
  }
  return out;
}

std::optional<std::string> UnescapeBytes(std::string_view text) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::string out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      out.push_back(text[i]);
      continue;
    }
    if (i + 1 < text.size() && text[i + 1] == '\\') {
      out.push_back('\\');
      ++i;
      continue;
    }
    if (i + 3 >= text.size() || text[i + 1] != 'x') return std::nullopt;
    int hi = hex(text[i + 2]), lo = hex(text[i + 3]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<char>(hi * 16 + lo));
    i += 3;
  }
  return out;
}

}  // namespace rxscan
