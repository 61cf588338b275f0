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
#include "rxscan/parser.h"

#include <cstdio>
#include <utility>

namespace rxscan {

const char* ParseErrorKindName(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kUnbalancedGroup: return "UnbalancedGroup";
    case ParseErrorKind::kUnterminatedClass: return "UnterminatedClass";
    case ParseErrorKind::kBadRange: return "BadRange";
    case ParseErrorKind::kBadRepetitionBounds: return "BadRepetitionBounds";
    case ParseErrorKind::kNothingToRepeat: return "NothingToRepeat";
    case ParseErrorKind::kBadEscape: return "BadEscape";
    case ParseErrorKind::kUnsupportedConstruct: return "UnsupportedConstruct";
  }
  return "?";
}

const char* UnsupportedKindName(UnsupportedKind kind) {
  switch (kind) {
    case UnsupportedKind::kNone: return "none";
    case UnsupportedKind::kBackReference: return "back-reference";
    case UnsupportedKind::kLookAround: return "look-around";
    case UnsupportedKind::kOther: return "other";
  }
  return "?";
}

std::string ParseError::ToString() const {
  std::string out = ParseErrorKindName(kind);
  if (IsUnsupported()) {
    out += "(";
    out += UnsupportedKindName(unsupported);
    out += ")";
  }
  out += " at offset " + std::to_string(offset);
  if (!message.empty()) out += ": " + message;
  return out;
}

SourcePattern SourcePattern::Raw(std::string text) {
  SourcePattern p;
  p.text = std::move(text);
  return p;
}

SourcePattern SourcePattern::WithFlags(std::string text,
                                       std::string_view letters) {
  SourcePattern p = Raw(std::move(text));
  for (char c : letters) {
    if (c == 'i')
      p.flags.case_insensitive = true;
    else if (p.ignored_flags.find(c) == std::string::npos)
      p.ignored_flags.push_back(c);
  }
  return p;
}

SourcePattern SourcePattern::FromDelimited(std::string_view text) {
  if (text.size() >= 2 && text.front() == '/') {
    size_t close = text.rfind('/');
    if (close > 0) {
      return WithFlags(std::string(text.substr(1, close - 1)),
                       text.substr(close + 1));
    }
  }
  return Raw(std::string(text));
}

std::string SourcePattern::FlagLetters() const {
  std::string out = flags.case_insensitive ? "i" : "";
  return out + ignored_flags;
}

std::string SourcePattern::Origin() const {
  std::string out = source;
  if (line) {
    if (!out.empty()) out += ":";
    out += std::to_string(*line);
  }
  return out;
}

namespace {

struct Failure {
  ParseError error;
};

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsOctal(char c) { return c >= '0' && c <= '7'; }

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// One parsed element of a bracket expression or escape: either a single
// byte (usable as a range endpoint) or a whole class such as \d.
struct ClassAtom {
  CharSet set;
  bool single = false;
  uint8_t byte = 0;
};

class Parser {
 public:
  Parser(std::string_view text, bool case_insensitive)
      : text_(text), icase_(case_insensitive) {}

  AstPtr Run() {
    AstPtr root = ParseAlternation();
    if (!AtEnd()) {
      // Only an unmatched ')' stops the top-level alternation early.
      Fail(ParseErrorKind::kUnbalancedGroup, "unmatched ')'");
    }
    return root;
  }

  std::vector<std::string> TakeWarnings() { return std::move(warnings_); }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool LookingAt(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  [[noreturn]] void Fail(ParseErrorKind kind, std::string message,
                         UnsupportedKind unsupported = UnsupportedKind::kNone) {
    throw Failure{ParseError{kind, unsupported, pos_, std::move(message)}};
  }
  [[noreturn]] void Unsupported(UnsupportedKind kind, std::string message) {
    Fail(ParseErrorKind::kUnsupportedConstruct, std::move(message), kind);
  }

  void Warn(std::string message) { warnings_.push_back(std::move(message)); }

  void CheckSize(const AstPtr& node) {
    if (node->size > kMaxExpandedNodes)
      Unsupported(UnsupportedKind::kOther,
                  "counted repetition expands beyond " +
                      std::to_string(kMaxExpandedNodes) + " nodes");
  }

  AstPtr Constant(CharSet set) {
    if (icase_) set = set.CaseFolded();
    return ast::Constant(set);
  }

  static AstPtr FoldConcat(const std::vector<AstPtr>& items) {
    if (items.empty()) return ast::Epsilon();
    AstPtr acc = items.back();
    for (size_t i = items.size() - 1; i-- > 0;)
      acc = ast::Concat(items[i], acc);
    return acc;
  }

  static AstPtr FoldAlt(const std::vector<AstPtr>& branches) {
    AstPtr acc = branches.back();
    for (size_t i = branches.size() - 1; i-- > 0;)
      acc = ast::Alt(branches[i], acc);
    return acc;
  }

  AstPtr ParseAlternation() {
    std::vector<AstPtr> branches;
    branches.push_back(ParseConcat());
    while (Peek() == '|' && !AtEnd()) {
      ++pos_;
      branches.push_back(ParseConcat());
    }
    return FoldAlt(branches);
  }

  AstPtr ParseConcat() {
    std::vector<AstPtr> items;
    size_t total = 0;
    while (!AtEnd() && Peek() != '|' && Peek() != ')') {
      std::optional<AstPtr> atom = ParseAtom();
      if (!atom) continue;  // comment or inline flag setting
      std::vector<AstPtr> unit{*atom};
      while (auto q = ParseQuantifier()) {
        if (unit.size() == 1 && IsAnchor(*unit[0]))
          Unsupported(UnsupportedKind::kOther, "quantified anchor");
        unit = Expand(FoldConcat(unit), *q);
      }
      for (AstPtr& item : unit) {
        total += item->size + 1;
        items.push_back(std::move(item));
      }
      if (total > kMaxExpandedNodes) CheckSize(FoldConcat(items));
    }
    return FoldConcat(items);
  }

  static bool IsAnchor(const AstNode& n) {
    return n.kind == NodeKind::kAnchorStart || n.kind == NodeKind::kAnchorEnd;
  }

  struct Quantifier {
    int min = 0;
    int max = -1;  // -1: unbounded
    bool greedy = true;
  };

  std::optional<int> ParseNumber() {
    if (!IsDigit(Peek())) return std::nullopt;
    long value = 0;
    while (IsDigit(Peek())) {
      value = value * 10 + (Peek() - '0');
      if (value > 1000000) value = 1000000;
      ++pos_;
    }
    return static_cast<int>(value);
  }

  std::optional<Quantifier> ParseQuantifier() {
    Quantifier q;
    char c = Peek();
    if (AtEnd()) return std::nullopt;
    if (c == '*') {
      ++pos_;
    } else if (c == '+') {
      ++pos_;
      q.min = 1;
    } else if (c == '?') {
      ++pos_;
      q.max = 1;
    } else if (c == '{') {
      size_t save = pos_;
      ++pos_;
      std::optional<int> lo = ParseNumber();
      if (!lo) {
        pos_ = save;
        return std::nullopt;  // literal '{'
      }
      q.min = *lo;
      q.max = *lo;
      if (Peek() == ',') {
        ++pos_;
        std::optional<int> hi = ParseNumber();
        q.max = hi ? *hi : -1;
      }
      if (Peek() != '}') {
        pos_ = save;
        return std::nullopt;
      }
      ++pos_;
      if (q.max >= 0 && q.min > q.max) {
        pos_ = save;
        Fail(ParseErrorKind::kBadRepetitionBounds,
             "repetition minimum exceeds maximum");
      }
      if (q.min > kMaxRepetitionBound || q.max > kMaxRepetitionBound) {
        pos_ = save;
        Unsupported(UnsupportedKind::kOther,
                    "repetition bound above " +
                        std::to_string(kMaxRepetitionBound));
      }
    } else {
      return std::nullopt;
    }
    if (Peek() == '?' && !AtEnd()) {
      ++pos_;
      q.greedy = false;
      if (!lazy_warned_) {
        Warn("lazy quantifiers are analyzed as greedy");
        lazy_warned_ = true;
      }
    } else if (Peek() == '+' && !AtEnd()) {
      Unsupported(UnsupportedKind::kOther, "possessive quantifier");
    }
    return q;
  }

  // e{min,max} as a sequence of items: min mandatory copies followed by
  // either a star or (max - min) nested optionals.
  std::vector<AstPtr> Expand(const AstPtr& e, const Quantifier& q) {
    std::vector<AstPtr> out(static_cast<size_t>(q.min), e);
    if (q.max < 0) {
      out.push_back(ast::Star(e, q.greedy));
    } else if (q.max > q.min) {
      AstPtr tail = ast::Alt(e, ast::Epsilon());
      for (int i = q.min + 1; i < q.max; ++i) {
        tail = ast::Alt(ast::Concat(e, tail), ast::Epsilon());
        CheckSize(tail);
      }
      out.push_back(std::move(tail));
    }
    CheckSize(FoldConcat(out));
    return out;
  }

  std::optional<AstPtr> ParseAtom() {
    char c = Peek();
    switch (c) {
      case '(':
        return ParseGroup();
      case '[':
        return Constant(ParseClass());
      case '.':
        ++pos_;
        return Constant(CharSet::AnyButNewline());
      case '^':
        ++pos_;
        return ast::AnchorStart();
      case '$':
        ++pos_;
        return ast::AnchorEnd();
      case '\\':
        return ParseEscape();
      case '*':
      case '+':
      case '?':
        Fail(ParseErrorKind::kNothingToRepeat,
             std::string("quantifier '") + c + "' follows nothing");
      case '{':
        if (IsQuantifierBrace())
          Fail(ParseErrorKind::kNothingToRepeat, "quantifier follows nothing");
        [[fallthrough]];
      default:
        ++pos_;
        return Constant(CharSet::Of(static_cast<uint8_t>(c)));
    }
  }

  bool IsQuantifierBrace() {
    size_t save = pos_;
    bool is_quantifier = false;
    try {
      is_quantifier = ParseQuantifier().has_value();
    } catch (const Failure&) {
      is_quantifier = true;
    }
    pos_ = save;
    return is_quantifier;
  }

  std::optional<AstPtr> ParseGroup() {
    size_t open = pos_;
    ++pos_;  // '('
    bool saved_icase = icase_;
    if (Peek() == '?') {
      ++pos_;
      char k = Peek();
      if (k == ':' || k == '|') {
        ++pos_;
      } else if (k == '=' || k == '!') {
        Unsupported(UnsupportedKind::kLookAround, "look-ahead");
      } else if (k == '<' && (Peek(1) == '=' || Peek(1) == '!')) {
        Unsupported(UnsupportedKind::kLookAround, "look-behind");
      } else if (k == '>') {
        Unsupported(UnsupportedKind::kOther, "atomic group");
      } else if (k == '#') {
        while (!AtEnd() && Peek() != ')') ++pos_;
        if (AtEnd()) {
          pos_ = open;
          Fail(ParseErrorKind::kUnbalancedGroup, "unterminated comment");
        }
        ++pos_;
        return std::nullopt;
      } else if (k == 'P' && Peek(1) == '=') {
        Unsupported(UnsupportedKind::kBackReference, "named back-reference");
      } else if (k == 'P' && Peek(1) == '<') {
        pos_ += 2;
        SkipName('>');
      } else if (k == '<' || k == '\'') {
        ++pos_;
        SkipName(k == '<' ? '>' : '\'');
      } else if (k == '(') {
        Unsupported(UnsupportedKind::kOther, "conditional group");
      } else if (k == 'R' || IsDigit(k) || k == '&' || k == '+' ||
                 (k == '-' && IsDigit(Peek(1)))) {
        Unsupported(UnsupportedKind::kOther, "recursion or subroutine call");
      } else {
        // Inline flags: (?flags) or (?flags:...)
        bool on = true;
        while (!AtEnd() && Peek() != ')' && Peek() != ':') {
          char f = Peek();
          if (f == '-') {
            on = false;
          } else if (f == 'i') {
            icase_ = on;
          } else if (f >= 'a' && f <= 'z') {
            Warn(std::string("inline flag '") + f + "' ignored");
          } else if (f >= 'A' && f <= 'Z') {
            Warn(std::string("inline flag '") + f + "' ignored");
          } else {
            Unsupported(UnsupportedKind::kOther, "unknown group syntax");
          }
          ++pos_;
        }
        if (AtEnd()) {
          pos_ = open;
          Fail(ParseErrorKind::kUnbalancedGroup, "unterminated group");
        }
        if (Peek() == ')') {
          // Setting applies to the remainder of the enclosing group.
          ++pos_;
          return std::nullopt;
        }
        ++pos_;  // ':'
      }
    }
    AstPtr inner = ParseAlternation();
    if (Peek() != ')' || AtEnd()) {
      pos_ = open;
      Fail(ParseErrorKind::kUnbalancedGroup, "missing ')'");
    }
    ++pos_;
    icase_ = saved_icase;
    return inner;
  }

  void SkipName(char close) {
    while (!AtEnd() && Peek() != close) ++pos_;
    if (AtEnd()) Fail(ParseErrorKind::kUnbalancedGroup, "unterminated group name");
    ++pos_;
  }

  uint8_t ParseHexEscape() {
    // Positioned after "\\x".
    if (Peek() == '{') {
      ++pos_;
      int value = 0;
      int digits = 0;
      while (!AtEnd() && Peek() != '}') {
        int h = HexValue(Peek());
        if (h < 0) Fail(ParseErrorKind::kBadEscape, "bad \\x{...} escape");
        value = value * 16 + h;
        if (value > 255)
          Unsupported(UnsupportedKind::kOther, "code point above 0xff");
        ++digits;
        ++pos_;
      }
      if (AtEnd() || digits == 0)
        Fail(ParseErrorKind::kBadEscape, "bad \\x{...} escape");
      ++pos_;
      return static_cast<uint8_t>(value);
    }
    int value = 0;
    for (int i = 0; i < 2 && HexValue(Peek()) >= 0 && !AtEnd(); ++i) {
      value = value * 16 + HexValue(Peek());
      ++pos_;
    }
    return static_cast<uint8_t>(value);
  }

  // Escapes shared by classes and top level. Positioned after the
  // backslash; returns nullopt if the escape is not of this common kind.
  std::optional<ClassAtom> ParseCommonEscape(bool in_class) {
    char c = Peek();
    auto single = [&](uint8_t b) {
      ++pos_;
      return ClassAtom{CharSet::Of(b), true, b};
    };
    auto set = [&](const CharSet& s) {
      ++pos_;
      return ClassAtom{s, false, 0};
    };
    switch (c) {
      case 'd': return set(CharSet::Digit());
      case 'D': return set(CharSet::Digit().Complement());
      case 'w': return set(CharSet::Word());
      case 'W': return set(CharSet::Word().Complement());
      case 's': return set(CharSet::Space());
      case 'S': return set(CharSet::Space().Complement());
      case 'h': return set(CharSet::HorizSpace());
      case 'H': return set(CharSet::HorizSpace().Complement());
      case 'v': return set(CharSet::VertSpace());
      case 'V': return set(CharSet::VertSpace().Complement());
      case 'N':
        if (in_class) return std::nullopt;
        return set(CharSet::AnyButNewline());
      case 't': return single('\t');
      case 'n': return single('\n');
      case 'r': return single('\r');
      case 'f': return single('\f');
      case 'e': return single(0x1b);
      case 'a': return single(0x07);
      case 'x': {
        ++pos_;
        uint8_t b = ParseHexEscape();
        return ClassAtom{CharSet::Of(b), true, b};
      }
      case 'c': {
        ++pos_;
        if (AtEnd()) Fail(ParseErrorKind::kBadEscape, "\\c at end of pattern");
        char ctl = Peek();
        if (ctl >= 'a' && ctl <= 'z') ctl = static_cast<char>(ctl - 'a' + 'A');
        return single(static_cast<uint8_t>(ctl ^ 0x40));
      }
      case 'o': {
        ++pos_;
        if (Peek() != '{') Fail(ParseErrorKind::kBadEscape, "bad \\o escape");
        ++pos_;
        int value = 0;
        while (IsOctal(Peek()) && !AtEnd()) {
          value = value * 8 + (Peek() - '0');
          if (value > 255)
            Unsupported(UnsupportedKind::kOther, "code point above 0xff");
          ++pos_;
        }
        if (Peek() != '}') Fail(ParseErrorKind::kBadEscape, "bad \\o escape");
        ++pos_;
        return ClassAtom{CharSet::Of(static_cast<uint8_t>(value)), true,
                         static_cast<uint8_t>(value)};
      }
      case '0': {
        int value = 0;
        for (int i = 0; i < 3 && IsOctal(Peek()) && !AtEnd(); ++i) {
          value = value * 8 + (Peek() - '0');
          ++pos_;
        }
        return ClassAtom{CharSet::Of(static_cast<uint8_t>(value)), true,
                         static_cast<uint8_t>(value)};
      }
      case 'p':
      case 'P':
        Unsupported(UnsupportedKind::kOther, "Unicode property class");
      default:
        return std::nullopt;
    }
  }

  ClassAtom LiteralEscape() {
    char c = Peek();
    bool alnum = IsDigit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    if (alnum) Warn(std::string("unknown escape '\\") + c + "' taken literally");
    ++pos_;
    uint8_t b = static_cast<uint8_t>(c);
    return ClassAtom{CharSet::Of(b), true, b};
  }

  std::optional<AstPtr> ParseEscape() {
    ++pos_;  // backslash
    if (AtEnd()) Fail(ParseErrorKind::kBadEscape, "trailing backslash");
    char c = Peek();
    switch (c) {
      case 'b':
      case 'B':
        Unsupported(UnsupportedKind::kOther, "word boundary assertion");
      case 'A':
        ++pos_;
        return ast::AnchorStart();
      case 'z':
      case 'Z':
        ++pos_;
        return ast::AnchorEnd();
      case 'G':
      case 'K':
      case 'R':
      case 'X':
      case 'C':
        Unsupported(UnsupportedKind::kOther, std::string("escape \\") + c);
      case 'k':
      case 'g':
        Unsupported(UnsupportedKind::kBackReference, "back-reference");
      case 'Q': {
        ++pos_;
        std::vector<AstPtr> items;
        while (!AtEnd() && !LookingAt("\\E")) {
          items.push_back(Constant(CharSet::Of(static_cast<uint8_t>(Peek()))));
          ++pos_;
        }
        if (!AtEnd()) pos_ += 2;
        if (items.empty()) return std::nullopt;
        // FIXME: PCRE binds a following quantifier to the last quoted byte
        // only; here it applies to the whole run.
        return FoldConcat(items);
      }
      case 'E':
        ++pos_;
        return std::nullopt;
      default:
        break;
    }
    if (c >= '1' && c <= '9')
      Unsupported(UnsupportedKind::kBackReference, "back-reference");
    if (auto atom = ParseCommonEscape(/*in_class=*/false))
      return Constant(atom->set);
    return Constant(LiteralEscape().set);
  }

  CharSet ParseClass() {
    size_t open = pos_;
    ++pos_;  // '['
    bool negated = false;
    if (Peek() == '^' && !AtEnd()) {
      negated = true;
      ++pos_;
    }
    CharSet set;
    bool first = true;
    while (true) {
      if (AtEnd()) {
        pos_ = open;
        Fail(ParseErrorKind::kUnterminatedClass, "missing ']'");
      }
      if (Peek() == ']' && !first) {
        ++pos_;
        break;
      }
      first = false;
      ClassAtom lo = ParseClassAtom();
      if (lo.single && Peek() == '-' && Peek(1) != ']' && pos_ + 1 < text_.size()) {
        size_t dash = pos_;
        ++pos_;
        ClassAtom hi = ParseClassAtom();
        if (!hi.single) {
          // [a-\d]: the hyphen is literal.
          set.AddSet(lo.set);
          set.Add('-');
          set.AddSet(hi.set);
          continue;
        }
        if (hi.byte < lo.byte) {
          pos_ = dash;
          Fail(ParseErrorKind::kBadRange, "range out of order in class");
        }
        set.AddRange(lo.byte, hi.byte);
        continue;
      }
      set.AddSet(lo.set);
    }
    if (icase_) set = set.CaseFolded();
    if (negated) set = set.Complement();
    if (set.Empty()) {
      pos_ = open;
      Fail(ParseErrorKind::kBadRange, "character class matches nothing");
    }
    return set;
  }

  ClassAtom ParseClassAtom() {
    if (LookingAt("[:")) {
      size_t close = text_.find(":]", pos_ + 2);
      if (close != std::string_view::npos) {
        std::string_view name = text_.substr(pos_ + 2, close - pos_ - 2);
        bool negate = !name.empty() && name.front() == '^';
        if (negate) name.remove_prefix(1);
        std::optional<CharSet> posix = PosixClass(name);
        if (!posix) Fail(ParseErrorKind::kBadRange, "unknown POSIX class");
        pos_ = close + 2;
        return ClassAtom{negate ? posix->Complement() : *posix, false, 0};
      }
    }
    if (Peek() == '\\') {
      ++pos_;
      if (AtEnd()) Fail(ParseErrorKind::kUnterminatedClass, "missing ']'");
      if (Peek() == 'b') {
        ++pos_;
        return ClassAtom{CharSet::Of(0x08), true, 0x08};
      }
      if (auto atom = ParseCommonEscape(/*in_class=*/true)) return *atom;
      if (IsDigit(Peek())) {
        // Octal in a class, e.g. [\1].
        int value = 0;
        for (int i = 0; i < 3 && IsOctal(Peek()); ++i) {
          value = value * 8 + (Peek() - '0');
          ++pos_;
        }
        return ClassAtom{CharSet::Of(static_cast<uint8_t>(value)), true,
                         static_cast<uint8_t>(value)};
      }
      return LiteralEscape();
    }
    uint8_t b = static_cast<uint8_t>(Peek());
    ++pos_;
    return ClassAtom{CharSet::Of(b), true, b};
  }

  static std::optional<CharSet> PosixClass(std::string_view name) {
    if (name == "alpha") return CharSet::Range('a', 'z').Union(CharSet::Range('A', 'Z'));
    if (name == "digit") return CharSet::Digit();
    if (name == "alnum")
      return CharSet::Range('a', 'z').Union(CharSet::Range('A', 'Z')).Union(CharSet::Digit());
    if (name == "upper") return CharSet::Range('A', 'Z');
    if (name == "lower") return CharSet::Range('a', 'z');
    if (name == "space") return CharSet::Space();
    if (name == "blank") return CharSet::HorizSpace();
    if (name == "punct")
      return CharSet::Range(0x21, 0x2f).Union(CharSet::Range(0x3a, 0x40))
          .Union(CharSet::Range(0x5b, 0x60)).Union(CharSet::Range(0x7b, 0x7e));
    if (name == "xdigit")
      return CharSet::Digit().Union(CharSet::Range('a', 'f')).Union(CharSet::Range('A', 'F'));
    if (name == "word") return CharSet::Word();
    if (name == "cntrl") return CharSet::Range(0, 0x1f).Union(CharSet::Of(0x7f));
    if (name == "print") return CharSet::Range(0x20, 0x7e);
    if (name == "graph") return CharSet::Range(0x21, 0x7e);
    if (name == "ascii") return CharSet::Range(0, 0x7f);
    return std::nullopt;
  }

  std::string_view text_;
  size_t pos_ = 0;
  bool icase_;
  bool lazy_warned_ = false;
  std::vector<std::string> warnings_;
};

// Anchor placement. '^' may only lead and '$' may only end the top-level
// sequence. An alternation whose every branch starts with '^' (or ends
// with '$') is rewritten with the anchor factored out.

void FlattenConcat(const AstPtr& n, std::vector<AstPtr>* out) {
  if (n->kind == NodeKind::kConcat) {
    FlattenConcat(n->left, out);
    FlattenConcat(n->right, out);
  } else if (n->kind != NodeKind::kEpsilon) {
    out->push_back(n);
  }
}

void FlattenAlt(const AstPtr& n, std::vector<AstPtr>* out) {
  if (n->kind == NodeKind::kAlt) {
    FlattenAlt(n->left, out);
    FlattenAlt(n->right, out);
  } else {
    out->push_back(n);
  }
}

bool ContainsAnchor(const AstNode& n) {
  switch (n.kind) {
    case NodeKind::kAnchorStart:
    case NodeKind::kAnchorEnd:
      return true;
    case NodeKind::kConcat:
    case NodeKind::kAlt:
      return ContainsAnchor(*n.left) || ContainsAnchor(*n.right);
    case NodeKind::kStar:
      return ContainsAnchor(*n.left);
    default:
      return false;
  }
}

const AstNode* LeftmostOfSpine(const AstNode* n) {
  while (n->kind == NodeKind::kConcat) n = n->left.get();
  return n;
}

const AstNode* RightmostOfSpine(const AstNode* n) {
  while (n->kind == NodeKind::kConcat) n = n->right.get();
  return n;
}

// True if every anchor sits at the head ('^') or tail ('$') of the
// top-level concatenation spine.
bool AnchorsWellPlaced(const AstNode& root) {
  if (root.kind == NodeKind::kAnchorStart || root.kind == NodeKind::kAnchorEnd)
    return true;
  if (root.kind != NodeKind::kConcat) return !ContainsAnchor(root);
  const AstNode* head = LeftmostOfSpine(&root);
  const AstNode* tail = RightmostOfSpine(&root);
  bool ok = true;
  std::vector<const AstNode*> stack{&root};
  while (!stack.empty() && ok) {
    const AstNode* n = stack.back();
    stack.pop_back();
    if (n->kind == NodeKind::kConcat) {
      stack.push_back(n->left.get());
      stack.push_back(n->right.get());
    } else if (n == head && n->kind == NodeKind::kAnchorStart) {
      continue;
    } else if (n == tail && n->kind == NodeKind::kAnchorEnd) {
      continue;
    } else {
      ok = !ContainsAnchor(*n);
    }
  }
  return ok;
}

AstPtr SequenceOf(const std::vector<AstPtr>& items, size_t begin, size_t end) {
  if (begin >= end) return ast::Epsilon();
  AstPtr acc = items[end - 1];
  for (size_t i = end - 1; i-- > begin;) acc = ast::Concat(items[i], acc);
  return acc;
}

// Factors a shared leading '^' / trailing '$' out of a top-level
// alternation. Returns nullptr when that is not possible.
AstPtr HoistAnchors(const AstPtr& root) {
  std::vector<AstPtr> spine;
  FlattenConcat(root, &spine);
  bool lead = false, trail = false;
  size_t b = 0, e = spine.size();
  if (b < e && spine[b]->kind == NodeKind::kAnchorStart) { lead = true; ++b; }
  if (b < e && spine[e - 1]->kind == NodeKind::kAnchorEnd) { trail = true; --e; }
  if (e - b != 1 || spine[b]->kind != NodeKind::kAlt) return nullptr;

  std::vector<AstPtr> branches;
  FlattenAlt(spine[b], &branches);
  std::vector<std::vector<AstPtr>> seqs;
  bool all_start = true, all_end = true;
  for (const AstPtr& br : branches) {
    std::vector<AstPtr> items;
    FlattenConcat(br, &items);
    all_start = all_start && !items.empty() && items.front()->kind == NodeKind::kAnchorStart;
    all_end = all_end && !items.empty() && items.back()->kind == NodeKind::kAnchorEnd;
    seqs.push_back(std::move(items));
  }
  if (!(all_start && !lead) && !(all_end && !trail)) return nullptr;
  bool strip_start = all_start && !lead;
  bool strip_end = all_end && !trail;
  std::vector<AstPtr> rebuilt;
  for (auto& items : seqs) {
    size_t lo = strip_start ? 1 : 0;
    size_t hi = items.size() - (strip_end ? 1 : 0);
    rebuilt.push_back(SequenceOf(items, lo, std::max(lo, hi)));
  }
  AstPtr alt = rebuilt.back();
  for (size_t i = rebuilt.size() - 1; i-- > 0;) alt = ast::Alt(rebuilt[i], alt);
  std::vector<AstPtr> top;
  if (lead || strip_start) top.push_back(ast::AnchorStart());
  top.push_back(alt);
  if (trail || strip_end) top.push_back(ast::AnchorEnd());
  AstPtr out = SequenceOf(top, 0, top.size());
  return AnchorsWellPlaced(*out) ? out : nullptr;
}

}  // namespace

ParseResult Parse(const SourcePattern& pattern) {
  std::vector<std::string> warnings = pattern.notes;
  for (char f : pattern.ignored_flags)
    warnings.push_back(std::string("flag '") + f + "' ignored");
  Parser parser(pattern.text, pattern.flags.case_insensitive);
  try {
    AstPtr root = parser.Run();
    for (std::string& w : parser.TakeWarnings()) warnings.push_back(std::move(w));
    if (!AnchorsWellPlaced(*root)) {
      AstPtr hoisted = HoistAnchors(root);
      if (!hoisted) {
        return ParseResult(
            ParseError{ParseErrorKind::kUnsupportedConstruct,
                       UnsupportedKind::kOther, 0,
                       "anchor inside a group or alternative"},
            std::move(warnings));
      }
      root = std::move(hoisted);
    }
    return ParseResult(std::move(root), std::move(warnings));
  } catch (Failure& f) {
    for (std::string& w : parser.TakeWarnings()) warnings.push_back(std::move(w));
    return ParseResult(std::move(f.error), std::move(warnings));
  }
}

ParseResult Parse(std::string_view text) {
  return Parse(SourcePattern::Raw(std::string(text)));
}

const SyntaxReport& SupportedSyntaxReport() {
  static const SyntaxReport report = [] {
    SyntaxReport r;
    r.version = 1;
    r.supported = {
        {"literals", "abc", "bytes 0x00-0xff; \\xHH, \\x{H}, \\0oo, \\o{o}, \\cX, \\t \\n \\r \\f \\e \\a"},
        {"alternation", "a|b", ""},
        {"groups", "(a) (?:a) (?<n>a) (?P<n>a) (?'n'a)", "captures are not tracked"},
        {"character classes", "[a-z] [^0-9] [[:alpha:]]", "POSIX bracket names inside classes"},
        {"class escapes", "\\d \\w \\s \\h \\v and negations", "ASCII semantics"},
        {"dot", ".", "any byte except newline"},
        {"kleene star", "a*", ""},
        {"plus", "a+", "rewritten as a a*"},
        {"optional", "a?", "rewritten as (a|)"},
        {"counted repetition", "a{2} a{2,} a{2,5}", "expanded; bounds up to 1000"},
        {"lazy quantifiers", "a*? a+? a??", "accepted; analyzed as greedy"},
        {"anchors", "^ $ \\A \\z \\Z", "at the start/end of the whole pattern"},
        {"quoting", "\\Q...\\E", ""},
        {"inline flags", "(?i) (?i:...)", "only i is honored; others warn"},
        {"comments", "(?#...)", ""},
    };
    r.unsupported = {
        {"back-references", "\\1 \\k<n> (?P=n)", ""},
        {"look-around", "(?=a) (?!a) (?<=a) (?<!a)", ""},
        {"atomic groups", "(?>a)", ""},
        {"possessive quantifiers", "a*+", ""},
        {"word boundaries", "\\b \\B", ""},
        {"Unicode properties", "\\p{L}", ""},
        {"conditionals and recursion", "(?(1)a|b) (?R)", ""},
    };
    return r;
  }();
  return report;
}

}  // namespace rxscan
