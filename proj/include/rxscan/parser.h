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
#ifndef RXSCAN_PARSER_H_
#define RXSCAN_PARSER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rxscan/ast.h"

namespace rxscan {

struct PatternFlags {
  bool case_insensitive = false;

  friend bool operator==(const PatternFlags&, const PatternFlags&) = default;
};

// A pattern as found in a corpus. Flag letters other than 'i' are kept in
// ignored_flags and surface as parse warnings.
struct SourcePattern {
  std::string text;
  PatternFlags flags;
  std::string ignored_flags;
  std::string source;              // file name or other tag, may be empty
  std::optional<size_t> line;      // 1-based line of origin
  std::vector<std::string> notes;  // ingest-time warnings

  static SourcePattern Raw(std::string text);

  // Builds a pattern from flag letters, e.g. "ims".
  static SourcePattern WithFlags(std::string text, std::string_view letters);

  // Accepts "/body/flags"; any other input is taken as a raw pattern.
  static SourcePattern FromDelimited(std::string_view text);

  std::string FlagLetters() const;
  std::string Origin() const;
};

enum class ParseErrorKind {
  kUnbalancedGroup,
  kUnterminatedClass,
  kBadRange,
  kBadRepetitionBounds,
  kNothingToRepeat,
  kBadEscape,
  kUnsupportedConstruct,
};

enum class UnsupportedKind {
  kNone,
  kBackReference,
  kLookAround,
  kOther,
};

const char* ParseErrorKindName(ParseErrorKind kind);
const char* UnsupportedKindName(UnsupportedKind kind);

struct ParseError {
  ParseErrorKind kind;
  UnsupportedKind unsupported = UnsupportedKind::kNone;
  size_t offset = 0;
  std::string message;

  bool IsUnsupported() const {
    return kind == ParseErrorKind::kUnsupportedConstruct;
  }
  std::string ToString() const;
};

class ParseResult {
 public:
  ParseResult(AstPtr ast, std::vector<std::string> warnings)
      : value_(std::move(ast)), warnings_(std::move(warnings)) {}
  ParseResult(ParseError error, std::vector<std::string> warnings)
      : value_(std::move(error)), warnings_(std::move(warnings)) {}

  bool ok() const { return std::holds_alternative<AstPtr>(value_); }
  const AstPtr& ast() const { return std::get<AstPtr>(value_); }
  const ParseError& error() const { return std::get<ParseError>(value_); }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::variant<AstPtr, ParseError> value_;
  std::vector<std::string> warnings_;
};

// Upper bounds on what the parser will expand. Larger inputs are reported
// as UnsupportedConstruct(other).
inline constexpr int kMaxRepetitionBound = 1000;
inline constexpr size_t kMaxExpandedNodes = 200000;

ParseResult Parse(const SourcePattern& pattern);
ParseResult Parse(std::string_view text);

struct SyntaxItem {
  std::string name;
  std::string example;
  std::string note;
};

struct SyntaxReport {
  int version = 1;
  std::vector<SyntaxItem> supported;
  std::vector<SyntaxItem> unsupported;
};

const SyntaxReport& SupportedSyntaxReport();

}  // namespace rxscan

#endif  // RXSCAN_PARSER_H_
