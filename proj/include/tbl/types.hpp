// Copyright 2026 The tbltag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TBL_TYPES_HPP_
#define TBL_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tbl {

// Surface form of a token. Non-empty, no whitespace, case preserved.
using Word = std::string;
// Part-of-speech symbol. Non-empty, no whitespace, no '/'.
using Tag = std::string;

// Reserved word/tag standing in for positions beyond either sentence edge.
inline constexpr std::string_view kSentinel = "STAART";

struct Token {
  Word word;
  std::optional<Tag> tag;

  friend bool operator==(const Token&, const Token&) = default;
};

using Sentence = std::vector<Token>;

struct Corpus {
  std::vector<Sentence> sentences;

  std::size_t token_count() const;
  bool fully_tagged() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Base of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0);
  // Prefixes the message with `source:line:column:` in compiler style.
  ParseError(const std::string& source, const std::string& what,
             std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// Well-formed but unusable data: shape mismatches, missing tags, empty splits.
class DataError : public Error {
 public:
  using Error::Error;
};

// A learner or applier broke one of its own guarantees.
class InvariantError : public Error {
 public:
  using Error::Error;
};

bool is_valid_word(std::string_view w);
bool is_valid_tag(std::string_view t);

// Throws DataError naming the first sentence whose length differs.
void require_same_shape(const Corpus& a, const Corpus& b);

}  // namespace tbl

#endif  // TBL_TYPES_HPP_
