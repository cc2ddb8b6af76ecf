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

#include "tbl/types.hpp"

#include <algorithm>
#include <numeric>

namespace tbl {

namespace {

std::string with_position(const std::string& what, std::size_t line,
                          std::size_t column) {
  if (line == 0) return what;
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + what;
}

std::string with_source(const std::string& source, const std::string& what,
                        std::size_t line, std::size_t column) {
  std::string out = source;
  if (line != 0) out += ":" + std::to_string(line);
  if (line != 0 && column != 0) out += ":" + std::to_string(column);
  return out + ": " + what;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line,
                       std::size_t column)
    : Error(with_position(what, line, column)),
      detail_(what),
      line_(line),
      column_(column) {}

ParseError::ParseError(const std::string& source, const std::string& what,
                       std::size_t line, std::size_t column)
    : Error(with_source(source, what, line, column)),
      detail_(what),
      line_(line),
      column_(column) {}

std::size_t Corpus::token_count() const {
  return std::accumulate(
      sentences.begin(), sentences.end(), std::size_t{0},
      [](std::size_t n, const Sentence& s) { return n + s.size(); });
}

bool Corpus::fully_tagged() const {
  for (const auto& s : sentences)
    for (const auto& t : s)
      if (!t.tag) return false;
  return true;
}

bool is_valid_word(std::string_view w) {
  return !w.empty() && std::none_of(w.begin(), w.end(), is_space);
}

bool is_valid_tag(std::string_view t) {
  return is_valid_word(t) && t.find('/') == std::string_view::npos;
}

void require_same_shape(const Corpus& a, const Corpus& b) {
  if (a.sentences.size() != b.sentences.size())
    throw DataError("corpus shape mismatch: " +
                    std::to_string(a.sentences.size()) + " vs " +
                    std::to_string(b.sentences.size()) + " sentences");
  for (std::size_t i = 0; i < a.sentences.size(); ++i) {
    if (a.sentences[i].size() != b.sentences[i].size())
      throw DataError("corpus shape mismatch at sentence " +
                      std::to_string(i + 1) + ": " +
                      std::to_string(a.sentences[i].size()) + " vs " +
                      std::to_string(b.sentences[i].size()) + " tokens");
  }
}

}  // namespace tbl
