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

#include "tbl/corpus_io.hpp"

#include <fstream>
#include <sstream>

namespace tbl {

namespace {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits one line into whitespace-separated fields, remembering columns.
std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

template <class PerLine>
void for_each_line(std::string_view text, PerLine&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(text.substr(pos, end - pos), line_no);
    pos = end + 1;
  }
}

}  // namespace

Corpus parse_tagged(std::string_view text) {
  Corpus c;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto fields = split_fields(line);
    if (fields.empty()) return;
    Sentence s;
    s.reserve(fields.size());
    for (const auto& f : fields) {
      std::size_t slash = f.text.rfind('/');
      if (slash == std::string_view::npos)
        throw ParseError("token '" + std::string(f.text) + "' has no '/TAG'",
                         line_no, f.column);
      std::string_view word = f.text.substr(0, slash);
      std::string_view tag = f.text.substr(slash + 1);
      if (word.empty())
        throw ParseError("empty word in '" + std::string(f.text) + "'",
                         line_no, f.column);
      if (tag.empty())
        throw ParseError("empty tag in '" + std::string(f.text) + "'", line_no,
                         f.column);
      if (word == kSentinel || tag == kSentinel)
        throw ParseError("reserved symbol STAART in corpus", line_no, f.column);
      s.push_back(Token{Word(word), Tag(tag)});
    }
    c.sentences.push_back(std::move(s));
  });
  return c;
}

Corpus parse_raw(std::string_view text) {
  Corpus c;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto fields = split_fields(line);
    if (fields.empty()) return;
    Sentence s;
    s.reserve(fields.size());
    for (const auto& f : fields) {
      if (f.text == kSentinel)
        throw ParseError("reserved symbol STAART in corpus", line_no, f.column);
      s.push_back(Token{Word(f.text), std::nullopt});
    }
    c.sentences.push_back(std::move(s));
  });
  return c;
}

std::string render_tagged(const Corpus& c) {
  std::string out;
  for (std::size_t si = 0; si < c.sentences.size(); ++si) {
    const auto& s = c.sentences[si];
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].tag)
        throw DataError("untagged token '" + s[i].word + "' in sentence " +
                        std::to_string(si + 1));
      if (i) out += ' ';
      out += s[i].word;
      out += '/';
      out += *s[i].tag;
    }
    out += '\n';
  }
  return out;
}

std::string render_raw(const Corpus& c) {
  std::string out;
  for (const auto& s : c.sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += s[i].word;
    }
    out += '\n';
  }
  return out;
}

Corpus strip_tags(const Corpus& c) {
  Corpus out = c;
  for (auto& s : out.sentences)
    for (auto& t : s) t.tag.reset();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace tbl
