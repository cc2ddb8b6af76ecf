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

#include "tbl/lexicon.hpp"

#include <algorithm>
#include <charconv>

#include "tbl/utf8.hpp"

namespace tbl {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    fn(text.substr(pos, end - pos), ++line_no);
    pos = end + 1;
  }
}

const BigramTable::Neighbors& lookup(
    const std::map<Word, BigramTable::Neighbors, std::less<>>& m,
    std::string_view w) {
  static const BigramTable::Neighbors kEmpty;
  auto it = m.find(w);
  return it == m.end() ? kEmpty : it->second;
}

}  // namespace

void Lexicon::add(const Word& w, const Tag& t, std::size_t n) {
  if (n == 0) throw DataError("lexicon counts must be positive");
  entries_[w][t] += n;
  total_tokens_ += n;
}

bool Lexicon::contains(std::string_view w) const {
  return entries_.find(w) != entries_.end();
}

const TagCounts* Lexicon::find(std::string_view w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<Tag> Lexicon::most_likely_tag(std::string_view w) const {
  const TagCounts* counts = find(w);
  if (!counts) return std::nullopt;
  // Map iteration is by ascending tag, so strict > keeps the smallest on ties.
  const Tag* best = nullptr;
  std::size_t best_n = 0;
  for (const auto& [tag, n] : *counts) {
    if (n > best_n) {
      best = &tag;
      best_n = n;
    }
  }
  return *best;
}

std::vector<Tag> Lexicon::ranked_tags(std::string_view w) const {
  std::vector<Tag> out;
  const TagCounts* counts = find(w);
  if (!counts) return out;
  std::vector<std::pair<std::size_t, Tag>> ranked;
  for (const auto& [tag, n] : *counts) ranked.emplace_back(n, tag);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto& r : ranked) out.push_back(std::move(r.second));
  return out;
}

Lexicon build_lexicon(const Corpus& c) {
  Lexicon lex;
  for (std::size_t si = 0; si < c.sentences.size(); ++si) {
    for (const auto& t : c.sentences[si]) {
      if (!t.tag)
        throw DataError("untagged token '" + t.word + "' in sentence " +
                        std::to_string(si + 1));
      lex.add(t.word, *t.tag);
    }
  }
  return lex;
}

std::string render_lexicon(const Lexicon& lex) {
  std::string out;
  for (const auto& [word, counts] : lex.entries()) {
    out += word;
    for (const auto& tag : lex.ranked_tags(word)) {
      out += ' ';
      out += tag;
      out += ' ';
      out += std::to_string(counts.find(tag)->second);
    }
    out += '\n';
  }
  return out;
}

Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto f = split_ws(line);
    if (f.empty()) return;
    if (f.size() < 3 || f.size() % 2 == 0)
      throw ParseError("lexicon line needs a word and tag/count pairs", line_no);
    Word word(f[0]);
    if (lex.contains(word))
      throw ParseError("duplicate lexicon entry '" + word + "'", line_no);
    for (std::size_t i = 1; i < f.size(); i += 2) {
      if (!is_valid_tag(f[i]))
        throw ParseError("invalid tag '" + std::string(f[i]) + "'", line_no);
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(f[i + 1].data(),
                                       f[i + 1].data() + f[i + 1].size(), n);
      if (ec != std::errc() || ptr != f[i + 1].data() + f[i + 1].size() || n == 0)
        throw ParseError("bad count '" + std::string(f[i + 1]) + "'", line_no);
      if (lex.find(word) && lex.find(word)->count(f[i]))
        throw ParseError("duplicate tag '" + std::string(f[i]) + "'", line_no);
      lex.add(word, Tag(f[i]), n);
    }
  });
  return lex;
}

Wordlist::Wordlist(std::set<Word, std::less<>> forms) : forms_(std::move(forms)) {
  for (const auto& form : forms_) {
    std::size_t n = utf8::length(form);
    for (std::size_t k = 1; k <= kMaxAffixLength && k < n; ++k) {
      auto tail = utf8::last(form, k);
      auto head = utf8::first(form, k);
      suffixes_[std::string(form.substr(0, form.size() - tail.size()))]
          .emplace_back(tail);
      prefixes_[std::string(form.substr(head.size()))].emplace_back(head);
    }
  }
  for (auto* index : {&suffixes_, &prefixes_})
    for (auto& [stem, xs] : *index) std::sort(xs.begin(), xs.end());
}

bool Wordlist::affix_query(AffixOp op, std::string_view w,
                           std::string_view x) const {
  std::size_t len = utf8::length(x);
  if (len < 1 || len > kMaxAffixLength)
    throw DataError("affix '" + std::string(x) + "' must be 1.." +
                    std::to_string(kMaxAffixLength) + " characters");
  switch (op) {
    case AffixOp::kDeleteSuffix:
      return w.size() > x.size() && w.ends_with(x) &&
             contains(w.substr(0, w.size() - x.size()));
    case AffixOp::kDeletePrefix:
      return w.size() > x.size() && w.starts_with(x) &&
             contains(w.substr(x.size()));
    case AffixOp::kAddSuffix:
      return contains(std::string(w) + std::string(x));
    case AffixOp::kAddPrefix:
      return contains(std::string(x) + std::string(w));
  }
  return false;
}

std::vector<std::string> Wordlist::candidate_affixes(AffixOp op,
                                                     std::string_view w) const {
  const ExtensionIndex* index = nullptr;
  if (op == AffixOp::kAddSuffix) index = &suffixes_;
  if (op == AffixOp::kAddPrefix) index = &prefixes_;
  if (!index) throw DataError("candidate_affixes needs an add operation");
  auto it = index->find(w);
  if (it == index->end()) return {};
  return it->second;
}

Wordlist build_wordlist(const Lexicon& lex,
                        const std::set<Word, std::less<>>& extra) {
  std::set<Word, std::less<>> forms = extra;
  for (const auto& [word, counts] : lex.entries()) forms.insert(word);
  return Wordlist(std::move(forms));
}

std::string render_wordlist(const Wordlist& wl) {
  std::string out;
  for (const auto& w : wl.forms()) {
    out += w;
    out += '\n';
  }
  return out;
}

Wordlist parse_wordlist(std::string_view text) {
  std::set<Word, std::less<>> forms;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto f = split_ws(line);
    if (f.empty()) return;
    if (f.size() != 1)
      throw ParseError("wordlist lines hold exactly one word", line_no);
    forms.emplace(f[0]);
  });
  return Wordlist(std::move(forms));
}

void BigramTable::add(const Word& left, const Word& right) {
  left_[right].insert(left);
  right_[left].insert(right);
}

const BigramTable::Neighbors& BigramTable::left_neighbors(std::string_view w) const {
  return lookup(left_, w);
}

const BigramTable::Neighbors& BigramTable::right_neighbors(std::string_view w) const {
  return lookup(right_, w);
}

bool BigramTable::has_left(std::string_view w, std::string_view neighbor) const {
  return left_neighbors(w).count(neighbor) > 0;
}

bool BigramTable::has_right(std::string_view w, std::string_view neighbor) const {
  return right_neighbors(w).count(neighbor) > 0;
}

BigramTable build_bigrams(const Corpus& text) {
  BigramTable bg;
  for (const auto& s : text.sentences)
    for (std::size_t i = 1; i < s.size(); ++i) bg.add(s[i - 1].word, s[i].word);
  return bg;
}

}  // namespace tbl
