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

#ifndef TBL_LEXICON_HPP_
#define TBL_LEXICON_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tbl/types.hpp"

namespace tbl {

// Longest affix any affix-based feature may reference, in scalar values.
inline constexpr std::size_t kMaxAffixLength = 4;

using TagCounts = std::map<Tag, std::size_t, std::less<>>;

// Per-word tag frequencies gathered from a tagged corpus.
class Lexicon {
 public:
  using Entries = std::map<Word, TagCounts, std::less<>>;

  // Adds n occurrences of (w, t). n must be positive.
  void add(const Word& w, const Tag& t, std::size_t n = 1);

  bool contains(std::string_view w) const;
  const TagCounts* find(std::string_view w) const;

  // Highest-count tag; ties go to the lexicographically smallest tag.
  std::optional<Tag> most_likely_tag(std::string_view w) const;

  // Tags of w ordered by descending count, then by tag symbol.
  std::vector<Tag> ranked_tags(std::string_view w) const;

  const Entries& entries() const { return entries_; }
  std::size_t total_tokens() const { return total_tokens_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  Entries entries_;
  std::size_t total_tokens_ = 0;
};

// Throws DataError if any token is untagged.
Lexicon build_lexicon(const Corpus& c);

// `word tag1 count1 tag2 count2 ...`, one word per line, words in byte
// order, tags by descending count then symbol.
std::string render_lexicon(const Lexicon& lex);
Lexicon parse_lexicon(std::string_view text);

enum class AffixOp { kDeletePrefix, kDeleteSuffix, kAddPrefix, kAddSuffix };

// Known word forms plus extension indexes answering "which strings of 1..4
// characters can be glued onto w to make a known word" without scanning.
class Wordlist {
 public:
  Wordlist() = default;
  explicit Wordlist(std::set<Word, std::less<>> forms);

  bool contains(std::string_view w) const { return forms_.count(w) > 0; }
  const std::set<Word, std::less<>>& forms() const { return forms_; }
  std::size_t size() const { return forms_.size(); }

  // Throws DataError unless 1 <= length(x) <= kMaxAffixLength.
  bool affix_query(AffixOp op, std::string_view w, std::string_view x) const;

  // Every x accepted by affix_query(op, w, x). op must be an add operation.
  // Sorted ascending.
  std::vector<std::string> candidate_affixes(AffixOp op,
                                             std::string_view w) const;

  friend bool operator==(const Wordlist& a, const Wordlist& b) {
    return a.forms_ == b.forms_;
  }

 private:
  using ExtensionIndex =
      std::map<std::string, std::vector<std::string>, std::less<>>;

  std::set<Word, std::less<>> forms_;
  ExtensionIndex suffixes_;  // stem -> x with stem + x known
  ExtensionIndex prefixes_;  // stem -> x with x + stem known
};

// keys(lex) united with extra.
Wordlist build_wordlist(const Lexicon& lex,
                        const std::set<Word, std::less<>>& extra = {});

std::string render_wordlist(const Wordlist& wl);
// One word per line; blank lines ignored.
Wordlist parse_wordlist(std::string_view text);

// Word types seen immediately left / right of each word type.
class BigramTable {
 public:
  using Neighbors = std::set<Word, std::less<>>;

  void add(const Word& left, const Word& right);

  // Words ever seen immediately left of w (empty set if none).
  const Neighbors& left_neighbors(std::string_view w) const;
  const Neighbors& right_neighbors(std::string_view w) const;

  bool has_left(std::string_view w, std::string_view neighbor) const;
  bool has_right(std::string_view w, std::string_view neighbor) const;

  bool empty() const { return left_.empty(); }
  const std::map<Word, Neighbors, std::less<>>& all_left() const { return left_; }
  const std::map<Word, Neighbors, std::less<>>& all_right() const { return right_; }

 private:
  std::map<Word, Neighbors, std::less<>> left_;
  std::map<Word, Neighbors, std::less<>> right_;
};

// Adjacent pairs within each sentence; tags, if any, are ignored.
BigramTable build_bigrams(const Corpus& text);

}  // namespace tbl

#endif  // TBL_LEXICON_HPP_
