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

#ifndef TBL_KBEST_HPP_
#define TBL_KBEST_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tbl/contextual.hpp"
#include "tbl/engine.hpp"
#include "tbl/lexicon.hpp"
#include "tbl/ratio.hpp"
#include "tbl/types.hpp"

namespace tbl {

struct KBestCondition {
  enum class Kind : std::uint8_t { kWhenTag, kWhenWord };
  Kind kind = Kind::kWhenTag;
  std::string value;  // the primary tag or the word

  friend auto operator<=>(const KBestCondition&, const KBestCondition&) = default;
};

// Add `add` to the tag set of every token matching `condition` whose
// context satisfies `trigger`. Triggers read primary tags only.
struct KBestRule {
  Tag add;
  KBestCondition condition;
  ContextualTrigger trigger;

  friend auto operator<=>(const KBestRule&, const KBestRule&) = default;
};

// Rejects WHENTAG conditions naming the added tag.
KBestRule make_kbest_rule(Tag add, KBestCondition condition,
                          ContextualTrigger trigger);

struct TagSetToken {
  Word word;
  Tag primary;
  std::vector<Tag> tags;  // sorted, unique, contains primary

  friend bool operator==(const TagSetToken&, const TagSetToken&) = default;
};

using TagSetSentence = std::vector<TagSetToken>;

struct TagSetCorpus {
  std::vector<TagSetSentence> sentences;

  std::size_t token_count() const;
  friend bool operator==(const TagSetCorpus&, const TagSetCorpus&) = default;
};

// Singleton sets around a single-tag annotation.
TagSetCorpus to_tag_sets(const Corpus& tagged);
// The primary tags as an ordinary tagged corpus.
Corpus primary_corpus(const TagSetCorpus& c);

// Returns the number of tags added.
std::size_t apply_kbest_rule_in_place(const KBestRule& r, TagSetCorpus& c);
TagSetCorpus apply_kbest_rule(const KBestRule& r, const TagSetCorpus& c);

struct KBestMetrics {
  std::size_t tokens = 0;
  std::size_t covered = 0;     // truth tag inside the set
  std::size_t tag_total = 0;   // sum of set sizes

  Ratio accuracy() const { return {static_cast<std::int64_t>(covered),
                                   static_cast<std::int64_t>(tokens ? tokens : 1)}; }
  Ratio avg_tags() const { return {static_cast<std::int64_t>(tag_total),
                                   static_cast<std::int64_t>(tokens ? tokens : 1)}; }
};

KBestMetrics kbest_metrics(const TagSetCorpus& c, const Corpus& truth);

// Training-time effect of one add-tag rule.
struct KBestScore {
  std::int64_t covered = 0;  // tokens whose truth tag becomes part of the set
  std::int64_t added = 0;    // tags inserted overall

  Ratio ratio() const { return {covered, added ? added : 1}; }
  std::int64_t error_reduction() const { return covered; }

  friend bool operator==(const KBestScore&, const KBestScore&) = default;
};

// Better coverage per added tag first, then more coverage.
bool outranks(const KBestScore& a, const KBestScore& b);

struct KBestConfig {
  Ratio min_ratio{1, 20};
  std::int64_t min_covered = 2;
  std::optional<std::size_t> max_rules;
  unsigned threads = 1;
};

// Rules adding the truth tag at an uncovered position, one per trigger the
// site instantiates and per condition form (its primary tag, its word).
std::vector<KBestRule> enumerate_kbest_candidates(const Sentence& primaries,
                                                  std::size_t i,
                                                  const Tag& truth_tag);

// `tagged` is the single-tag tagger's output on text whose gold tags are
// `truth`.
std::vector<LearnedRule<KBestRule, KBestScore>> learn_kbest_rules(
    const Corpus& tagged, const Corpus& truth, const KBestConfig& cfg);

// Tags of hapax words in the lexicon ranked by frequency, the usual stand-in
// for the tag distribution of unseen words. Ties go to the smaller symbol.
std::vector<Tag> most_frequent_unknown_tags(const Lexicon& lex, std::size_t k);

// Known words carry every tag the lexicon has for them (primary = most
// likely), unknown words carry unknown_tags (primary = the first).
TagSetCorpus kbest_baseline(const Corpus& text, const Lexicon& lex,
                            const std::vector<Tag>& unknown_tags);

// `word/primary|other|...`, primary first, the rest in byte order.
std::string render_kbest(const TagSetCorpus& c);
TagSetCorpus parse_kbest(std::string_view text);

}  // namespace tbl

#endif  // TBL_KBEST_HPP_
