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

#ifndef TBL_UNKNOWN_HPP_
#define TBL_UNKNOWN_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbl/engine.hpp"
#include "tbl/initial_annotator.hpp"
#include "tbl/lexicon.hpp"
#include "tbl/types.hpp"

namespace tbl {

// Conditions an unknown-word rule can test. Everything is a property of the
// word type: its spelling, the wordlist, or the bigram table.
enum class UnknownTriggerKind {
  kDeletePrefix,  // removing prefix x leaves a known word
  kHasPrefix,     // the first 1..4 characters are x
  kDeleteSuffix,  // removing suffix x leaves a known word
  kHasSuffix,     // the last 1..4 characters are x
  kAddSuffix,     // word + x is a known word
  kAddPrefix,     // x + word is a known word
  kGoodLeft,      // x was seen immediately left of the word
  kGoodRight,     // x was seen immediately right of the word
  kHasChar,       // character x occurs in the word
};

std::string_view mnemonic(UnknownTriggerKind kind);
std::optional<UnknownTriggerKind> unknown_trigger_from_mnemonic(std::string_view m);

// "Change the tag of an unknown word (from `from`) to `to` if ...".
// An absent `from` matches any current tag.
struct UnknownRule {
  std::optional<Tag> from;
  Tag to;
  UnknownTriggerKind kind = UnknownTriggerKind::kHasSuffix;
  std::string arg;

  friend auto operator<=>(const UnknownRule&, const UnknownRule&) = default;
};

// Validating constructor: affixes are 1..4 characters, HasChar takes one
// character, words/tags are well formed, and from != to.
UnknownRule make_unknown_rule(std::optional<Tag> from, Tag to,
                              UnknownTriggerKind kind, std::string arg);

bool trigger_fires(const UnknownRule& r, std::string_view w,
                   const Wordlist& wl, const BigramTable& bg);

// Capitalization guess, then each rule in order whose from-tag matches the
// running tag and whose trigger fires.
Tag apply_unknown_rules(std::span<const UnknownRule> rules, std::string_view w,
                        const Wordlist& wl, const BigramTable& bg,
                        const UnknownTagDefaults& d);

// Data-driven candidates for one mistagged unknown word: to = truth, from
// is the current tag or the wildcard, triggers drawn only from what the
// word itself and its neighbor sets offer.
std::vector<UnknownRule> enumerate_unknown_candidates(std::string_view w,
                                                      const Tag& current,
                                                      const Tag& truth,
                                                      const Wordlist& wl,
                                                      const BigramTable& bg);

struct UnknownLearnOptions {
  // Leading share of sentences that plays the part of the lexicon; the
  // rest supplies the unknown-word training instances.
  double lexicon_fraction = 0.5;
  LearnerConfig config;
  UnknownTagDefaults defaults;
  // Unioned into the wordlist used for the affix conditions.
  std::set<Word, std::less<>> extra_words;
};

// The split, wordlist and bigram table a training run used, exposed so
// tests and oracles can rebuild the same problem.
struct UnknownTrainingSet {
  Lexicon lexicon;  // from the leading split
  Wordlist wordlist;
  BigramTable bigrams;  // from the whole training text
  // Occurrences in the trailing split whose word is not in `lexicon`.
  std::vector<std::pair<Word, Tag>> instances;
};

UnknownTrainingSet prepare_unknown_training(const Corpus& train,
                                            const UnknownLearnOptions& opts);

std::vector<LearnedRule<UnknownRule>> learn_unknown_rules(
    const UnknownTrainingSet& data, const UnknownLearnOptions& opts);

// Convenience: prepare_unknown_training, then learn.
std::vector<LearnedRule<UnknownRule>> learn_unknown_rules(
    const Corpus& train, const UnknownLearnOptions& opts);

}  // namespace tbl

#endif  // TBL_UNKNOWN_HPP_
