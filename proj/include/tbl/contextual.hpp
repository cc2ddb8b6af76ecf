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

#ifndef TBL_CONTEXTUAL_HPP_
#define TBL_CONTEXTUAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbl/engine.hpp"
#include "tbl/initial_annotator.hpp"
#include "tbl/lexicon.hpp"
#include "tbl/types.hpp"
#include "tbl/unknown.hpp"

namespace tbl {

// Contexts a change-tag rule can condition on. The first block looks at
// neighboring tags, the second at neighboring or current words.
enum class TriggerKind : std::uint8_t {
  kPrevTag,            // tag(i-1) = a
  kNextTag,            // tag(i+1) = a
  kPrev2Tag,           // tag(i-2) = a
  kNext2Tag,           // tag(i+2) = a
  kPrevOneOrTwoTag,    // a in tag(i-1), tag(i-2)
  kNextOneOrTwoTag,    // a in tag(i+1), tag(i+2)
  kPrevOneToThreeTag,  // a in tag(i-1), tag(i-2), tag(i-3)
  kNextOneToThreeTag,  // a in tag(i+1), tag(i+2), tag(i+3)
  kSurroundTag,        // tag(i-1) = a, tag(i+1) = b
  kPrevBigramTag,      // tag(i-1) = a, tag(i-2) = b
  kNextBigramTag,      // tag(i+1) = a, tag(i+2) = b
  kPrevWord,           // word(i-1) = a
  kNextWord,           // word(i+1) = a
  kPrev2Word,          // word(i-2) = a
  kNext2Word,          // word(i+2) = a
  kPrevOneOrTwoWord,   // a in word(i-1), word(i-2)
  kNextOneOrTwoWord,   // a in word(i+1), word(i+2)
  kCurWordPrevWord,    // word(i) = a, word(i-1) = b
  kCurWordNextWord,    // word(i) = a, word(i+1) = b
  kCurWordPrevTag,     // word(i) = a, tag(i-1) = b
  kCurWordNextTag,     // word(i) = a, tag(i+1) = b
};

enum class ArgType : std::uint8_t { kNone, kTag, kWord };

struct TriggerInfo {
  TriggerKind kind;
  std::string_view mnemonic;
  ArgType arg1;
  ArgType arg2;

  int arity() const { return arg2 == ArgType::kNone ? 1 : 2; }
  bool word_based() const {
    return arg1 == ArgType::kWord || arg2 == ArgType::kWord;
  }
};

std::span<const TriggerInfo> trigger_inventory();
const TriggerInfo& trigger_info(TriggerKind kind);
std::optional<TriggerKind> trigger_from_mnemonic(std::string_view m);

struct ContextualTrigger {
  TriggerKind kind = TriggerKind::kPrevTag;
  std::string arg1;
  std::string arg2;  // empty for one-argument kinds

  friend auto operator<=>(const ContextualTrigger&, const ContextualTrigger&) = default;
};

// Change `from` to `to` wherever the trigger holds.
struct ContextualRule {
  Tag from;
  Tag to;
  ContextualTrigger trigger;

  friend auto operator<=>(const ContextualRule&, const ContextualRule&) = default;
};

// Validates argument count and form; STAART is a legal argument.
ContextualTrigger make_trigger(TriggerKind kind, std::string arg1,
                               std::string arg2 = {});
// Also rejects from == to.
ContextualRule make_contextual_rule(Tag from, Tag to, ContextualTrigger trigger);

// Evaluates against the sentence's current tags. Positions off either end
// read as the STAART sentinel word and tag. Throws DataError if i is out of
// range or a consulted token is untagged.
bool trigger_fires(const ContextualTrigger& t, const Sentence& s, std::size_t i);

// Two-phase application: every position whose tag is r.from and whose
// trigger holds on the pre-rule tags is collected, then all are rewritten.
// Returns the number of tokens changed.
std::size_t apply_contextual_rule_in_place(const ContextualRule& r, Corpus& c);
Corpus apply_contextual_rule(const ContextualRule& r, const Corpus& c);

// Every trigger the context of position i instantiates, one per distinct
// value for disjunctive kinds.
std::vector<ContextualTrigger> instantiate_triggers(const Sentence& s,
                                                    std::size_t i,
                                                    bool tag_triggers_only = false);

// Rules from the current tag at i to truth_tag, one per instantiated trigger.
std::vector<ContextualRule> enumerate_context_candidates(
    const Sentence& s, std::size_t i, const Tag& truth_tag,
    bool tag_triggers_only = false);

struct ContextualLearnOptions {
  LearnerConfig config;
  // Restrict learning to tag-based triggers (no word references).
  bool tag_triggers_only = false;
};

std::vector<LearnedRule<ContextualRule>> learn_contextual_rules(
    const Corpus& initial, const Corpus& truth, const ContextualLearnOptions& opts);

// Everything needed to tag new text.
struct TaggerModel {
  Lexicon lexicon;
  Wordlist wordlist;
  std::vector<UnknownRule> unknown_rules;
  std::vector<ContextualRule> contextual_rules;
  UnknownTagDefaults defaults;
};

// Initial annotation, then every contextual rule corpus-wide in order.
// The bigram table for unknown-word features is built from c itself.
Corpus tag(const Corpus& c, const TaggerModel& model);

Corpus tag(const Corpus& c, const Lexicon& lex,
           std::span<const UnknownRule> unknown_rules,
           std::span<const ContextualRule> contextual_rules,
           const Wordlist& wl, const BigramTable& bg,
           const UnknownTagDefaults& d);

}  // namespace tbl

#endif  // TBL_CONTEXTUAL_HPP_
