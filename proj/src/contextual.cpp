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

#include "tbl/contextual.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "tbl/rule_io.hpp"

namespace tbl {

namespace {

using enum ArgType;
using enum TriggerKind;

constexpr std::array<TriggerInfo, 21> kInventory{{
    {kPrevTag, "PREVTAG", kTag, kNone},
    {kNextTag, "NEXTTAG", kTag, kNone},
    {kPrev2Tag, "PREV2TAG", kTag, kNone},
    {kNext2Tag, "NEXT2TAG", kTag, kNone},
    {kPrevOneOrTwoTag, "PREV1OR2TAG", kTag, kNone},
    {kNextOneOrTwoTag, "NEXT1OR2TAG", kTag, kNone},
    {kPrevOneToThreeTag, "PREV1OR2OR3TAG", kTag, kNone},
    {kNextOneToThreeTag, "NEXT1OR2OR3TAG", kTag, kNone},
    {kSurroundTag, "SURROUNDTAG", kTag, kTag},
    {kPrevBigramTag, "PREVBIGRAMTAG", kTag, kTag},
    {kNextBigramTag, "NEXTBIGRAMTAG", kTag, kTag},
    {kPrevWord, "PREVWD", kWord, kNone},
    {kNextWord, "NEXTWD", kWord, kNone},
    {kPrev2Word, "PREV2WD", kWord, kNone},
    {kNext2Word, "NEXT2WD", kWord, kNone},
    {kPrevOneOrTwoWord, "PREV1OR2WD", kWord, kNone},
    {kNextOneOrTwoWord, "NEXT1OR2WD", kWord, kNone},
    {kCurWordPrevWord, "LBIGRAM", kWord, kWord},
    {kCurWordNextWord, "RBIGRAM", kWord, kWord},
    {kCurWordPrevTag, "WDPREVTAG", kWord, kTag},
    {kCurWordNextTag, "WDNEXTTAG", kWord, kTag},
}};

// Sentence with virtual STAART padding on both sides.
class Window {
 public:
  Window(const Sentence& s, std::size_t i)
      : s_(s), i_(static_cast<std::ptrdiff_t>(i)) {}

  std::string_view word(std::ptrdiff_t offset) const {
    std::ptrdiff_t j = i_ + offset;
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(s_.size())) return kSentinel;
    return s_[static_cast<std::size_t>(j)].word;
  }

  std::string_view tag(std::ptrdiff_t offset) const {
    std::ptrdiff_t j = i_ + offset;
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(s_.size())) return kSentinel;
    const auto& t = s_[static_cast<std::size_t>(j)].tag;
    if (!t) throw DataError("trigger consulted an untagged token");
    return *t;
  }

 private:
  const Sentence& s_;
  std::ptrdiff_t i_;
};

bool fires(const ContextualTrigger& t, const Window& w) {
  const std::string_view a = t.arg1;
  const std::string_view b = t.arg2;
  switch (t.kind) {
    case kPrevTag: return w.tag(-1) == a;
    case kNextTag: return w.tag(1) == a;
    case kPrev2Tag: return w.tag(-2) == a;
    case kNext2Tag: return w.tag(2) == a;
    case kPrevOneOrTwoTag: return w.tag(-1) == a || w.tag(-2) == a;
    case kNextOneOrTwoTag: return w.tag(1) == a || w.tag(2) == a;
    case kPrevOneToThreeTag:
      return w.tag(-1) == a || w.tag(-2) == a || w.tag(-3) == a;
    case kNextOneToThreeTag:
      return w.tag(1) == a || w.tag(2) == a || w.tag(3) == a;
    case kSurroundTag: return w.tag(-1) == a && w.tag(1) == b;
    case kPrevBigramTag: return w.tag(-1) == a && w.tag(-2) == b;
    case kNextBigramTag: return w.tag(1) == a && w.tag(2) == b;
    case kPrevWord: return w.word(-1) == a;
    case kNextWord: return w.word(1) == a;
    case kPrev2Word: return w.word(-2) == a;
    case kNext2Word: return w.word(2) == a;
    case kPrevOneOrTwoWord: return w.word(-1) == a || w.word(-2) == a;
    case kNextOneOrTwoWord: return w.word(1) == a || w.word(2) == a;
    case kCurWordPrevWord: return w.word(0) == a && w.word(-1) == b;
    case kCurWordNextWord: return w.word(0) == a && w.word(1) == b;
    case kCurWordPrevTag: return w.word(0) == a && w.tag(-1) == b;
    case kCurWordNextTag: return w.word(0) == a && w.tag(1) == b;
  }
  return false;
}

bool valid_arg(ArgType type, const std::string& arg) {
  switch (type) {
    case kNone: return arg.empty();
    case kTag: return is_valid_tag(arg);
    case kWord: return is_valid_word(arg);
  }
  return false;
}

struct Position {
  std::uint32_t sentence;
  std::uint32_t token;
};

class ContextualProblem {
 public:
  using rule_type = ContextualRule;
  using score_type = Score;
  using site_type = Position;

  ContextualProblem(const Corpus& initial, const Corpus& truth,
                    const ContextualLearnOptions& opts)
      : state_(initial), truth_(truth), opts_(opts) {
    require_same_shape(initial, truth);
    if (!initial.fully_tagged() || !truth.fully_tagged())
      throw DataError("contextual learning needs fully tagged corpora");
    for (std::size_t s = 0; s < initial.sentences.size(); ++s)
      for (std::size_t i = 0; i < initial.sentences[s].size(); ++i)
        if (initial.sentences[s][i].word != truth.sentences[s][i].word)
          throw DataError("word mismatch at sentence " + std::to_string(s + 1) +
                          ", token " + std::to_string(i + 1));
    reindex();
  }

  std::size_t error_count() const { return errors_.size(); }
  std::vector<Position> error_sites() const { return errors_; }

  std::vector<ContextualRule> candidates_at(const Position& p) const {
    return enumerate_context_candidates(state_.sentences[p.sentence], p.token,
                                        truth_tag(p), opts_.tag_triggers_only);
  }

  Score score(const ContextualRule& r) const {
    Score s;
    for (const auto& p : firing(r)) {
      const Tag& gold = truth_tag(p);
      if (gold == r.to) ++s.good;
      else if (gold == r.from) ++s.bad;
    }
    return s;
  }

  bool accepts(const Score& s) const { return s.net() >= opts_.config.min_net_score; }
  std::string rule_line(const ContextualRule& r) const { return render_rule(r); }

  Score apply(const ContextualRule& r) {
    Score s = score(r);
    for (const auto& p : firing(r)) state_.sentences[p.sentence][p.token].tag = r.to;
    reindex();
    return s;
  }

 private:
  const Tag& truth_tag(const Position& p) const {
    return *truth_.sentences[p.sentence][p.token].tag;
  }

  std::vector<Position> firing(const ContextualRule& r) const {
    std::vector<Position> out;
    auto it = by_tag_.find(r.from);
    if (it == by_tag_.end()) return out;
    for (const auto& p : it->second)
      if (fires(r.trigger, Window(state_.sentences[p.sentence], p.token)))
        out.push_back(p);
    return out;
  }

  void reindex() {
    by_tag_.clear();
    errors_.clear();
    for (std::uint32_t s = 0; s < state_.sentences.size(); ++s) {
      const auto& sent = state_.sentences[s];
      for (std::uint32_t i = 0; i < sent.size(); ++i) {
        by_tag_[*sent[i].tag].push_back({s, i});
        if (*sent[i].tag != truth_tag({s, i})) errors_.push_back({s, i});
      }
    }
  }

  Corpus state_;
  const Corpus& truth_;
  const ContextualLearnOptions& opts_;
  std::unordered_map<Tag, std::vector<Position>> by_tag_;
  std::vector<Position> errors_;
};

static_assert(LearningProblem<ContextualProblem>);

}  // namespace

std::span<const TriggerInfo> trigger_inventory() { return kInventory; }

const TriggerInfo& trigger_info(TriggerKind kind) {
  return kInventory[static_cast<std::size_t>(kind)];
}

std::optional<TriggerKind> trigger_from_mnemonic(std::string_view m) {
  for (const auto& info : kInventory)
    if (info.mnemonic == m) return info.kind;
  return std::nullopt;
}

ContextualTrigger make_trigger(TriggerKind kind, std::string arg1,
                               std::string arg2) {
  const auto& info = trigger_info(kind);
  if (!valid_arg(info.arg1, arg1) || !valid_arg(info.arg2, arg2))
    throw DataError("invalid arguments for " + std::string(info.mnemonic) +
                    ": '" + arg1 + "' '" + arg2 + "'");
  return ContextualTrigger{kind, std::move(arg1), std::move(arg2)};
}

ContextualRule make_contextual_rule(Tag from, Tag to, ContextualTrigger trigger) {
  if (!is_valid_tag(from) || !is_valid_tag(to))
    throw DataError("invalid tags in contextual rule: '" + from + "' '" + to + "'");
  if (from == to) throw DataError("contextual rule changes " + to + " into itself");
  trigger = make_trigger(trigger.kind, std::move(trigger.arg1), std::move(trigger.arg2));
  return ContextualRule{std::move(from), std::move(to), std::move(trigger)};
}

bool trigger_fires(const ContextualTrigger& t, const Sentence& s, std::size_t i) {
  if (i >= s.size())
    throw DataError("position " + std::to_string(i) + " outside a sentence of " +
                    std::to_string(s.size()) + " tokens");
  return fires(t, Window(s, i));
}

std::size_t apply_contextual_rule_in_place(const ContextualRule& r, Corpus& c) {
  std::vector<Position> hits;
  for (std::uint32_t s = 0; s < c.sentences.size(); ++s) {
    const auto& sent = c.sentences[s];
    for (std::uint32_t i = 0; i < sent.size(); ++i) {
      if (sent[i].tag != r.from) continue;
      if (fires(r.trigger, Window(sent, i))) hits.push_back({s, i});
    }
  }
  for (const auto& p : hits) c.sentences[p.sentence][p.token].tag = r.to;
  return hits.size();
}

Corpus apply_contextual_rule(const ContextualRule& r, const Corpus& c) {
  Corpus out = c;
  apply_contextual_rule_in_place(r, out);
  return out;
}

std::vector<ContextualTrigger> instantiate_triggers(const Sentence& s,
                                                    std::size_t i,
                                                    bool tag_triggers_only) {
  if (i >= s.size())
    throw DataError("position " + std::to_string(i) + " outside the sentence");
  Window w(s, i);
  std::vector<ContextualTrigger> out;
  auto one = [&](TriggerKind k, std::string_view a) {
    out.push_back({k, std::string(a), {}});
  };
  auto two = [&](TriggerKind k, std::string_view a, std::string_view b) {
    out.push_back({k, std::string(a), std::string(b)});
  };
  // Disjunctive kinds: one trigger per distinct value over their window.
  auto any_of = [&](TriggerKind k, std::initializer_list<std::string_view> values) {
    std::vector<std::string_view> seen;
    for (auto v : values) {
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
      seen.push_back(v);
      one(k, v);
    }
  };

  one(kPrevTag, w.tag(-1));
  one(kNextTag, w.tag(1));
  one(kPrev2Tag, w.tag(-2));
  one(kNext2Tag, w.tag(2));
  any_of(kPrevOneOrTwoTag, {w.tag(-1), w.tag(-2)});
  any_of(kNextOneOrTwoTag, {w.tag(1), w.tag(2)});
  any_of(kPrevOneToThreeTag, {w.tag(-1), w.tag(-2), w.tag(-3)});
  any_of(kNextOneToThreeTag, {w.tag(1), w.tag(2), w.tag(3)});
  two(kSurroundTag, w.tag(-1), w.tag(1));
  two(kPrevBigramTag, w.tag(-1), w.tag(-2));
  two(kNextBigramTag, w.tag(1), w.tag(2));
  if (tag_triggers_only) return out;

  one(kPrevWord, w.word(-1));
  one(kNextWord, w.word(1));
  one(kPrev2Word, w.word(-2));
  one(kNext2Word, w.word(2));
  any_of(kPrevOneOrTwoWord, {w.word(-1), w.word(-2)});
  any_of(kNextOneOrTwoWord, {w.word(1), w.word(2)});
  two(kCurWordPrevWord, w.word(0), w.word(-1));
  two(kCurWordNextWord, w.word(0), w.word(1));
  two(kCurWordPrevTag, w.word(0), w.tag(-1));
  two(kCurWordNextTag, w.word(0), w.tag(1));
  return out;
}

std::vector<ContextualRule> enumerate_context_candidates(const Sentence& s,
                                                         std::size_t i,
                                                         const Tag& truth_tag,
                                                         bool tag_triggers_only) {
  if (i >= s.size() || !s[i].tag)
    throw DataError("candidate site must be a tagged position in the sentence");
  const Tag& current = *s[i].tag;
  if (current == truth_tag) return {};
  std::vector<ContextualRule> out;
  for (auto& t : instantiate_triggers(s, i, tag_triggers_only))
    out.push_back(ContextualRule{current, truth_tag, std::move(t)});
  return out;
}

std::vector<LearnedRule<ContextualRule>> learn_contextual_rules(
    const Corpus& initial, const Corpus& truth, const ContextualLearnOptions& opts) {
  if (opts.config.min_net_score < 1)
    throw DataError("minimum net score must be at least 1");
  ContextualProblem problem(initial, truth, opts);
  return greedy_learn(problem, {opts.config.max_rules, opts.config.threads});
}

Corpus tag(const Corpus& c, const Lexicon& lex,
           std::span<const UnknownRule> unknown_rules,
           std::span<const ContextualRule> contextual_rules, const Wordlist& wl,
           const BigramTable& bg, const UnknownTagDefaults& d) {
  Corpus out = annotate_initial(c, lex, unknown_rules, wl, bg, d);
  for (const auto& r : contextual_rules) apply_contextual_rule_in_place(r, out);
  return out;
}

Corpus tag(const Corpus& c, const TaggerModel& model) {
  return tag(c, model.lexicon, model.unknown_rules, model.contextual_rules,
             model.wordlist, build_bigrams(c), model.defaults);
}

}  // namespace tbl
