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

#include "tbl/kbest.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "tbl/corpus_io.hpp"
#include "tbl/rule_io.hpp"

namespace tbl {

namespace {

bool holds(const KBestCondition& cond, const TagSetToken& t) {
  return cond.kind == KBestCondition::Kind::kWhenTag ? t.primary == cond.value
                                                     : t.word == cond.value;
}

bool has_tag(const TagSetToken& t, const Tag& tag) {
  return std::binary_search(t.tags.begin(), t.tags.end(), tag);
}

void insert_tag(TagSetToken& t, const Tag& tag) {
  auto it = std::lower_bound(t.tags.begin(), t.tags.end(), tag);
  if (it == t.tags.end() || *it != tag) t.tags.insert(it, tag);
}

struct Position {
  std::uint32_t sentence;
  std::uint32_t token;
};

class KBestProblem {
 public:
  using rule_type = KBestRule;
  using score_type = KBestScore;
  using site_type = Position;

  KBestProblem(const Corpus& tagged, const Corpus& truth, const KBestConfig& cfg)
      : primaries_(tagged), truth_(truth), cfg_(cfg), state_(to_tag_sets(tagged)) {
    require_same_shape(tagged, truth);
    if (!truth.fully_tagged()) throw DataError("k-best truth must be fully tagged");
    for (std::uint32_t s = 0; s < tagged.sentences.size(); ++s) {
      for (std::uint32_t i = 0; i < tagged.sentences[s].size(); ++i) {
        const auto& tok = tagged.sentences[s][i];
        if (tok.word != truth.sentences[s][i].word)
          throw DataError("word mismatch at sentence " + std::to_string(s + 1) +
                          ", token " + std::to_string(i + 1));
        by_tag_[*tok.tag].push_back({s, i});
        by_word_[tok.word].push_back({s, i});
      }
    }
    recount();
  }

  std::size_t error_count() const { return uncovered_.size(); }
  std::vector<Position> error_sites() const { return uncovered_; }

  std::vector<KBestRule> candidates_at(const Position& p) const {
    return enumerate_kbest_candidates(primaries_.sentences[p.sentence], p.token,
                                      truth_tag(p));
  }

  KBestScore score(const KBestRule& r) const {
    KBestScore s;
    for (const auto& p : targets(r)) {
      ++s.added;
      if (truth_tag(p) == r.add) ++s.covered;
    }
    return s;
  }

  bool accepts(const KBestScore& s) const {
    return s.covered >= cfg_.min_covered && s.covered > 0 &&
           s.ratio() >= cfg_.min_ratio;
  }

  std::string rule_line(const KBestRule& r) const { return render_rule(r); }

  KBestScore apply(const KBestRule& r) {
    KBestScore s = score(r);
    for (const auto& p : targets(r))
      insert_tag(state_.sentences[p.sentence][p.token], r.add);
    recount();
    return s;
  }

 private:
  const Tag& truth_tag(const Position& p) const {
    return *truth_.sentences[p.sentence][p.token].tag;
  }

  // Positions where r would insert a tag not already present.
  std::vector<Position> targets(const KBestRule& r) const {
    std::vector<Position> out;
    const auto& index =
        r.condition.kind == KBestCondition::Kind::kWhenTag ? by_tag_ : by_word_;
    auto it = index.find(r.condition.value);
    if (it == index.end()) return out;
    for (const auto& p : it->second) {
      const auto& tok = state_.sentences[p.sentence][p.token];
      if (has_tag(tok, r.add)) continue;
      if (trigger_fires(r.trigger, primaries_.sentences[p.sentence], p.token))
        out.push_back(p);
    }
    return out;
  }

  void recount() {
    uncovered_.clear();
    for (std::uint32_t s = 0; s < state_.sentences.size(); ++s)
      for (std::uint32_t i = 0; i < state_.sentences[s].size(); ++i)
        if (!has_tag(state_.sentences[s][i], truth_tag({s, i})))
          uncovered_.push_back({s, i});
  }

  const Corpus& primaries_;
  const Corpus& truth_;
  const KBestConfig& cfg_;
  TagSetCorpus state_;
  std::unordered_map<std::string, std::vector<Position>> by_tag_;
  std::unordered_map<std::string, std::vector<Position>> by_word_;
  std::vector<Position> uncovered_;
};

static_assert(LearningProblem<KBestProblem>);

}  // namespace

KBestRule make_kbest_rule(Tag add, KBestCondition condition,
                          ContextualTrigger trigger) {
  if (!is_valid_tag(add)) throw DataError("invalid added tag '" + add + "'");
  bool when_tag = condition.kind == KBestCondition::Kind::kWhenTag;
  if (when_tag ? !is_valid_tag(condition.value) : !is_valid_word(condition.value))
    throw DataError("invalid k-best condition argument '" + condition.value + "'");
  if (when_tag && condition.value == add)
    throw DataError("k-best rule adds " + add + " to tokens already tagged " + add);
  trigger = make_trigger(trigger.kind, std::move(trigger.arg1), std::move(trigger.arg2));
  return KBestRule{std::move(add), std::move(condition), std::move(trigger)};
}

std::size_t TagSetCorpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

TagSetCorpus to_tag_sets(const Corpus& tagged) {
  TagSetCorpus out;
  out.sentences.reserve(tagged.sentences.size());
  for (const auto& s : tagged.sentences) {
    TagSetSentence ts;
    ts.reserve(s.size());
    for (const auto& t : s) {
      if (!t.tag) throw DataError("untagged token '" + t.word + "'");
      ts.push_back({t.word, *t.tag, {*t.tag}});
    }
    out.sentences.push_back(std::move(ts));
  }
  return out;
}

Corpus primary_corpus(const TagSetCorpus& c) {
  Corpus out;
  out.sentences.reserve(c.sentences.size());
  for (const auto& s : c.sentences) {
    Sentence ps;
    ps.reserve(s.size());
    for (const auto& t : s) ps.push_back({t.word, t.primary});
    out.sentences.push_back(std::move(ps));
  }
  return out;
}

std::size_t apply_kbest_rule_in_place(const KBestRule& r, TagSetCorpus& c) {
  // Triggers read primaries, which no k-best rule changes, so a single pass
  // is already simultaneous.
  const Corpus primaries = primary_corpus(c);
  std::size_t added = 0;
  for (std::size_t s = 0; s < c.sentences.size(); ++s) {
    for (std::size_t i = 0; i < c.sentences[s].size(); ++i) {
      auto& tok = c.sentences[s][i];
      if (!holds(r.condition, tok) || has_tag(tok, r.add)) continue;
      if (!trigger_fires(r.trigger, primaries.sentences[s], i)) continue;
      insert_tag(tok, r.add);
      ++added;
    }
  }
  return added;
}

TagSetCorpus apply_kbest_rule(const KBestRule& r, const TagSetCorpus& c) {
  TagSetCorpus out = c;
  apply_kbest_rule_in_place(r, out);
  return out;
}

KBestMetrics kbest_metrics(const TagSetCorpus& c, const Corpus& truth) {
  if (c.sentences.size() != truth.sentences.size())
    throw DataError("k-best output has " + std::to_string(c.sentences.size()) +
                    " sentences, gold has " + std::to_string(truth.sentences.size()));
  KBestMetrics m;
  for (std::size_t s = 0; s < c.sentences.size(); ++s) {
    const auto& cs = c.sentences[s];
    const auto& gs = truth.sentences[s];
    if (cs.size() != gs.size())
      throw DataError("sentence " + std::to_string(s + 1) + " has " +
                      std::to_string(cs.size()) + " tokens, gold has " +
                      std::to_string(gs.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i].word != gs[i].word)
        throw DataError("word mismatch at sentence " + std::to_string(s + 1) +
                        ", token " + std::to_string(i + 1) + ": '" + cs[i].word +
                        "' vs '" + gs[i].word + "'");
      if (!gs[i].tag) throw DataError("gold token '" + gs[i].word + "' is untagged");
      ++m.tokens;
      m.tag_total += cs[i].tags.size();
      if (has_tag(cs[i], *gs[i].tag)) ++m.covered;
    }
  }
  return m;
}

bool outranks(const KBestScore& a, const KBestScore& b) {
  if (a.ratio() != b.ratio()) return a.ratio() > b.ratio();
  return a.covered > b.covered;
}

std::vector<KBestRule> enumerate_kbest_candidates(const Sentence& primaries,
                                                  std::size_t i,
                                                  const Tag& truth_tag) {
  if (i >= primaries.size() || !primaries[i].tag)
    throw DataError("candidate site must be a tagged position in the sentence");
  const Tag& primary = *primaries[i].tag;
  if (primary == truth_tag) return {};
  std::vector<KBestRule> out;
  for (const auto& t : instantiate_triggers(primaries, i)) {
    out.push_back({truth_tag, {KBestCondition::Kind::kWhenTag, primary}, t});
    out.push_back({truth_tag, {KBestCondition::Kind::kWhenWord, primaries[i].word}, t});
  }
  return out;
}

std::vector<LearnedRule<KBestRule, KBestScore>> learn_kbest_rules(
    const Corpus& tagged, const Corpus& truth, const KBestConfig& cfg) {
  if (cfg.min_ratio.num <= 0 || cfg.min_ratio.den <= 0)
    throw DataError("minimum ratio must be positive");
  KBestProblem problem(tagged, truth, cfg);
  return greedy_learn(problem, {cfg.max_rules, cfg.threads});
}

std::vector<Tag> most_frequent_unknown_tags(const Lexicon& lex, std::size_t k) {
  std::map<Tag, std::size_t> counts;
  for (const auto& [word, tags] : lex.entries()) {
    if (tags.size() != 1 || tags.begin()->second != 1) continue;
    counts[tags.begin()->first] += 1;
  }
  std::vector<std::pair<std::size_t, Tag>> ranked;
  for (auto& [tag, n] : counts) ranked.emplace_back(n, tag);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Tag> out;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i)
    out.push_back(ranked[i].second);
  return out;
}

TagSetCorpus kbest_baseline(const Corpus& text, const Lexicon& lex,
                            const std::vector<Tag>& unknown_tags) {
  if (unknown_tags.empty())
    throw DataError("k-best baseline needs at least one unknown-word tag");
  std::vector<Tag> unknown_sorted = unknown_tags;
  std::sort(unknown_sorted.begin(), unknown_sorted.end());
  unknown_sorted.erase(std::unique(unknown_sorted.begin(), unknown_sorted.end()),
                       unknown_sorted.end());
  TagSetCorpus out;
  for (const auto& s : text.sentences) {
    TagSetSentence ts;
    for (const auto& t : s) {
      if (const TagCounts* counts = lex.find(t.word)) {
        std::vector<Tag> tags;
        for (const auto& [tag, n] : *counts) tags.push_back(tag);
        ts.push_back({t.word, *lex.most_likely_tag(t.word), std::move(tags)});
      } else {
        ts.push_back({t.word, unknown_tags.front(), unknown_sorted});
      }
    }
    out.sentences.push_back(std::move(ts));
  }
  return out;
}

std::string render_kbest(const TagSetCorpus& c) {
  std::string out;
  for (const auto& s : c.sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += s[i].word;
      out += '/';
      out += s[i].primary;
      for (const auto& tag : s[i].tags) {
        if (tag == s[i].primary) continue;
        out += '|';
        out += tag;
      }
    }
    out += '\n';
  }
  return out;
}

TagSetCorpus parse_kbest(std::string_view text) {
  // Reuse the single-tag reader for layout, slashes and positions, then
  // split each tag field on '|'.
  Corpus raw = parse_tagged(text);
  TagSetCorpus out;
  std::size_t line_hint = 0;
  for (const auto& s : raw.sentences) {
    ++line_hint;
    TagSetSentence ts;
    for (const auto& t : s) {
      std::vector<Tag> tags;
      std::string_view field = *t.tag;
      std::size_t start = 0;
      while (true) {
        std::size_t bar = field.find('|', start);
        std::string_view part = field.substr(start, bar == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : bar - start);
        if (part.empty())
          throw ParseError("empty tag in k-best token '" + t.word + "/" + *t.tag +
                           "' (sentence " + std::to_string(line_hint) + ")");
        tags.emplace_back(part);
        if (bar == std::string_view::npos) break;
        start = bar + 1;
      }
      Tag primary = tags.front();
      std::sort(tags.begin(), tags.end());
      if (std::adjacent_find(tags.begin(), tags.end()) != tags.end())
        throw ParseError("repeated tag in k-best token '" + t.word + "/" + *t.tag +
                         "' (sentence " + std::to_string(line_hint) + ")");
      ts.push_back({t.word, std::move(primary), std::move(tags)});
    }
    out.sentences.push_back(std::move(ts));
  }
  return out;
}

}  // namespace tbl
