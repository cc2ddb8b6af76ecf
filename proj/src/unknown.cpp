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

#include "tbl/unknown.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "tbl/rule_io.hpp"
#include "tbl/utf8.hpp"

namespace tbl {

namespace {

constexpr std::array<std::pair<UnknownTriggerKind, std::string_view>, 9>
    kMnemonics{{
        {UnknownTriggerKind::kDeletePrefix, "DELPREF"},
        {UnknownTriggerKind::kHasPrefix, "HASPREF"},
        {UnknownTriggerKind::kDeleteSuffix, "DELSUF"},
        {UnknownTriggerKind::kHasSuffix, "HASSUF"},
        {UnknownTriggerKind::kAddSuffix, "ADDSUF"},
        {UnknownTriggerKind::kAddPrefix, "ADDPREF"},
        {UnknownTriggerKind::kGoodLeft, "GOODLEFT"},
        {UnknownTriggerKind::kGoodRight, "GOODRIGHT"},
        {UnknownTriggerKind::kHasChar, "HASCHAR"},
    }};

bool is_affix_kind(UnknownTriggerKind k) {
  return k != UnknownTriggerKind::kGoodLeft &&
         k != UnknownTriggerKind::kGoodRight &&
         k != UnknownTriggerKind::kHasChar;
}

bool has_proper_suffix(std::string_view w, std::string_view x) {
  return w.size() > x.size() && w.ends_with(x);
}

bool has_proper_prefix(std::string_view w, std::string_view x) {
  return w.size() > x.size() && w.starts_with(x);
}

}  // namespace

std::string_view mnemonic(UnknownTriggerKind kind) {
  for (const auto& [k, m] : kMnemonics)
    if (k == kind) return m;
  return "?";
}

std::optional<UnknownTriggerKind> unknown_trigger_from_mnemonic(std::string_view m) {
  for (const auto& [k, name] : kMnemonics)
    if (name == m) return k;
  return std::nullopt;
}

UnknownRule make_unknown_rule(std::optional<Tag> from, Tag to,
                              UnknownTriggerKind kind, std::string arg) {
  if (from && !is_valid_tag(*from))
    throw DataError("invalid from-tag '" + *from + "'");
  if (!is_valid_tag(to)) throw DataError("invalid to-tag '" + to + "'");
  if (from && *from == to)
    throw DataError("unknown-word rule changes " + to + " into itself");
  if (!is_valid_word(arg))
    throw DataError("invalid argument '" + arg + "' for " +
                    std::string(mnemonic(kind)));
  std::size_t len = utf8::length(arg);
  if (is_affix_kind(kind) && len > kMaxAffixLength)
    throw DataError("affix '" + arg + "' longer than " +
                    std::to_string(kMaxAffixLength) + " characters");
  if (kind == UnknownTriggerKind::kHasChar && len != 1)
    throw DataError("HASCHAR takes a single character, got '" + arg + "'");
  return UnknownRule{std::move(from), std::move(to), kind, std::move(arg)};
}

bool trigger_fires(const UnknownRule& r, std::string_view w,
                   const Wordlist& wl, const BigramTable& bg) {
  switch (r.kind) {
    case UnknownTriggerKind::kHasSuffix:
      return has_proper_suffix(w, r.arg);
    case UnknownTriggerKind::kHasPrefix:
      return has_proper_prefix(w, r.arg);
    case UnknownTriggerKind::kDeleteSuffix:
      return wl.affix_query(AffixOp::kDeleteSuffix, w, r.arg);
    case UnknownTriggerKind::kDeletePrefix:
      return wl.affix_query(AffixOp::kDeletePrefix, w, r.arg);
    case UnknownTriggerKind::kAddSuffix:
      return wl.affix_query(AffixOp::kAddSuffix, w, r.arg);
    case UnknownTriggerKind::kAddPrefix:
      return wl.affix_query(AffixOp::kAddPrefix, w, r.arg);
    case UnknownTriggerKind::kGoodLeft:
      return bg.has_left(w, r.arg);
    case UnknownTriggerKind::kGoodRight:
      return bg.has_right(w, r.arg);
    case UnknownTriggerKind::kHasChar:
      return w.find(r.arg) != std::string_view::npos;
  }
  return false;
}

Tag apply_unknown_rules(std::span<const UnknownRule> rules, std::string_view w,
                        const Wordlist& wl, const BigramTable& bg,
                        const UnknownTagDefaults& d) {
  Tag current = guess_unknown_initial(w, d);
  for (const auto& r : rules) {
    if (r.from && *r.from != current) continue;
    if (trigger_fires(r, w, wl, bg)) current = r.to;
  }
  return current;
}

std::vector<UnknownRule> enumerate_unknown_candidates(std::string_view w,
                                                      const Tag& current,
                                                      const Tag& truth,
                                                      const Wordlist& wl,
                                                      const BigramTable& bg) {
  std::vector<std::pair<UnknownTriggerKind, std::string>> triggers;
  std::size_t n = utf8::length(w);
  for (std::size_t k = 1; k <= std::min(n, kMaxAffixLength); ++k) {
    std::string head(utf8::first(w, k));
    std::string tail(utf8::last(w, k));
    if (wl.affix_query(AffixOp::kDeletePrefix, w, head))
      triggers.emplace_back(UnknownTriggerKind::kDeletePrefix, head);
    if (wl.affix_query(AffixOp::kDeleteSuffix, w, tail))
      triggers.emplace_back(UnknownTriggerKind::kDeleteSuffix, tail);
    triggers.emplace_back(UnknownTriggerKind::kHasPrefix, std::move(head));
    triggers.emplace_back(UnknownTriggerKind::kHasSuffix, std::move(tail));
  }
  for (auto& x : wl.candidate_affixes(AffixOp::kAddSuffix, w))
    triggers.emplace_back(UnknownTriggerKind::kAddSuffix, std::move(x));
  for (auto& x : wl.candidate_affixes(AffixOp::kAddPrefix, w))
    triggers.emplace_back(UnknownTriggerKind::kAddPrefix, std::move(x));
  for (auto c : utf8::chars(w))
    triggers.emplace_back(UnknownTriggerKind::kHasChar, std::string(c));
  for (const auto& left : bg.left_neighbors(w))
    triggers.emplace_back(UnknownTriggerKind::kGoodLeft, left);
  for (const auto& right : bg.right_neighbors(w))
    triggers.emplace_back(UnknownTriggerKind::kGoodRight, right);

  std::sort(triggers.begin(), triggers.end());
  triggers.erase(std::unique(triggers.begin(), triggers.end()), triggers.end());

  std::vector<UnknownRule> out;
  out.reserve(triggers.size() * 2);
  for (const auto& [kind, arg] : triggers) {
    out.push_back(UnknownRule{std::nullopt, truth, kind, arg});
    if (current != truth) out.push_back(UnknownRule{current, truth, kind, arg});
  }
  return out;
}

namespace {

// Unknown-word training state, one entry per word type. All occurrences of
// a type share the running tag because every feature is type-level, but
// their gold tags may differ, so errors are counted per occurrence.
class UnknownProblem {
 public:
  using rule_type = UnknownRule;
  using score_type = Score;
  struct site_type {
    std::size_t type;
    Tag truth;
  };

  UnknownProblem(const UnknownTrainingSet& data, const UnknownLearnOptions& opts)
      : wl_(data.wordlist), bg_(data.bigrams), min_net_(opts.config.min_net_score) {
    std::map<Word, std::size_t, std::less<>> index;
    for (const auto& [word, gold] : data.instances) {
      auto [it, inserted] = index.emplace(word, types_.size());
      if (inserted)
        types_.push_back({word, guess_unknown_initial(word, opts.defaults), {}});
      types_[it->second].gold[gold] += 1;
    }
  }

  std::size_t error_count() const {
    std::size_t errors = 0;
    for (const auto& t : types_)
      for (const auto& [tag, n] : t.gold)
        if (tag != t.current) errors += n;
    return errors;
  }

  std::vector<site_type> error_sites() const {
    std::vector<site_type> sites;
    for (std::size_t i = 0; i < types_.size(); ++i)
      for (const auto& [tag, n] : types_[i].gold)
        if (tag != types_[i].current) sites.push_back({i, tag});
    return sites;
  }

  std::vector<UnknownRule> candidates_at(const site_type& site) const {
    const auto& t = types_[site.type];
    return enumerate_unknown_candidates(t.word, t.current, site.truth, wl_, bg_);
  }

  Score score(const UnknownRule& r) const {
    Score s;
    for (const auto& t : types_) {
      if (!changes(r, t)) continue;
      s.good += count(t, r.to);
      s.bad += count(t, t.current);
    }
    return s;
  }

  bool accepts(const Score& s) const { return s.net() >= min_net_; }

  std::string rule_line(const UnknownRule& r) const { return render_rule(r); }

  Score apply(const UnknownRule& r) {
    Score s = score(r);
    for (auto& t : types_)
      if (changes(r, t)) t.current = r.to;
    return s;
  }

 private:
  struct TypeState {
    Word word;
    Tag current;
    std::map<Tag, std::size_t, std::less<>> gold;
  };

  bool changes(const UnknownRule& r, const TypeState& t) const {
    if (t.current == r.to) return false;
    if (r.from && *r.from != t.current) return false;
    return trigger_fires(r, t.word, wl_, bg_);
  }

  static std::int64_t count(const TypeState& t, const Tag& tag) {
    auto it = t.gold.find(tag);
    return it == t.gold.end() ? 0 : static_cast<std::int64_t>(it->second);
  }

  const Wordlist& wl_;
  const BigramTable& bg_;
  std::int64_t min_net_;
  std::vector<TypeState> types_;
};

static_assert(LearningProblem<UnknownProblem>);

}  // namespace

UnknownTrainingSet prepare_unknown_training(const Corpus& train,
                                            const UnknownLearnOptions& opts) {
  if (!(opts.lexicon_fraction > 0.0 && opts.lexicon_fraction < 1.0))
    throw DataError("lexicon fraction must lie strictly between 0 and 1");
  if (!train.fully_tagged())
    throw DataError("unknown-word training needs a fully tagged corpus");
  const std::size_t n = train.sentences.size();
  const auto split = static_cast<std::size_t>(opts.lexicon_fraction *
                                              static_cast<double>(n));
  if (split == 0 || split >= n)
    throw DataError("split leaves an empty part (" + std::to_string(n) +
                    " sentences, lexicon fraction " +
                    std::to_string(opts.lexicon_fraction) + ")");

  UnknownTrainingSet data;
  Corpus head;
  head.sentences.assign(train.sentences.begin(),
                        train.sentences.begin() + static_cast<std::ptrdiff_t>(split));
  data.lexicon = build_lexicon(head);
  data.wordlist = build_wordlist(data.lexicon, opts.extra_words);
  data.bigrams = build_bigrams(train);
  for (std::size_t i = split; i < n; ++i)
    for (const auto& t : train.sentences[i])
      if (!data.lexicon.contains(t.word)) data.instances.emplace_back(t.word, *t.tag);
  if (data.instances.empty())
    throw DataError("no unknown words in the held-out " +
                    std::to_string(n - split) +
                    " sentences; lower the lexicon fraction or add data");
  return data;
}

std::vector<LearnedRule<UnknownRule>> learn_unknown_rules(
    const UnknownTrainingSet& data, const UnknownLearnOptions& opts) {
  if (opts.config.min_net_score < 1)
    throw DataError("minimum net score must be at least 1");
  UnknownProblem problem(data, opts);
  return greedy_learn(problem, {opts.config.max_rules, opts.config.threads});
}

std::vector<LearnedRule<UnknownRule>> learn_unknown_rules(
    const Corpus& train, const UnknownLearnOptions& opts) {
  return learn_unknown_rules(prepare_unknown_training(train, opts), opts);
}

}  // namespace tbl
