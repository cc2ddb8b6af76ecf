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

#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tbl/rule_io.hpp"

namespace tbl::oracle {

namespace {

const std::string kEdge = "STAART";

enum class Field { kWord, kTag };

struct Probe {
  Field field;
  int offset;
  int arg;  // which rule argument the probed value must equal
};

struct KindShape {
  bool any;  // disjunction of probes instead of conjunction
  std::vector<Probe> probes;
};

KindShape shape_of(TriggerKind k) {
  using F = Field;
  switch (k) {
    case TriggerKind::kPrevTag: return {true, {{F::kTag, -1, 0}}};
    case TriggerKind::kNextTag: return {true, {{F::kTag, 1, 0}}};
    case TriggerKind::kPrev2Tag: return {true, {{F::kTag, -2, 0}}};
    case TriggerKind::kNext2Tag: return {true, {{F::kTag, 2, 0}}};
    case TriggerKind::kPrevOneOrTwoTag: return {true, {{F::kTag, -1, 0}, {F::kTag, -2, 0}}};
    case TriggerKind::kNextOneOrTwoTag: return {true, {{F::kTag, 1, 0}, {F::kTag, 2, 0}}};
    case TriggerKind::kPrevOneToThreeTag:
      return {true, {{F::kTag, -1, 0}, {F::kTag, -2, 0}, {F::kTag, -3, 0}}};
    case TriggerKind::kNextOneToThreeTag:
      return {true, {{F::kTag, 1, 0}, {F::kTag, 2, 0}, {F::kTag, 3, 0}}};
    case TriggerKind::kSurroundTag: return {false, {{F::kTag, -1, 0}, {F::kTag, 1, 1}}};
    case TriggerKind::kPrevBigramTag: return {false, {{F::kTag, -1, 0}, {F::kTag, -2, 1}}};
    case TriggerKind::kNextBigramTag: return {false, {{F::kTag, 1, 0}, {F::kTag, 2, 1}}};
    case TriggerKind::kPrevWord: return {true, {{F::kWord, -1, 0}}};
    case TriggerKind::kNextWord: return {true, {{F::kWord, 1, 0}}};
    case TriggerKind::kPrev2Word: return {true, {{F::kWord, -2, 0}}};
    case TriggerKind::kNext2Word: return {true, {{F::kWord, 2, 0}}};
    case TriggerKind::kPrevOneOrTwoWord: return {true, {{F::kWord, -1, 0}, {F::kWord, -2, 0}}};
    case TriggerKind::kNextOneOrTwoWord: return {true, {{F::kWord, 1, 0}, {F::kWord, 2, 0}}};
    case TriggerKind::kCurWordPrevWord: return {false, {{F::kWord, 0, 0}, {F::kWord, -1, 1}}};
    case TriggerKind::kCurWordNextWord: return {false, {{F::kWord, 0, 0}, {F::kWord, 1, 1}}};
    case TriggerKind::kCurWordPrevTag: return {false, {{F::kWord, 0, 0}, {F::kTag, -1, 1}}};
    case TriggerKind::kCurWordNextTag: return {false, {{F::kWord, 0, 0}, {F::kTag, 1, 1}}};
  }
  return {};
}

constexpr TriggerKind kAllKinds[] = {
    TriggerKind::kPrevTag,          TriggerKind::kNextTag,
    TriggerKind::kPrev2Tag,         TriggerKind::kNext2Tag,
    TriggerKind::kPrevOneOrTwoTag,  TriggerKind::kNextOneOrTwoTag,
    TriggerKind::kPrevOneToThreeTag, TriggerKind::kNextOneToThreeTag,
    TriggerKind::kSurroundTag,      TriggerKind::kPrevBigramTag,
    TriggerKind::kNextBigramTag,    TriggerKind::kPrevWord,
    TriggerKind::kNextWord,         TriggerKind::kPrev2Word,
    TriggerKind::kNext2Word,        TriggerKind::kPrevOneOrTwoWord,
    TriggerKind::kNextOneOrTwoWord, TriggerKind::kCurWordPrevWord,
    TriggerKind::kCurWordNextWord,  TriggerKind::kCurWordPrevTag,
    TriggerKind::kCurWordNextTag,
};

const std::string& probe_value(const Sentence& s, std::size_t i, const Probe& p) {
  long j = static_cast<long>(i) + p.offset;
  if (j < 0 || j >= static_cast<long>(s.size())) return kEdge;
  const Token& t = s[static_cast<std::size_t>(j)];
  return p.field == Field::kWord ? t.word : *t.tag;
}

std::vector<ContextualTrigger> all_triggers(const std::set<std::string>& tags,
                                            const std::set<std::string>& words,
                                            bool tag_only) {
  std::vector<ContextualTrigger> out;
  for (TriggerKind k : kAllKinds) {
    KindShape shape = shape_of(k);
    int args = 0;
    Field types[2] = {Field::kTag, Field::kTag};
    for (const auto& p : shape.probes) {
      args = std::max(args, p.arg + 1);
      types[p.arg] = p.field;
    }
    if (tag_only && (types[0] == Field::kWord || (args == 2 && types[1] == Field::kWord)))
      continue;
    const auto& first = types[0] == Field::kWord ? words : tags;
    const auto& second = types[1] == Field::kWord ? words : tags;
    for (const auto& a : first) {
      if (args == 1) {
        out.push_back({k, a, {}});
        continue;
      }
      for (const auto& b : second) out.push_back({k, a, b});
    }
  }
  return out;
}

std::size_t count_errors(const Corpus& state, const Corpus& truth) {
  std::size_t n = 0;
  for (std::size_t s = 0; s < state.sentences.size(); ++s)
    for (std::size_t i = 0; i < state.sentences[s].size(); ++i)
      n += *state.sentences[s][i].tag != *truth.sentences[s][i].tag;
  return n;
}

template <class Rule>
struct Best {
  std::optional<Rule> rule;
  std::int64_t good = 0, bad = 0;
  std::string line;

  void offer(const Rule& r, std::int64_t g, std::int64_t b) {
    std::int64_t net = g - b;
    if (rule) {
      std::int64_t best_net = good - bad;
      if (net < best_net) return;
      if (net == best_net && b > bad) return;
      if (net == best_net && b == bad) {
        std::string l = render_rule(r);
        if (l >= line) return;
        rule = r, good = g, bad = b, line = std::move(l);
        return;
      }
    }
    rule = r, good = g, bad = b, line = render_rule(r);
  }
};

struct ContextRound {
  Best<ContextualRule> best;
};

Best<ContextualRule> best_contextual(const Corpus& state, const Corpus& truth,
                                     bool tag_only) {
  std::set<std::string> tags, words, present;
  for (std::size_t s = 0; s < state.sentences.size(); ++s) {
    for (std::size_t i = 0; i < state.sentences[s].size(); ++i) {
      tags.insert(*state.sentences[s][i].tag);
      tags.insert(*truth.sentences[s][i].tag);
      present.insert(*state.sentences[s][i].tag);
      words.insert(state.sentences[s][i].word);
    }
  }
  std::set<std::string> tag_values = tags, word_values = words;
  tag_values.insert(kEdge);
  word_values.insert(kEdge);
  const auto triggers = all_triggers(tag_values, word_values, tag_only);

  Best<ContextualRule> best;
  for (const auto& from : present) {
    std::vector<std::pair<std::size_t, std::size_t>> sites;
    for (std::size_t s = 0; s < state.sentences.size(); ++s)
      for (std::size_t i = 0; i < state.sentences[s].size(); ++i)
        if (*state.sentences[s][i].tag == from) sites.emplace_back(s, i);
    for (const auto& trig : triggers) {
      std::map<std::string, std::int64_t> gold_hist;
      for (auto [s, i] : sites)
        if (context_fires(trig, state.sentences[s], i))
          ++gold_hist[*truth.sentences[s][i].tag];
      if (gold_hist.empty()) continue;
      std::int64_t bad = gold_hist.count(from) ? gold_hist[from] : 0;
      for (const auto& to : tags) {
        if (to == from) continue;
        std::int64_t good = gold_hist.count(to) ? gold_hist[to] : 0;
        best.offer(ContextualRule{from, to, trig}, good, bad);
      }
    }
  }
  return best;
}

}  // namespace

bool context_fires(const ContextualTrigger& t, const Sentence& s, std::size_t i) {
  KindShape shape = shape_of(t.kind);
  for (const auto& p : shape.probes) {
    const std::string& want = p.arg == 0 ? t.arg1 : t.arg2;
    bool hit = probe_value(s, i, p) == want;
    if (shape.any && hit) return true;
    if (!shape.any && !hit) return false;
  }
  return !shape.any;
}

std::int64_t best_contextual_net(const Corpus& state, const Corpus& truth,
                                 bool tag_triggers_only) {
  auto best = best_contextual(state, truth, tag_triggers_only);
  return best.rule ? best.good - best.bad : 0;
}

std::vector<Step<ContextualRule>> learn_contextual(const Corpus& initial,
                                                   const Corpus& truth,
                                                   std::int64_t min_net,
                                                   bool tag_triggers_only) {
  Corpus state = initial;
  std::vector<Step<ContextualRule>> steps;
  while (true) {
    std::size_t before = count_errors(state, truth);
    if (before == 0) break;
    auto best = best_contextual(state, truth, tag_triggers_only);
    if (!best.rule || best.good - best.bad < min_net) break;
    // Two-phase application on the snapshot.
    std::vector<std::pair<std::size_t, std::size_t>> hits;
    for (std::size_t s = 0; s < state.sentences.size(); ++s)
      for (std::size_t i = 0; i < state.sentences[s].size(); ++i)
        if (*state.sentences[s][i].tag == best.rule->from &&
            context_fires(best.rule->trigger, state.sentences[s], i))
          hits.emplace_back(s, i);
    for (auto [s, i] : hits) state.sentences[s][i].tag = best.rule->to;
    steps.push_back({*best.rule, best.good, best.bad, before, count_errors(state, truth)});
  }
  return steps;
}

bool unknown_fires(const UnknownRule& r, const std::string& w, const UnknownWorld& world) {
  const std::string& x = r.arg;
  switch (r.kind) {
    case UnknownTriggerKind::kHasSuffix:
      return w.size() > x.size() && w.compare(w.size() - x.size(), x.size(), x) == 0;
    case UnknownTriggerKind::kHasPrefix:
      return w.size() > x.size() && w.compare(0, x.size(), x) == 0;
    case UnknownTriggerKind::kDeleteSuffix:
      return w.size() > x.size() && w.compare(w.size() - x.size(), x.size(), x) == 0 &&
             world.wordlist.count(w.substr(0, w.size() - x.size()));
    case UnknownTriggerKind::kDeletePrefix:
      return w.size() > x.size() && w.compare(0, x.size(), x) == 0 &&
             world.wordlist.count(w.substr(x.size()));
    case UnknownTriggerKind::kAddSuffix: return world.wordlist.count(w + x) > 0;
    case UnknownTriggerKind::kAddPrefix: return world.wordlist.count(x + w) > 0;
    case UnknownTriggerKind::kGoodLeft: return world.bigrams.count({x, w}) > 0;
    case UnknownTriggerKind::kGoodRight: return world.bigrams.count({w, x}) > 0;
    case UnknownTriggerKind::kHasChar: return w.find(x) != std::string::npos;
  }
  return false;
}

std::vector<Step<UnknownRule>> learn_unknown(const UnknownWorld& world,
                                             std::int64_t min_net) {
  // Fixtures are ASCII, so byte affixes are character affixes here.
  std::set<std::string> tags;
  std::set<std::pair<UnknownTriggerKind, std::string>> triggers;
  std::vector<std::string> current;
  for (const auto& [w, gold] : world.instances) {
    tags.insert(gold);
    current.push_back(guess_unknown_initial(w, world.defaults));
    tags.insert(current.back());
    for (std::size_t k = 1; k <= 4 && k <= w.size(); ++k) {
      for (auto kind : {UnknownTriggerKind::kHasSuffix, UnknownTriggerKind::kDeleteSuffix})
        triggers.insert({kind, w.substr(w.size() - k)});
      for (auto kind : {UnknownTriggerKind::kHasPrefix, UnknownTriggerKind::kDeletePrefix})
        triggers.insert({kind, w.substr(0, k)});
    }
    for (char c : w) triggers.insert({UnknownTriggerKind::kHasChar, std::string(1, c)});
  }
  for (const auto& form : world.wordlist) {
    for (std::size_t k = 1; k <= 4 && k < form.size(); ++k) {
      triggers.insert({UnknownTriggerKind::kAddSuffix, form.substr(form.size() - k)});
      triggers.insert({UnknownTriggerKind::kAddPrefix, form.substr(0, k)});
    }
  }
  for (const auto& [l, r] : world.bigrams) {
    triggers.insert({UnknownTriggerKind::kGoodLeft, l});
    triggers.insert({UnknownTriggerKind::kGoodRight, r});
  }

  std::vector<std::optional<std::string>> froms{std::nullopt};
  for (const auto& t : tags) froms.emplace_back(t);

  std::vector<Step<UnknownRule>> steps;
  auto errors = [&] {
    std::size_t n = 0;
    for (std::size_t k = 0; k < current.size(); ++k)
      n += current[k] != world.instances[k].second;
    return n;
  };
  while (true) {
    std::size_t before = errors();
    if (before == 0) break;
    Best<UnknownRule> best;
    for (const auto& [kind, arg] : triggers) {
      UnknownRule probe{std::nullopt, "X", kind, arg};
      std::vector<bool> fires(world.instances.size());
      bool any = false;
      for (std::size_t k = 0; k < fires.size(); ++k)
        any |= fires[k] = unknown_fires(probe, world.instances[k].first, world);
      if (!any) continue;
      for (const auto& from : froms) {
        for (const auto& to : tags) {
          if (from && *from == to) continue;
          std::int64_t good = 0, bad = 0;
          for (std::size_t k = 0; k < fires.size(); ++k) {
            if (!fires[k] || current[k] == to) continue;
            if (from && current[k] != *from) continue;
            const auto& gold = world.instances[k].second;
            good += gold == to;
            bad += gold == current[k];
          }
          if (good == 0) continue;
          best.offer(UnknownRule{from, to, kind, arg}, good, bad);
        }
      }
    }
    if (!best.rule || best.good - best.bad < min_net) break;
    for (std::size_t k = 0; k < current.size(); ++k) {
      const auto& r = *best.rule;
      if (current[k] == r.to) continue;
      if (r.from && current[k] != *r.from) continue;
      if (unknown_fires(r, world.instances[k].first, world)) current[k] = r.to;
    }
    steps.push_back({*best.rule, best.good, best.bad, before, errors()});
  }
  return steps;
}

}  // namespace tbl::oracle
