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

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "tbl/corpus_io.hpp"
#include "tbl/rule_io.hpp"
#include "tbl/unknown.hpp"

using namespace tbl;

namespace {

bool contains(const std::vector<UnknownRule>& rules, std::string_view line) {
  UnknownRule r = parse_unknown_rule(line);
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}

}  // namespace

TEST_CASE("unknown trigger_fires") {
  Wordlist wl({"friend", "quickly"});
  BigramTable bg = build_bigrams(parse_raw("$ 5\nwould go"));
  auto fires = [&](std::string_view line, std::string_view w) {
    return trigger_fires(parse_unknown_rule(line), w, wl, bg);
  };
  CHECK(fires("* VBG HASSUF ing", "running"));
  CHECK(fires("* JJ HASCHAR -", "well-known"));
  CHECK_FALSE(fires("* NNS HASSUF s", "s"));
  CHECK(fires("* NNS HASSUF s", "cats"));
  CHECK(fires("* VB HASPREF un", "undo"));
  CHECK_FALSE(fires("* VB HASPREF un", "un"));
  CHECK(fires("* RB DELSUF ly", "friendly"));
  CHECK_FALSE(fires("* RB DELSUF ly", "ly"));
  CHECK(fires("* JJ ADDSUF ly", "quick"));
  CHECK(fires("* NN DELPREF un", "unfriend"));
  CHECK(fires("* JJ ADDPREF fr", "iend"));
  CHECK(fires("* CD GOODLEFT $", "5"));
  CHECK(fires("* VB GOODLEFT would", "go"));
  CHECK(fires("* MD GOODRIGHT go", "would"));
  CHECK_FALSE(fires("* MD GOODRIGHT go", "5"));
  CHECK(fires("* NN HASCHAR é", "café"));
}

TEST_CASE("make_unknown_rule validates") {
  CHECK_THROWS_AS(make_unknown_rule("NN", "NN", UnknownTriggerKind::kHasSuffix, "s"), DataError);
  CHECK_THROWS_AS(make_unknown_rule({}, "NN", UnknownTriggerKind::kHasSuffix, ""), DataError);
  CHECK_THROWS_AS(make_unknown_rule({}, "NN", UnknownTriggerKind::kHasSuffix, "abcde"),
                  DataError);
  CHECK_THROWS_AS(make_unknown_rule({}, "NN", UnknownTriggerKind::kHasChar, "ab"), DataError);
  CHECK_NOTHROW(make_unknown_rule({}, "NN", UnknownTriggerKind::kHasSuffix, "éééé"));
  CHECK_NOTHROW(make_unknown_rule({}, "NN", UnknownTriggerKind::kGoodLeft, "longwordsareok"));
}

TEST_CASE("apply_unknown_rules") {
  std::vector<UnknownRule> rules = {parse_unknown_rule("NN NNS HASSUF s"),
                                    parse_unknown_rule("NNS NN HASSUF ss")};
  Wordlist wl;
  BigramTable bg;
  UnknownTagDefaults d;
  CHECK(apply_unknown_rules(rules, "actress", wl, bg, d) == "NN");
  CHECK(apply_unknown_rules(rules, "dogs", wl, bg, d) == "NNS");
  CHECK(apply_unknown_rules(rules, "Paris", wl, bg, d) == "NNP");
  CHECK(apply_unknown_rules({}, "dog", wl, bg, d) == "NN");
}

TEST_CASE("enumerate_unknown_candidates") {
  Wordlist wl({"walk", "walker"});
  BigramTable bg = build_bigrams(parse_raw("they walked home"));
  auto c = enumerate_unknown_candidates("walked", "NN", "VBD", wl, bg);
  CHECK(contains(c, "NN VBD HASSUF ed"));
  CHECK(contains(c, "* VBD HASSUF ed"));
  CHECK(contains(c, "* VBD DELSUF ed"));
  CHECK(contains(c, "NN VBD HASPREF walk"));
  CHECK(contains(c, "* VBD HASCHAR w"));
  CHECK(contains(c, "NN VBD GOODLEFT they"));
  CHECK(contains(c, "NN VBD GOODRIGHT home"));
  CHECK_FALSE(contains(c, "* VBD DELSUF d"));
  for (const auto& r : c) {
    CHECK(r.to == "VBD");
    CHECK((!r.from || *r.from == "NN"));
    if (r.kind == UnknownTriggerKind::kHasSuffix) CHECK(std::string_view("walked").ends_with(r.arg));
    if (r.kind == UnknownTriggerKind::kHasPrefix) CHECK(std::string_view("walked").starts_with(r.arg));
  }

  auto walk = enumerate_unknown_candidates("walk", "NN", "VB", wl, bg);
  CHECK(contains(walk, "* VB ADDSUF er"));

  auto a = enumerate_unknown_candidates("a", "NN", "DT", Wordlist({"a", "ab"}), BigramTable{});
  for (const auto& r : a) {
    CHECK(r.kind != UnknownTriggerKind::kDeleteSuffix);
    CHECK(r.kind != UnknownTriggerKind::kDeletePrefix);
    if (r.kind == UnknownTriggerKind::kHasSuffix || r.kind == UnknownTriggerKind::kHasPrefix)
      CHECK(r.arg == "a");
  }
}

TEST_CASE("unknown learning needs held-out unknowns") {
  Corpus c = fixtures::tagged("the/DT dog/NN\nthe/DT dog/NN\n");
  CHECK_THROWS_AS(learn_unknown_rules(c, UnknownLearnOptions{}), DataError);
  UnknownLearnOptions tiny;
  tiny.lexicon_fraction = 0.1;
  CHECK_THROWS_AS(learn_unknown_rules(c, tiny), DataError);
}

TEST_CASE("actress fixture learns the suffix rule and its correction") {
  UnknownLearnOptions opts;
  opts.lexicon_fraction = 0.3;
  auto learned = learn_unknown_rules(fixtures::actress_corpus(), opts);
  REQUIRE(learned.size() >= 2);
  CHECK(render_rule(learned[0].rule) == "NN NNS HASSUF s");
  CHECK(render_rule(learned[1].rule) == "NNS NN HASSUF ss");
}

TEST_CASE("learned unknown rules match the brute-force oracle") {
  for (std::uint32_t seed = 1; seed <= 12; ++seed) {
    Corpus c = fixtures::random_morphology(seed);
    UnknownLearnOptions opts;
    opts.config.min_net_score = 1;
    UnknownTrainingSet set;
    try {
      set = prepare_unknown_training(c, opts);
    } catch (const DataError&) {
      continue;
    }
    auto learned = learn_unknown_rules(set, opts);
    auto expected = oracle::learn_unknown(fixtures::unknown_world(set, opts.defaults), 1);
    REQUIRE(learned.size() == expected.size());
    for (std::size_t k = 0; k < learned.size(); ++k) {
      CHECK(render_rule(learned[k].rule) == render_rule(expected[k].rule));
      CHECK(learned[k].score.good == expected[k].good);
      CHECK(learned[k].score.bad == expected[k].bad);
    }
  }
}

TEST_CASE("learned affix triggers occur in some instance word") {
  for (std::uint32_t seed = 1; seed <= 6; ++seed) {
    Corpus c = fixtures::random_morphology(seed);
    UnknownLearnOptions opts;
    opts.config.min_net_score = 1;
    UnknownTrainingSet set;
    try {
      set = prepare_unknown_training(c, opts);
    } catch (const DataError&) {
      continue;
    }
    for (const auto& l : learn_unknown_rules(set, opts)) {
      const auto& r = l.rule;
      if (r.kind != UnknownTriggerKind::kHasSuffix && r.kind != UnknownTriggerKind::kHasPrefix)
        continue;
      bool seen = std::any_of(set.instances.begin(), set.instances.end(), [&](const auto& inst) {
        std::string_view w = inst.first;
        return r.kind == UnknownTriggerKind::kHasSuffix ? w.ends_with(r.arg)
                                                        : w.starts_with(r.arg);
      });
      CHECK(seen);
    }
  }
}
