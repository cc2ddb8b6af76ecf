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

#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "tbl/corpus_io.hpp"
#include "tbl/initial_annotator.hpp"

namespace tbl::fixtures {

Corpus tagged(std::string_view text) { return parse_tagged(text); }

std::string data_dir() { return TBL_TEST_DATA_DIR; }

namespace {

std::size_t pick(std::mt19937& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

Corpus random_gold(std::uint32_t seed, std::size_t max_tokens) {
  std::mt19937 rng(seed);
  const std::size_t n_tags = 3 + pick(rng, 4);     // 3..6
  const std::size_t n_words = 8 + pick(rng, 33);   // 8..40
  const std::size_t n_tokens = 40 + pick(rng, max_tokens - 39);

  std::vector<std::string> tags, words;
  for (std::size_t t = 0; t < n_tags; ++t) tags.push_back("T" + std::to_string(t));
  for (std::size_t w = 0; w < n_words; ++w) words.push_back("w" + std::to_string(w));

  // Each word may be emitted by one or two tags; ambiguity is what gives
  // the contextual learner something to fix.
  std::vector<std::vector<std::size_t>> emit(n_tags);
  for (std::size_t w = 0; w < n_words; ++w) {
    emit[w % n_tags].push_back(w);
    if (pick(rng, 3) == 0) emit[pick(rng, n_tags)].push_back(w);
  }
  std::vector<std::vector<double>> trans(n_tags, std::vector<double>(n_tags));
  for (auto& row : trans)
    for (auto& p : row) p = std::uniform_real_distribution<double>(0.05, 1.0)(rng);

  Corpus c;
  std::size_t produced = 0;
  while (produced < n_tokens) {
    std::size_t len = std::min<std::size_t>(2 + pick(rng, 10), n_tokens - produced);
    if (len == 0) break;
    Sentence s;
    std::size_t t = pick(rng, n_tags);
    for (std::size_t k = 0; k < len; ++k) {
      const auto& choices = emit[t];
      s.push_back({words[choices[pick(rng, choices.size())]], tags[t]});
      std::discrete_distribution<std::size_t> next(trans[t].begin(), trans[t].end());
      t = next(rng);
    }
    produced += s.size();
    c.sentences.push_back(std::move(s));
  }
  return c;
}

ContextCase random_context_case(std::uint32_t seed, std::size_t max_tokens) {
  Corpus gold = random_gold(seed, max_tokens);
  Lexicon lex = build_lexicon(gold);
  Corpus initial = annotate_initial(strip_tags(gold), lex, {}, Wordlist{},
                                    BigramTable{}, UnknownTagDefaults{});
  return {std::move(initial), std::move(gold)};
}

Corpus random_morphology(std::uint32_t seed) {
  std::mt19937 rng(seed);
  static constexpr std::array<const char*, 10> kOnsets = {"b", "d", "k", "m", "p",
                                                          "r", "s", "t", "v", "z"};
  static constexpr std::array<const char*, 5> kVowels = {"a", "e", "i", "o", "u"};
  struct Suffix {
    const char* text;
    const char* tag;
  };
  static constexpr std::array<Suffix, 5> kSuffixes = {
      Suffix{"", "NN"}, Suffix{"s", "NNS"}, Suffix{"ed", "VBD"},
      Suffix{"ing", "VBG"}, Suffix{"ly", "RB"}};
  const char* kTags[] = {"NN", "NNS", "VBD", "VBG", "RB", "NNP"};

  auto stem = [&] {
    std::string s;
    for (std::size_t k = 0, n = 1 + pick(rng, 2); k < n; ++k)
      s += std::string(kOnsets[pick(rng, kOnsets.size())]) + kVowels[pick(rng, kVowels.size())];
    s += kOnsets[pick(rng, kOnsets.size())];
    return s;
  };
  // Few enough stems that forms repeat; the suffix decides the tag with a
  // little noise, and some words are capitalized names.
  std::vector<std::string> stems;
  for (std::size_t k = 0; k < 8; ++k) stems.push_back(stem());
  const std::size_t n_sent = 8 + pick(rng, 8);
  Corpus c;
  for (std::size_t s = 0; s < n_sent; ++s) {
    Sentence sent;
    for (std::size_t k = 0, n = 2 + pick(rng, 5); k < n; ++k) {
      const std::string& base = stems[pick(rng, stems.size())];
      if (pick(rng, 8) == 0) {
        std::string name = base;
        name[0] = static_cast<char>(name[0] - 'a' + 'A');
        sent.push_back({name, "NNP"});
        continue;
      }
      const Suffix& suf = kSuffixes[pick(rng, kSuffixes.size())];
      std::string tag = pick(rng, 10) == 0 ? kTags[pick(rng, 6)] : suf.tag;
      sent.push_back({base + suf.text, tag});
    }
    c.sentences.push_back(std::move(sent));
  }
  return c;
}

oracle::UnknownWorld unknown_world(const UnknownTrainingSet& set,
                                   const UnknownTagDefaults& d) {
  oracle::UnknownWorld w;
  w.wordlist = {set.wordlist.forms().begin(), set.wordlist.forms().end()};
  for (const auto& [word, lefts] : set.bigrams.all_left())
    for (const auto& l : lefts) w.bigrams.insert({l, word});
  w.instances = set.instances;
  w.defaults = d;
  return w;
}

Corpus modal_corpus() {
  return tagged(
      "the/DT run/NN was/VBD long/JJ\n"
      "a/DT walk/NN is/VBZ nice/JJ\n"
      "the/DT fish/NN was/VBD big/JJ\n"
      "his/PRP$ run/NN ended/VBD\n"
      "the/DT walk/NN ended/VBD\n"
      "her/PRP$ fish/NN is/VBZ big/JJ\n"
      "we/PRP can/MD run/VB\n"
      "they/PRP will/MD walk/VB\n"
      "you/PRP may/MD fish/VB\n"
      "I/PRP can/MD walk/VB home/NN\n"
      "the/DT run/NN was/VBD nice/JJ\n"
      "a/DT fish/NN swam/VBD\n"
      "Bob/NNP will/MD run/VB\n"
      "she/PRP likes/VBZ fish/NN\n");
}

Corpus as_as_corpus() {
  return tagged(
      "as/RB tall/JJ as/IN him/PRP\n"
      "as/RB big/JJ as/IN you/PRP\n"
      "as/RB old/JJ as/IN me/PRP\n"
      "of/IN tall/JJ on/IN it/PRP\n"
      "in/IN big/JJ at/IN us/PRP\n"
      "by/IN old/JJ to/IN them/PRP\n"
      "he/PRP works/VBZ as/IN cook/NN\n"
      "she/PRP sings/VBZ as/IN guest/NN\n"
      "we/PRP came/VBD as/IN friends/NNS\n"
      "they/PRP served/VBD as/IN guards/NNS\n");
}

Corpus actress_corpus() {
  return tagged(
      // lexicon half
      "see/VB the/DT man/NN\n"
      "in/IN the/DT town/NN\n"
      "see/VB the/DT boy/NN\n"
      "in/IN the/DT field/NN\n"
      "see/VB the/DT girl/NN\n"
      "in/IN the/DT hall/NN\n"
      "see/VB the/DT sky/NN\n"
      // held-out half
      "see/VB the/DT dogs/NNS\n"
      "see/VB the/DT cats/NNS\n"
      "see/VB the/DT hats/NNS\n"
      "see/VB the/DT pens/NNS\n"
      "see/VB the/DT cups/NNS\n"
      "see/VB the/DT maps/NNS\n"
      "see/VB the/DT rugs/NNS\n"
      "see/VB the/DT jars/NNS\n"
      "see/VB the/DT bins/NNS\n"
      "see/VB the/DT actress/NN\n"
      "see/VB the/DT glass/NN\n"
      "see/VB the/DT moss/NN\n"
      "see/VB the/DT desk/NN\n"
      "see/VB the/DT nest/NN\n"
      "in/IN Paris/NNP\n"
      "in/IN Texas/NNP\n"
      "in/IN Hess/NNP\n");
}

}  // namespace tbl::fixtures
