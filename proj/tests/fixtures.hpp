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

#ifndef TBL_TESTS_FIXTURES_HPP_
#define TBL_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <string>

#include "oracle.hpp"
#include "tbl/contextual.hpp"
#include "tbl/lexicon.hpp"
#include "tbl/types.hpp"
#include "tbl/unknown.hpp"

namespace tbl::fixtures {

// Parses a tagged literal, one sentence per line.
Corpus tagged(std::string_view text);

// Gold corpus drawn from a tag Markov chain with overlapping per-tag
// vocabularies: at most `max_tokens` tokens, 6 tags, 40 word types.
Corpus random_gold(std::uint32_t seed, std::size_t max_tokens = 200);

struct ContextCase {
  Corpus initial;  // most-likely-tag annotation under the gold lexicon
  Corpus truth;
};
ContextCase random_context_case(std::uint32_t seed, std::size_t max_tokens = 200);

// Gold corpus whose word forms are stem+suffix with tag determined mostly
// by the suffix, so held-out unknown words carry learnable morphology.
Corpus random_morphology(std::uint32_t seed);

// The unknown-word learning problem a training run would see, rebuilt in
// the oracle's plain-set representation.
oracle::UnknownWorld unknown_world(const UnknownTrainingSet& set,
                                   const UnknownTagDefaults& d);

// Nouns after modals that the lexicon tags NN but gold tags VB.
Corpus modal_corpus();
// `as ADJ as` with gold RB on the first `as`, a lexicon that favors IN,
// and for every such sentence a twin whose tag context is identical but
// whose first word is a correct IN, so tag-only triggers cannot separate
// them.
Corpus as_as_corpus();
// Lexicon half of known function words, held-out half of unknown plural
// nouns plus a few singular nouns ending in `ss` or merely containing `s`,
// and capitalized names.
Corpus actress_corpus();

std::string data_dir();

}  // namespace tbl::fixtures

#endif  // TBL_TESTS_FIXTURES_HPP_
