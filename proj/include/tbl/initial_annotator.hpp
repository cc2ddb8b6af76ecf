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

#ifndef TBL_INITIAL_ANNOTATOR_HPP_
#define TBL_INITIAL_ANNOTATOR_HPP_

#include <span>
#include <string_view>

#include "tbl/lexicon.hpp"
#include "tbl/types.hpp"

namespace tbl {

struct UnknownRule;

// Tags handed to words missing from the lexicon before any rule runs.
struct UnknownTagDefaults {
  Tag capitalized_tag = "NNP";
  Tag default_tag = "NN";

  friend bool operator==(const UnknownTagDefaults&, const UnknownTagDefaults&) = default;
};

// capitalized_tag when the first character is an uppercase letter,
// default_tag otherwise (digits and punctuation are not uppercase).
Tag guess_unknown_initial(std::string_view w, const UnknownTagDefaults& d);

// Known words get their most likely tag. Unknown words get the
// capitalization guess, then every unknown-word rule in order. Existing
// tags on c are ignored. Shape and words are preserved.
Corpus annotate_initial(const Corpus& c, const Lexicon& lex,
                        std::span<const UnknownRule> unknown_rules,
                        const Wordlist& wl, const BigramTable& bg,
                        const UnknownTagDefaults& d);

}  // namespace tbl

#endif  // TBL_INITIAL_ANNOTATOR_HPP_
