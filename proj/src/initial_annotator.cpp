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

#include "tbl/initial_annotator.hpp"

#include <map>

#include "tbl/unknown.hpp"
#include "tbl/utf8.hpp"

namespace tbl {

Tag guess_unknown_initial(std::string_view w, const UnknownTagDefaults& d) {
  return utf8::is_upper(utf8::decode_first(w)) ? d.capitalized_tag
                                               : d.default_tag;
}

Corpus annotate_initial(const Corpus& c, const Lexicon& lex,
                        std::span<const UnknownRule> unknown_rules,
                        const Wordlist& wl, const BigramTable& bg,
                        const UnknownTagDefaults& d) {
  // Every feature is type-level, so one decision per word type suffices.
  std::map<std::string, Tag, std::less<>> decided;
  Corpus out = c;
  for (auto& s : out.sentences) {
    for (auto& t : s) {
      auto it = decided.find(t.word);
      if (it == decided.end()) {
        auto known = lex.most_likely_tag(t.word);
        Tag tag = known ? *known
                        : apply_unknown_rules(unknown_rules, t.word, wl, bg, d);
        it = decided.emplace(t.word, std::move(tag)).first;
      }
      t.tag = it->second;
    }
  }
  return out;
}

}  // namespace tbl
