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

#ifndef TBL_RULE_IO_HPP_
#define TBL_RULE_IO_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbl/contextual.hpp"
#include "tbl/kbest.hpp"
#include "tbl/unknown.hpp"

// Rule files hold one rule per line, fields separated by single spaces.
//
//   contextual:  FROM TO TRIGGER ARG1 [ARG2]       NN VB PREVTAG MD
//   unknown:     FROM TO TRIGGER ARG               * JJ ADDSUF ly
//   k-best:      ADD COND ARG TRIGGER ARG1 [ARG2]  VB WHENTAG VBP PREV1OR2WD n't
//
// FROM is `*` for a wildcard unknown-word rule; COND is WHENTAG or WHENWORD.
// Parsers accept any run of spaces or tabs between fields and skip blank
// lines; errors carry the 1-based line number.
namespace tbl {

std::string render_rule(const ContextualRule& r);
std::string render_rule(const UnknownRule& r);
std::string render_rule(const KBestRule& r);

ContextualRule parse_contextual_rule(std::string_view line);
UnknownRule parse_unknown_rule(std::string_view line);
KBestRule parse_kbest_rule(std::string_view line);

std::vector<ContextualRule> parse_contextual_rules(std::string_view text);
std::vector<UnknownRule> parse_unknown_rules(std::string_view text);
std::vector<KBestRule> parse_kbest_rules(std::string_view text);

template <class Rule>
std::string render_rules(std::span<const Rule> rules) {
  std::string out;
  for (const auto& r : rules) {
    out += render_rule(r);
    out += '\n';
  }
  return out;
}

template <class Rule>
std::string render_rules(const std::vector<Rule>& rules) {
  return render_rules(std::span<const Rule>(rules));
}

}  // namespace tbl

#endif  // TBL_RULE_IO_HPP_
