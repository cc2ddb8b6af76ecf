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

#ifndef TBL_EVAL_HPP_
#define TBL_EVAL_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "tbl/kbest.hpp"
#include "tbl/lexicon.hpp"
#include "tbl/ratio.hpp"
#include "tbl/types.hpp"

namespace tbl {

// Token counts behind the accuracy figures. A token is unknown when its
// word is absent from the lexicon the report was computed against.
struct EvalReport {
  std::size_t total_tokens = 0;
  std::size_t correct_tokens = 0;
  std::size_t known_tokens = 0;
  std::size_t known_correct = 0;
  std::size_t unknown_tokens = 0;
  std::size_t unknown_correct = 0;

  // Absent when the denominator is zero.
  std::optional<Ratio> overall_accuracy() const;
  std::optional<Ratio> known_accuracy() const;
  std::optional<Ratio> unknown_accuracy() const;
};

// Exact tag equality per token. Throws DataError naming the first position
// where shape or words diverge.
EvalReport evaluate(const Corpus& sys, const Corpus& gold, const Lexicon& lex);

// Aligned text by default; `key=value` lines when key_value is set.
// Accuracies print with four decimals, "n/a" when undefined.
std::string render_report(const EvalReport& r, bool key_value);
std::string render_report(const KBestMetrics& m, bool key_value);

}  // namespace tbl

#endif  // TBL_EVAL_HPP_
