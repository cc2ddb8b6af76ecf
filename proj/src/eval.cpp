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

#include "tbl/eval.hpp"

#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

namespace tbl {

namespace {

std::optional<Ratio> ratio_of(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return Ratio{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

std::string fixed_or_na(const std::optional<Ratio>& r, int decimals) {
  return r ? to_fixed(*r, decimals) : std::string("n/a");
}

std::string render_pairs(const std::vector<std::pair<std::string, std::string>>& rows,
                         bool key_value) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) {
    if (key_value) out << k << '=' << v << '\n';
    else out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  }
  return out.str();
}

}  // namespace

std::optional<Ratio> EvalReport::overall_accuracy() const {
  return ratio_of(correct_tokens, total_tokens);
}
std::optional<Ratio> EvalReport::known_accuracy() const {
  return ratio_of(known_correct, known_tokens);
}
std::optional<Ratio> EvalReport::unknown_accuracy() const {
  return ratio_of(unknown_correct, unknown_tokens);
}

EvalReport evaluate(const Corpus& sys, const Corpus& gold, const Lexicon& lex) {
  if (sys.sentences.size() != gold.sentences.size())
    throw DataError("system output has " + std::to_string(sys.sentences.size()) +
                    " sentences, gold has " + std::to_string(gold.sentences.size()));
  EvalReport r;
  for (std::size_t s = 0; s < sys.sentences.size(); ++s) {
    const auto& ss = sys.sentences[s];
    const auto& gs = gold.sentences[s];
    if (ss.size() != gs.size())
      throw DataError("sentence " + std::to_string(s + 1) + " has " +
                      std::to_string(ss.size()) + " tokens, gold has " +
                      std::to_string(gs.size()));
    for (std::size_t i = 0; i < ss.size(); ++i) {
      if (ss[i].word != gs[i].word)
        throw DataError("word mismatch at sentence " + std::to_string(s + 1) +
                        ", token " + std::to_string(i + 1) + ": '" + ss[i].word +
                        "' vs '" + gs[i].word + "'");
      if (!ss[i].tag || !gs[i].tag)
        throw DataError("untagged token at sentence " + std::to_string(s + 1) +
                        ", token " + std::to_string(i + 1));
      bool correct = *ss[i].tag == *gs[i].tag;
      ++r.total_tokens;
      r.correct_tokens += correct;
      if (lex.contains(gs[i].word)) {
        ++r.known_tokens;
        r.known_correct += correct;
      } else {
        ++r.unknown_tokens;
        r.unknown_correct += correct;
      }
    }
  }
  return r;
}

std::string render_report(const EvalReport& r, bool key_value) {
  return render_pairs(
      {
          {"total_tokens", std::to_string(r.total_tokens)},
          {"correct_tokens", std::to_string(r.correct_tokens)},
          {"overall_accuracy", fixed_or_na(r.overall_accuracy(), 4)},
          {"known_tokens", std::to_string(r.known_tokens)},
          {"known_accuracy", fixed_or_na(r.known_accuracy(), 4)},
          {"unknown_token_count", std::to_string(r.unknown_tokens)},
          {"unknown_accuracy", fixed_or_na(r.unknown_accuracy(), 4)},
      },
      key_value);
}

std::string render_report(const KBestMetrics& m, bool key_value) {
  std::optional<Ratio> acc, avg;
  if (m.tokens) {
    acc = m.accuracy();
    avg = m.avg_tags();
  }
  return render_pairs(
      {
          {"total_tokens", std::to_string(m.tokens)},
          {"covered_tokens", std::to_string(m.covered)},
          {"accuracy", fixed_or_na(acc, 4)},
          {"avg_tags", fixed_or_na(avg, 2)},
      },
      key_value);
}

}  // namespace tbl
