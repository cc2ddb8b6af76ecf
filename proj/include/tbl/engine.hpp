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

#ifndef TBL_ENGINE_HPP_
#define TBL_ENGINE_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tbl/types.hpp"

namespace tbl {

// Effect of one rule on the current annotation, counted in tokens.
struct Score {
  std::int64_t good = 0;  // wrong -> right
  std::int64_t bad = 0;   // right -> wrong

  std::int64_t net() const { return good - bad; }
  std::int64_t error_reduction() const { return net(); }

  friend bool operator==(const Score&, const Score&) = default;
};

// Strict order used to pick a winner before the rule-line tie-break:
// higher net first, then fewer broken tokens.
inline bool outranks(const Score& a, const Score& b) {
  if (a.net() != b.net()) return a.net() > b.net();
  return a.bad < b.bad;
}

struct LearnerConfig {
  std::int64_t min_net_score = 2;
  std::optional<std::size_t> max_rules;
  unsigned threads = 1;
};

template <class Rule, class ScoreT = Score>
struct LearnedRule {
  Rule rule;
  ScoreT score;
  std::size_t errors_before = 0;
  std::size_t errors_after = 0;
};

template <class Rule, class ScoreT>
struct ScoredRule {
  Rule rule;
  ScoreT score;
  std::string line;  // serialized form, last tie-break key
};

// Winner under (outranks, then smallest rule line). Throws on empty input.
template <class Rule, class ScoreT>
const ScoredRule<Rule, ScoreT>& select_best(
    std::span<const ScoredRule<Rule, ScoreT>> scored) {
  if (scored.empty()) throw InvariantError("select_best over no candidates");
  const auto* best = &scored.front();
  for (const auto& s : scored.subspan(1)) {
    if (outranks(s.score, best->score) ||
        (!outranks(best->score, s.score) && s.line < best->line))
      best = &s;
  }
  return *best;
}

// What greedy_learn needs from a concrete learner. Candidates come from
// error sites only; scores are computed against a frozen state and must be
// safe to evaluate concurrently.
template <class P>
concept LearningProblem = requires(P& p, const P& cp,
                                   const typename P::rule_type& r,
                                   const typename P::site_type& site) {
  typename P::score_type;
  { cp.error_count() } -> std::convertible_to<std::size_t>;
  { cp.error_sites() } -> std::same_as<std::vector<typename P::site_type>>;
  { cp.candidates_at(site) } -> std::same_as<std::vector<typename P::rule_type>>;
  { cp.score(r) } -> std::same_as<typename P::score_type>;
  { cp.accepts(std::declval<const typename P::score_type&>()) } -> std::same_as<bool>;
  { cp.rule_line(r) } -> std::same_as<std::string>;
  { p.apply(r) } -> std::same_as<typename P::score_type>;
};

struct EngineLimits {
  std::optional<std::size_t> max_rules;
  unsigned threads = 1;
};

namespace detail {

template <class P>
std::vector<typename P::score_type> score_all(
    const P& problem, const std::vector<typename P::rule_type>& rules,
    unsigned threads) {
  std::vector<typename P::score_type> scores(rules.size());
  std::size_t workers = std::max(1u, threads);
  workers = std::min<std::size_t>(workers, rules.size() / 64 + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < rules.size(); ++i) scores[i] = problem.score(rules[i]);
    return scores;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < rules.size(); i += workers)
          scores[i] = problem.score(rules[i]);
      });
    }
  }
  return scores;
}

}  // namespace detail

// Greedy error-driven loop: gather candidates at every error site, score
// each over the whole state, accept the best if the problem's threshold
// admits it, apply it, and repeat. The realized effect of every accepted
// rule must match its score exactly; anything else is an InvariantError.
template <LearningProblem P>
std::vector<LearnedRule<typename P::rule_type, typename P::score_type>>
greedy_learn(P& problem, const EngineLimits& limits = {}) {
  using Rule = typename P::rule_type;
  using ScoreT = typename P::score_type;
  std::vector<LearnedRule<Rule, ScoreT>> learned;
  while (!limits.max_rules || learned.size() < *limits.max_rules) {
    std::size_t before = problem.error_count();
    if (before == 0) break;

    std::vector<Rule> rules;
    for (const auto& site : problem.error_sites()) {
      auto here = problem.candidates_at(site);
      rules.insert(rules.end(), std::make_move_iterator(here.begin()),
                   std::make_move_iterator(here.end()));
    }
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    if (rules.empty()) break;

    auto scores = detail::score_all(problem, rules, limits.threads);
    std::vector<ScoredRule<Rule, ScoreT>> admissible;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (!problem.accepts(scores[i])) continue;
      admissible.push_back({rules[i], scores[i], problem.rule_line(rules[i])});
    }
    if (admissible.empty()) break;

    const auto& best = select_best<Rule, ScoreT>(admissible);
    ScoreT realized = problem.apply(best.rule);
    std::size_t after = problem.error_count();
    if (!(realized == best.score) ||
        static_cast<std::int64_t>(before) - static_cast<std::int64_t>(after) !=
            best.score.error_reduction())
      throw InvariantError("rule '" + best.line +
                           "' changed the error count differently from its score");
    learned.push_back({best.rule, best.score, before, after});
  }
  return learned;
}

}  // namespace tbl

#endif  // TBL_ENGINE_HPP_
