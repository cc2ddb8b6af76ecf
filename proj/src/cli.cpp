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

#include "tbl/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "tbl/bundle.hpp"
#include "tbl/contextual.hpp"
#include "tbl/corpus_io.hpp"
#include "tbl/eval.hpp"
#include "tbl/kbest.hpp"
#include "tbl/lexicon.hpp"
#include "tbl/rule_io.hpp"
#include "tbl/unknown.hpp"

namespace tbl {

namespace {

namespace fs = std::filesystem;

// Thrown for argument combinations CLI11 cannot express; maps to exit 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

template <class Parse>
auto load(const std::string& path, Parse&& parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path, e.detail(), e.line(), e.column());
  }
}

std::set<Word, std::less<>> load_word_set(const std::string& path) {
  const Wordlist wl = load(path, parse_wordlist);
  return wl.forms();
}

// Path of `target` as the manifest at `manifest` should record it.
std::string relative_to_manifest(const std::string& target, const std::string& manifest) {
  fs::path dir = fs::absolute(manifest).parent_path();
  return fs::proximate(fs::absolute(target), dir).generic_string();
}

template <class Rule, class ScoreT, class Columns>
std::string render_trace(const std::vector<LearnedRule<Rule, ScoreT>>& learned,
                         Columns&& columns) {
  std::string out;
  for (const auto& l : learned) {
    out += render_rule(l.rule);
    out += columns(l);
    out += '\n';
  }
  return out;
}

void emit_trace(const std::string& trace, const std::string& trace_out,
                std::ostream& out) {
  out << trace;
  if (!trace_out.empty()) write_file(trace_out, trace);
}

struct Options {
  // lexicon
  std::string tagged, out, wordlist_out, extra_words;
  // learners
  double split = 0.5;
  std::int64_t threshold = 2;
  std::size_t max_rules = 0;
  unsigned threads = 1;
  std::string cap_tag = "NNP", default_tag = "NN";
  std::string lexicon, unknown_rules, wordlist, bundle_out, trace_out;
  bool tag_triggers_only = false;
  // tag / eval / k-best
  std::string raw, model, sys, gold, min_ratio = "0.05";
  std::int64_t min_covered = 2;
  bool kbest = false, key_value = false;
  std::size_t kbest_baseline = 0;
};

std::optional<std::size_t> cap(std::size_t max_rules) {
  if (max_rules == 0) return std::nullopt;
  return max_rules;
}

UnknownTagDefaults defaults_of(const Options& o) {
  if (!is_valid_tag(o.cap_tag) || !is_valid_tag(o.default_tag))
    throw UsageError("--cap-tag and --default-tag must be valid tags");
  return {o.cap_tag, o.default_tag};
}

int cmd_lexicon(const Options& o, std::ostream&) {
  const Corpus c = load(o.tagged, parse_tagged);
  const Lexicon lex = build_lexicon(c);
  write_file(o.out, render_lexicon(lex));
  if (!o.wordlist_out.empty()) {
    std::set<Word, std::less<>> extra;
    if (!o.extra_words.empty()) extra = load_word_set(o.extra_words);
    write_file(o.wordlist_out, render_wordlist(build_wordlist(lex, extra)));
  }
  return kExitOk;
}

int cmd_train_unknown(const Options& o, std::ostream& out) {
  const Corpus c = load(o.tagged, parse_tagged);
  UnknownLearnOptions opts;
  opts.lexicon_fraction = o.split;
  opts.config = {o.threshold, cap(o.max_rules), o.threads};
  opts.defaults = defaults_of(o);
  if (!o.extra_words.empty()) opts.extra_words = load_word_set(o.extra_words);
  const auto learned = learn_unknown_rules(c, opts);
  std::vector<UnknownRule> rules;
  for (const auto& l : learned) rules.push_back(l.rule);
  write_file(o.out, render_rules(rules));
  emit_trace(render_trace(learned,
                          [](const auto& l) {
                            return "\t" + std::to_string(l.score.good) + "\t" +
                                   std::to_string(l.score.bad);
                          }),
             o.trace_out, out);
  return kExitOk;
}

int cmd_train_context(const Options& o, std::ostream& out) {
  const Corpus gold = load(o.tagged, parse_tagged);
  const Lexicon lex = load(o.lexicon, parse_lexicon);
  const Wordlist wl = o.wordlist.empty() ? build_wordlist(lex) : load(o.wordlist, parse_wordlist);
  std::vector<UnknownRule> unknown;
  if (!o.unknown_rules.empty()) unknown = load(o.unknown_rules, parse_unknown_rules);
  const UnknownTagDefaults d = defaults_of(o);

  const Corpus initial = annotate_initial(gold, lex, unknown, wl, build_bigrams(gold), d);
  ContextualLearnOptions opts;
  opts.config = {o.threshold, cap(o.max_rules), o.threads};
  opts.tag_triggers_only = o.tag_triggers_only;
  const auto learned = learn_contextual_rules(initial, gold, opts);
  std::vector<ContextualRule> rules;
  for (const auto& l : learned) rules.push_back(l.rule);
  write_file(o.out, render_rules(rules));

  if (!o.bundle_out.empty()) {
    if (o.wordlist.empty() || o.unknown_rules.empty())
      throw UsageError("--bundle-out needs --wordlist and --unknown-rules");
    BundleManifest m;
    m.lexicon = relative_to_manifest(o.lexicon, o.bundle_out);
    m.wordlist = relative_to_manifest(o.wordlist, o.bundle_out);
    m.unknown_rules = relative_to_manifest(o.unknown_rules, o.bundle_out);
    m.contextual_rules = relative_to_manifest(o.out, o.bundle_out);
    m.defaults = d;
    write_file(o.bundle_out, render_manifest(m));
  }
  emit_trace(render_trace(learned,
                          [](const auto& l) {
                            return "\t" + std::to_string(l.score.good) + "\t" +
                                   std::to_string(l.score.bad);
                          }),
             o.trace_out, out);
  return kExitOk;
}

int cmd_train_kbest(const Options& o, std::ostream& out) {
  const Corpus gold = load(o.tagged, parse_tagged);
  const LoadedBundle b = load_bundle(o.model);
  const Corpus tagged = tag(strip_tags(gold), b.model);
  KBestConfig cfg;
  try {
    cfg.min_ratio = parse_ratio(o.min_ratio);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--min-ratio: ") + e.what());
  }
  if (cfg.min_ratio.num == 0) throw UsageError("--min-ratio must be positive");
  cfg.min_covered = o.min_covered;
  cfg.max_rules = cap(o.max_rules);
  cfg.threads = o.threads;
  const auto learned = learn_kbest_rules(tagged, gold, cfg);
  std::vector<KBestRule> rules;
  for (const auto& l : learned) rules.push_back(l.rule);
  write_file(o.out, render_rules(rules));

  if (!o.bundle_out.empty()) {
    BundleManifest m = b.manifest;
    const fs::path base = fs::path(o.model).parent_path();
    auto rebase = [&](const std::string& p) {
      return relative_to_manifest((base / p).string(), o.bundle_out);
    };
    m.lexicon = rebase(m.lexicon);
    m.wordlist = rebase(m.wordlist);
    m.unknown_rules = rebase(m.unknown_rules);
    m.contextual_rules = rebase(m.contextual_rules);
    m.kbest_rules = relative_to_manifest(o.out, o.bundle_out);
    write_file(o.bundle_out, render_manifest(m));
  }

  // Cumulative curve: tokens covered and tags per token after each rule.
  const std::size_t tokens = gold.token_count();
  KBestMetrics running = kbest_metrics(to_tag_sets(tagged), gold);
  std::string trace;
  for (const auto& l : learned) {
    running.covered += static_cast<std::size_t>(l.score.covered);
    running.tag_total += static_cast<std::size_t>(l.score.added);
    trace += render_rule(l.rule) + "\t" + std::to_string(l.score.covered) + "\t" +
             std::to_string(l.score.added);
    if (tokens) {
      trace += "\t" + to_fixed(running.accuracy(), 4) + "\t" +
               to_fixed(running.avg_tags(), 2);
    }
    trace += '\n';
  }
  emit_trace(trace, o.trace_out, out);
  return kExitOk;
}

int cmd_tag(const Options& o, std::ostream&) {
  if (o.kbest && o.kbest_baseline)
    throw UsageError("--kbest and --kbest-baseline are exclusive");
  const Corpus raw = load(o.raw, parse_raw);
  const LoadedBundle b = load_bundle(o.model);
  if (o.kbest_baseline) {
    const auto unknown = most_frequent_unknown_tags(b.model.lexicon, o.kbest_baseline);
    if (unknown.empty())
      throw DataError("lexicon has no hapax words to estimate unknown-word tags from");
    write_file(o.out, render_kbest(kbest_baseline(raw, b.model.lexicon, unknown)));
    return kExitOk;
  }
  const Corpus tagged = tag(raw, b.model);
  if (!o.kbest) {
    write_file(o.out, render_tagged(tagged));
    return kExitOk;
  }
  if (!b.manifest.kbest_rules) throw DataError(o.model + ": bundle has no kbest_rules");
  TagSetCorpus sets = to_tag_sets(tagged);
  for (const auto& r : b.kbest_rules) apply_kbest_rule_in_place(r, sets);
  write_file(o.out, render_kbest(sets));
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Corpus gold = load(o.gold, parse_tagged);
  if (o.kbest) {
    const TagSetCorpus sys = load(o.sys, parse_kbest);
    out << render_report(kbest_metrics(sys, gold), o.key_value);
    return kExitOk;
  }
  if (o.lexicon.empty()) throw UsageError("eval needs --lexicon unless --kbest is given");
  const Corpus sys = load(o.sys, parse_tagged);
  const Lexicon lex = load(o.lexicon, parse_lexicon);
  out << render_report(evaluate(sys, gold, lex), o.key_value);
  return kExitOk;
}

const CLI::Validator kOpenUnitInterval(
    [](std::string& s) -> std::string {
      double v = 0;
      try {
        v = std::stod(s);
      } catch (...) {
        return "not a number";
      }
      if (!(v > 0.0 && v < 1.0)) return "must lie strictly between 0 and 1";
      return {};
    },
    "(0,1)");

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Transformation-based part-of-speech tagger", "tbltag"};
  app.require_subcommand(1);
  Options o;

  auto threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads for candidate scoring")
        ->check(CLI::Range(1u, 256u));
    sub->add_option("--max-rules", o.max_rules, "Stop after this many rules (0 = no cap)");
    sub->add_option("--trace-out", o.trace_out, "Also write the score trace here");
  };
  auto defaults = [&](CLI::App* sub) {
    sub->add_option("--cap-tag", o.cap_tag, "Initial tag of capitalized unknown words")
        ->capture_default_str();
    sub->add_option("--default-tag", o.default_tag, "Initial tag of other unknown words")
        ->capture_default_str();
  };

  auto* lex = app.add_subcommand("lexicon", "Build lexicon and wordlist files");
  lex->add_option("--tagged", o.tagged, "Tagged corpus")->required();
  lex->add_option("--out", o.out, "Lexicon file to write")->required();
  lex->add_option("--wordlist-out", o.wordlist_out, "Wordlist file to write");
  lex->add_option("--extra-words", o.extra_words, "Extra words for the wordlist, one per line");

  auto* tu = app.add_subcommand("train-unknown", "Learn unknown-word rules");
  tu->add_option("--tagged", o.tagged, "Tagged training corpus")->required();
  tu->add_option("--split", o.split, "Share of sentences used as the lexicon")
      ->check(kOpenUnitInterval)
      ->capture_default_str();
  tu->add_option("--threshold", o.threshold, "Minimum net score of a rule")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tu->add_option("--extra-words", o.extra_words, "Extra words for the wordlist");
  tu->add_option("--out", o.out, "Rule file to write")->required();
  defaults(tu);
  threads(tu);

  auto* tc = app.add_subcommand("train-context", "Learn contextual rules");
  tc->add_option("--tagged", o.tagged, "Tagged training corpus")->required();
  tc->add_option("--lexicon", o.lexicon, "Lexicon file")->required();
  tc->add_option("--unknown-rules", o.unknown_rules, "Unknown-word rule file");
  tc->add_option("--wordlist", o.wordlist, "Wordlist file (default: lexicon words)");
  tc->add_option("--threshold", o.threshold, "Minimum net score of a rule")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tc->add_flag("--tag-triggers-only", o.tag_triggers_only,
               "Only learn rules conditioned on neighboring tags");
  tc->add_option("--out", o.out, "Rule file to write")->required();
  tc->add_option("--bundle-out", o.bundle_out, "Also write a model manifest here");
  defaults(tc);
  threads(tc);

  auto* tk = app.add_subcommand("train-kbest", "Learn k-best add-tag rules");
  tk->add_option("--tagged", o.tagged, "Tagged held-out corpus")->required();
  tk->add_option("--model", o.model, "Model manifest")->required();
  tk->add_option("--min-ratio", o.min_ratio, "Minimum covered/added ratio")
      ->capture_default_str();
  tk->add_option("--min-covered", o.min_covered, "Minimum newly covered tokens per rule")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tk->add_option("--out", o.out, "Rule file to write")->required();
  tk->add_option("--bundle-out", o.bundle_out, "Write a manifest including the new rules");
  threads(tk);

  auto* tg = app.add_subcommand("tag", "Tag raw text");
  tg->add_option("--raw", o.raw, "Raw corpus, one sentence per line")->required();
  tg->add_option("--model", o.model, "Model manifest")->required();
  tg->add_option("--out", o.out, "Output file")->required();
  tg->add_flag("--kbest", o.kbest, "Apply the bundle's k-best rules");
  tg->add_option("--kbest-baseline", o.kbest_baseline,
                 "All lexicon tags for known words, the K likeliest unknown-word tags otherwise")
      ->check(CLI::PositiveNumber);

  auto* ev = app.add_subcommand("eval", "Score tagged output against gold");
  ev->add_option("--sys", o.sys, "System output")->required();
  ev->add_option("--gold", o.gold, "Gold corpus")->required();
  ev->add_option("--lexicon", o.lexicon, "Lexicon deciding known vs unknown words");
  ev->add_flag("--kbest", o.kbest, "System output is in k-best format");
  ev->add_flag("--kv", o.key_value, "Print key=value lines");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*lex) return cmd_lexicon(o, out);
    if (*tu) return cmd_train_unknown(o, out);
    if (*tc) return cmd_train_context(o, out);
    if (*tk) return cmd_train_kbest(o, out);
    if (*tg) return cmd_tag(o, out);
    if (*ev) return cmd_eval(o, out);
  } catch (const UsageError& e) {
    err << "tbltag: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "tbltag: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError& e) {
    err << "tbltag: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "tbltag: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace tbl
