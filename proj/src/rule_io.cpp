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

#include "tbl/rule_io.hpp"

namespace tbl {

namespace {

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

void append_trigger(std::string& out, const ContextualTrigger& t) {
  out += trigger_info(t.kind).mnemonic;
  out += ' ';
  out += t.arg1;
  if (trigger_info(t.kind).arity() == 2) {
    out += ' ';
    out += t.arg2;
  }
}

// Parses `MNEMONIC ARG1 [ARG2]` occupying exactly the given fields.
ContextualTrigger parse_trigger(std::span<const std::string_view> f) {
  if (f.empty()) throw ParseError("missing trigger");
  auto kind = trigger_from_mnemonic(f[0]);
  if (!kind) throw ParseError("unknown trigger mnemonic '" + std::string(f[0]) + "'");
  const auto& info = trigger_info(*kind);
  if (f.size() != static_cast<std::size_t>(info.arity()) + 1)
    throw ParseError(std::string(info.mnemonic) + " takes " +
                     std::to_string(info.arity()) + " argument(s), got " +
                     std::to_string(f.size() - 1));
  return ContextualTrigger{*kind, std::string(f[1]),
                           info.arity() == 2 ? std::string(f[2]) : std::string()};
}

// Runs a constructor, turning validation failures into parse errors.
template <class Fn>
auto validated(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const DataError& e) {
    throw ParseError(e.what());
  }
}

template <class Rule, class ParseOne>
std::vector<Rule> parse_lines(std::string_view text, ParseOne&& parse_one) {
  std::vector<Rule> out;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (fields_of(line).empty()) continue;
    try {
      out.push_back(parse_one(line));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no);
    }
  }
  return out;
}

}  // namespace

std::string render_rule(const ContextualRule& r) {
  std::string out = r.from + ' ' + r.to + ' ';
  append_trigger(out, r.trigger);
  return out;
}

std::string render_rule(const UnknownRule& r) {
  std::string out = r.from ? *r.from : std::string("*");
  out += ' ';
  out += r.to;
  out += ' ';
  out += mnemonic(r.kind);
  out += ' ';
  out += r.arg;
  return out;
}

std::string render_rule(const KBestRule& r) {
  std::string out = r.add;
  out += r.condition.kind == KBestCondition::Kind::kWhenTag ? " WHENTAG " : " WHENWORD ";
  out += r.condition.value;
  out += ' ';
  append_trigger(out, r.trigger);
  return out;
}

ContextualRule parse_contextual_rule(std::string_view line) {
  auto f = fields_of(line);
  if (f.size() < 4) throw ParseError("contextual rule needs FROM TO TRIGGER ARG1 [ARG2]");
  auto trigger = parse_trigger(std::span(f).subspan(2));
  return validated([&] {
    return make_contextual_rule(Tag(f[0]), Tag(f[1]), std::move(trigger));
  });
}

UnknownRule parse_unknown_rule(std::string_view line) {
  auto f = fields_of(line);
  if (f.size() != 4) throw ParseError("unknown-word rule needs FROM TO TRIGGER ARG");
  auto kind = unknown_trigger_from_mnemonic(f[2]);
  if (!kind) throw ParseError("unknown trigger mnemonic '" + std::string(f[2]) + "'");
  if (f[1] == "*") throw ParseError("the wildcard '*' is only valid as FROM");
  std::optional<Tag> from;
  if (f[0] != "*") from = Tag(f[0]);
  return validated([&] {
    return make_unknown_rule(std::move(from), Tag(f[1]), *kind, std::string(f[3]));
  });
}

KBestRule parse_kbest_rule(std::string_view line) {
  auto f = fields_of(line);
  if (f.size() < 5) throw ParseError("k-best rule needs ADD COND ARG TRIGGER ARG1 [ARG2]");
  KBestCondition cond;
  if (f[1] == "WHENTAG") cond.kind = KBestCondition::Kind::kWhenTag;
  else if (f[1] == "WHENWORD") cond.kind = KBestCondition::Kind::kWhenWord;
  else throw ParseError("unknown k-best condition '" + std::string(f[1]) + "'");
  cond.value = std::string(f[2]);
  auto trigger = parse_trigger(std::span(f).subspan(3));
  return validated([&] {
    return make_kbest_rule(Tag(f[0]), std::move(cond), std::move(trigger));
  });
}

std::vector<ContextualRule> parse_contextual_rules(std::string_view text) {
  return parse_lines<ContextualRule>(text, parse_contextual_rule);
}

std::vector<UnknownRule> parse_unknown_rules(std::string_view text) {
  return parse_lines<UnknownRule>(text, parse_unknown_rule);
}

std::vector<KBestRule> parse_kbest_rules(std::string_view text) {
  return parse_lines<KBestRule>(text, parse_kbest_rule);
}

}  // namespace tbl
