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

#include "tbl/bundle.hpp"

#include <filesystem>
#include <map>

#include "tbl/corpus_io.hpp"
#include "tbl/rule_io.hpp"

namespace tbl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <class Parse>
auto load_file(const std::filesystem::path& path, Parse&& parse) {
  std::string text = read_file(path.string());
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e.detail(), e.line(), e.column());
  }
}

}  // namespace

BundleManifest parse_manifest(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("manifest lines are key=value", line_no);
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (!kv.emplace(key, value).second)
      throw ParseError("duplicate manifest key '" + key + "'", line_no);
  }

  BundleManifest m;
  auto take = [&](std::string_view key, bool required) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (required) throw ParseError("manifest lacks '" + std::string(key) + "'");
      return std::nullopt;
    }
    std::string v = std::move(it->second);
    kv.erase(it);
    if (v.empty()) throw ParseError("manifest key '" + std::string(key) + "' is empty");
    return v;
  };
  m.version = *take("version", true);
  if (m.version != kBundleVersion)
    throw ParseError("unsupported bundle version '" + m.version + "'");
  m.lexicon = *take("lexicon", true);
  m.wordlist = *take("wordlist", true);
  m.unknown_rules = *take("unknown_rules", true);
  m.contextual_rules = *take("contextual_rules", true);
  m.kbest_rules = take("kbest_rules", false);
  if (auto v = take("cap_tag", false)) m.defaults.capitalized_tag = *v;
  if (auto v = take("default_tag", false)) m.defaults.default_tag = *v;
  if (!is_valid_tag(m.defaults.capitalized_tag) || !is_valid_tag(m.defaults.default_tag))
    throw ParseError("invalid default tags in manifest");
  if (!kv.empty()) throw ParseError("unknown manifest key '" + kv.begin()->first + "'");
  return m;
}

std::string render_manifest(const BundleManifest& m) {
  std::string out;
  out += "lexicon=" + m.lexicon + "\n";
  out += "wordlist=" + m.wordlist + "\n";
  out += "unknown_rules=" + m.unknown_rules + "\n";
  out += "contextual_rules=" + m.contextual_rules + "\n";
  if (m.kbest_rules) out += "kbest_rules=" + *m.kbest_rules + "\n";
  out += "cap_tag=" + m.defaults.capitalized_tag + "\n";
  out += "default_tag=" + m.defaults.default_tag + "\n";
  out += "version=" + m.version + "\n";
  return out;
}

LoadedBundle load_bundle(const std::string& manifest_path) {
  namespace fs = std::filesystem;
  LoadedBundle b;
  b.manifest = load_file(manifest_path, parse_manifest);
  const fs::path base = fs::path(manifest_path).parent_path();
  auto resolve = [&](const std::string& p) { return base / p; };

  b.model.lexicon = load_file(resolve(b.manifest.lexicon), parse_lexicon);
  b.model.wordlist = load_file(resolve(b.manifest.wordlist), parse_wordlist);
  b.model.unknown_rules = load_file(resolve(b.manifest.unknown_rules), parse_unknown_rules);
  b.model.contextual_rules =
      load_file(resolve(b.manifest.contextual_rules), parse_contextual_rules);
  b.model.defaults = b.manifest.defaults;
  if (b.manifest.kbest_rules)
    b.kbest_rules = load_file(resolve(*b.manifest.kbest_rules), parse_kbest_rules);
  return b;
}

}  // namespace tbl
