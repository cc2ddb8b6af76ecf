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

#ifndef TBL_BUNDLE_HPP_
#define TBL_BUNDLE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbl/contextual.hpp"
#include "tbl/kbest.hpp"

namespace tbl {

inline constexpr std::string_view kBundleVersion = "1";

// Plain `key=value` manifest grouping the files of a trained model. Paths
// are stored as written and resolved against the manifest's directory.
struct BundleManifest {
  std::string lexicon;
  std::string wordlist;
  std::string unknown_rules;
  std::string contextual_rules;
  std::optional<std::string> kbest_rules;
  UnknownTagDefaults defaults;
  std::string version{kBundleVersion};

  friend bool operator==(const BundleManifest&, const BundleManifest&) = default;
};

BundleManifest parse_manifest(std::string_view text);
std::string render_manifest(const BundleManifest& m);

struct LoadedBundle {
  BundleManifest manifest;
  TaggerModel model;
  std::vector<KBestRule> kbest_rules;
};

// Reads the manifest and every file it names. Throws ParseError or
// DataError naming the offending file.
LoadedBundle load_bundle(const std::string& manifest_path);

}  // namespace tbl

#endif  // TBL_BUNDLE_HPP_
