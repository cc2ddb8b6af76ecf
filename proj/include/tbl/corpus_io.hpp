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

#ifndef TBL_CORPUS_IO_HPP_
#define TBL_CORPUS_IO_HPP_

#include <string>
#include <string_view>

#include "tbl/types.hpp"

namespace tbl {

// One sentence per non-empty line, tokens `word/TAG` separated by spaces or
// tabs. The tag starts after the LAST slash, so `a/b/CD` is word `a/b`.
// Throws ParseError with line and column on malformed tokens or on the
// reserved sentinel symbol.
Corpus parse_tagged(std::string_view text);

// Same layout without tags; every token comes back untagged.
Corpus parse_raw(std::string_view text);

// Inverse of parse_tagged. Throws DataError on an untagged token.
std::string render_tagged(const Corpus& c);

// Words only, one sentence per line.
std::string render_raw(const Corpus& c);

// Copy of c with every tag removed.
Corpus strip_tags(const Corpus& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace tbl

#endif  // TBL_CORPUS_IO_HPP_
