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

#ifndef TBL_UTF8_HPP_
#define TBL_UTF8_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

// Affix lengths and character features count unicode scalar values, not
// bytes. Input is assumed to be UTF-8; a stray continuation byte sticks to
// whatever precedes it, which keeps the arithmetic total and deterministic.
namespace tbl::utf8 {

// Number of scalar values in s.
std::size_t length(std::string_view s);

// The first / last n scalar values of s. n must not exceed length(s).
std::string_view first(std::string_view s, std::size_t n);
std::string_view last(std::string_view s, std::size_t n);

// s split into one view per scalar value.
std::vector<std::string_view> chars(std::string_view s);

char32_t decode_first(std::string_view s);

// Uppercase-letter property for the scripts a tagger realistically meets:
// ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic capitals.
bool is_upper(char32_t c);

}  // namespace tbl::utf8

#endif  // TBL_UTF8_HPP_
