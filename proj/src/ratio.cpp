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

#include "tbl/ratio.hpp"

#include <charconv>
#include <stdexcept>

namespace tbl {

namespace {

std::int64_t parse_digits(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0)
    throw std::invalid_argument("not a non-negative number: '" +
                                std::string(whole) + "'");
  return v;
}

}  // namespace

std::string to_fixed(const Ratio& r, int decimals) {
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  std::int64_t scaled = (r.num * scale * 2 + r.den) / (r.den * 2);
  std::string out = std::to_string(scaled / scale);
  if (decimals > 0) {
    std::string frac = std::to_string(scaled % scale);
    out += '.';
    out += std::string(static_cast<std::size_t>(decimals) - frac.size(), '0');
    out += frac;
  }
  return out;
}

Ratio parse_ratio(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Ratio r{parse_digits(text.substr(0, slash), text),
            parse_digits(text.substr(slash + 1), text)};
    if (r.den == 0) throw std::invalid_argument("zero denominator");
    return r;
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return {parse_digits(text, text), 1};
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 12) throw std::invalid_argument("too many decimals");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::int64_t w = whole.empty() ? 0 : parse_digits(whole, text);
  std::int64_t f = frac.empty() ? 0 : parse_digits(frac, text);
  if (whole.empty() && frac.empty()) throw std::invalid_argument("empty number");
  return {w * den + f, den};
}

}  // namespace tbl
