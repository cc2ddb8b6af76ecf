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

#ifndef TBL_RATIO_HPP_
#define TBL_RATIO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace tbl {

// Exact non-negative rational. Counts in this library stay far below 2^31,
// so cross-multiplication in 64 bits cannot overflow.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

// Round-half-up rendering with a fixed number of decimals, e.g. "0.9667".
std::string to_fixed(const Ratio& r, int decimals);

// Parses "2", "0.05", "1/3". Throws std::invalid_argument on anything else,
// including zero denominators and negative values.
Ratio parse_ratio(std::string_view text);

}  // namespace tbl

#endif  // TBL_RATIO_HPP_
