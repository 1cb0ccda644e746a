// Copyright 2026 The boolattice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boolattice/rational.h"

#include <charconv>
#include <numeric>

#include "boolattice/error.h"

namespace boolattice {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::kPreconditionViolated, "zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  std::int64_t g = std::gcd(numerator, denominator);
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::ToFractionString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return ToFractionString();
}

std::optional<Rational> Rational::Parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
    std::int64_t v = 0;
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };
  auto slash = text.find('/');
  auto num = parse_int(text.substr(0, slash));
  if (!num) return std::nullopt;
  std::int64_t den = 1;
  if (slash != std::string_view::npos) {
    auto d = parse_int(text.substr(slash + 1));
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  return Rational(*num, den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

std::string Elasticity::ToJsonString() const {
  return infinite_ ? "inf" : value_.ToFractionString();
}

std::string Elasticity::ToString() const {
  return infinite_ ? "inf" : value_.ToString();
}

std::strong_ordering operator<=>(const Elasticity& a, const Elasticity& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  return a.value_ <=> b.value_;
}

}  // namespace boolattice
