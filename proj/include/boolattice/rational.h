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

#ifndef BOOLATTICE_RATIONAL_H_
#define BOOLATTICE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace boolattice {

// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  // "p/q" always, even for integers.
  std::string ToFractionString() const;
  // "p" for integers, otherwise "p/q".
  std::string ToString() const;

  // Accepts "p/q" or "p". Returns nullopt on malformed input or a zero
  // denominator.
  static std::optional<Rational> Parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Elasticity value: an exact rational >= 1, or infinity.
class Elasticity {
 public:
  static Elasticity Finite(Rational value) { return Elasticity(value, false); }
  static Elasticity Infinite() { return Elasticity(Rational(1), true); }

  bool is_infinite() const { return infinite_; }
  // Meaningless when is_infinite().
  const Rational& value() const { return value_; }

  // "p/q" or "inf".
  std::string ToJsonString() const;
  // "p", "p/q" or "inf".
  std::string ToString() const;

  friend bool operator==(const Elasticity&, const Elasticity&) = default;
  friend std::strong_ordering operator<=>(const Elasticity& a,
                                          const Elasticity& b);

 private:
  Elasticity(Rational value, bool infinite)
      : value_(value), infinite_(infinite) {}

  Rational value_;
  bool infinite_;
};

}  // namespace boolattice

#endif  // BOOLATTICE_RATIONAL_H_
