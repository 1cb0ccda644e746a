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

#ifndef BOOLATTICE_REPORT_H_
#define BOOLATTICE_REPORT_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "boolattice/finite_set.h"
#include "boolattice/rational.h"

namespace boolattice {

// An irredundant set of quarks, kept in canonical quark order.
struct Factorization {
  std::vector<FiniteSet> quarks;

  std::size_t length() const { return quarks.size(); }
  FiniteSet Join() const { return UnionOf(quarks); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
  // By length, then lexicographic on the quark sequence.
  friend std::strong_ordering operator<=>(const Factorization& a,
                                          const Factorization& b) {
    if (auto c = a.quarks.size() <=> b.quarks.size(); c != 0) return c;
    return a.quarks <=> b.quarks;
  }
};

// Sorted, duplicate-free factorization lengths.
using LengthSet = std::vector<std::size_t>;

enum class Flag { kFactorizable, kFfs, kUfs, kHfs, kLfs };

std::string_view FlagName(Flag flag);

// Evidence for a false flag: an element and the offending factorizations
// (two of them for UFS/HFS/LFS, none for a non-factorable element).
struct Witness {
  FiniteSet element;
  std::vector<Factorization> factorizations;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class ClassificationMethod { kBrute, kStructural };

struct ClassificationReport {
  ClassificationMethod method = ClassificationMethod::kBrute;
  bool factorizable = true;
  bool ffs = true;
  bool ufs = true;
  bool hfs = true;
  bool lfs = true;
  // nullopt when the classifier does not compute it (structural path).
  std::optional<Elasticity> elasticity;
  std::optional<FiniteSet> elasticity_witness;
  std::map<Flag, Witness> witnesses;
};

}  // namespace boolattice

#endif  // BOOLATTICE_REPORT_H_
