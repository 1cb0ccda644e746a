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

#ifndef BOOLATTICE_FINITE_SET_H_
#define BOOLATTICE_FINITE_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace boolattice {

// A ground element. Zero is never a valid label.
using Label = std::uint64_t;

// A finite set of positive integers kept in canonical (strictly increasing)
// form, so equality and hashing are structural. The empty set is the lattice
// minimum.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<Label> labels);
  // Sorts and removes duplicates. Throws kPreconditionViolated on a zero
  // label.
  explicit FiniteSet(std::vector<Label> labels);

  std::span<const Label> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Label min() const { return elements_.front(); }
  Label max() const { return elements_.back(); }

  bool Contains(Label label) const;
  bool IsSubsetOf(const FiniteSet& other) const;
  bool IsProperSubsetOf(const FiniteSet& other) const;
  bool Intersects(const FiniteSet& other) const;

  FiniteSet Union(const FiniteSet& other) const;
  FiniteSet Intersection(const FiniteSet& other) const;
  FiniteSet Difference(const FiniteSet& other) const;

  // "1 2 3"; the empty set is "{}".
  std::string ToString() const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
  // Canonical order: by size, then lexicographic on the elements.
  friend std::strong_ordering operator<=>(const FiniteSet& a,
                                          const FiniteSet& b);

 private:
  struct SortedTag {};
  FiniteSet(SortedTag, std::vector<Label> sorted)
      : elements_(std::move(sorted)) {}

  std::vector<Label> elements_;
};

std::ostream& operator<<(std::ostream& os, const FiniteSet& set);

// Union of a family of sets.
FiniteSet UnionOf(std::span<const FiniteSet> sets);

struct FiniteSetHash {
  std::size_t operator()(const FiniteSet& set) const noexcept;
};

}  // namespace boolattice

template <>
struct std::hash<boolattice::FiniteSet> : boolattice::FiniteSetHash {};

#endif  // BOOLATTICE_FINITE_SET_H_
