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

#ifndef BOOLATTICE_SUBLATTICE_H_
#define BOOLATTICE_SUBLATTICE_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "boolattice/finite_set.h"

namespace boolattice {

inline constexpr std::size_t kDefaultMaxClosure = 100000;

// A finitely generated Boolean sublattice: the union-closure of a family of
// finite sets, fully materialized. Immutable once built by Close().
class Sublattice {
 public:
  // Nonempty, deduplicated, in first-seen input order.
  const std::vector<FiniteSet>& generators() const { return generators_; }
  // Every element in canonical order; elements()[0] is the empty set.
  const std::vector<FiniteSet>& elements() const { return elements_; }
  // Inclusion-minimal nonempty elements, canonical order.
  const std::vector<FiniteSet>& quarks() const { return quarks_; }
  // Union of all generators.
  const FiniteSet& universe() const { return universe_; }
  std::size_t max_closure() const { return max_closure_; }
  std::size_t size() const { return elements_.size(); }

  bool Contains(const FiniteSet& x) const { return index_.contains(x); }
  std::optional<std::size_t> IndexOf(const FiniteSet& x) const;
  // Throws kElementNotInLattice when x is not an element.
  void RequireElement(const FiniteSet& x) const;

 private:
  friend Sublattice Close(std::span<const FiniteSet> generators,
                          std::size_t max_closure);

  std::vector<FiniteSet> generators_;
  std::vector<FiniteSet> elements_;
  std::vector<FiniteSet> quarks_;
  FiniteSet universe_;
  std::size_t max_closure_ = kDefaultMaxClosure;
  std::unordered_map<FiniteSet, std::size_t> index_;
};

// Union-closure of `generators` together with the empty set. Empty
// generators are absorbed into the minimum. Throws kClosureCapExceeded when
// the closure would hold more than `max_closure` elements.
Sublattice Close(std::span<const FiniteSet> generators,
                 std::size_t max_closure = kDefaultMaxClosure);

inline Sublattice Close(std::initializer_list<FiniteSet> generators,
                        std::size_t max_closure = kDefaultMaxClosure) {
  return Close(std::span<const FiniteSet>(generators.begin(), generators.size()),
               max_closure);
}

std::vector<FiniteSet> Quarks(const Sublattice& s);

struct FactorizabilityResult {
  bool factorizable = true;
  // First nonempty element (canonical order) that is not the union of the
  // quarks below it.
  std::optional<FiniteSet> witness;
};

FactorizabilityResult IsFactorizable(const Sublattice& s);

// Elements contained in x, canonical order.
std::vector<FiniteSet> Downset(const Sublattice& s, const FiniteSet& x);

struct CoverRelation {
  FiniteSet lower;
  FiniteSet upper;

  friend bool operator==(const CoverRelation&, const CoverRelation&) = default;
};

// The Hasse diagram, ordered by (lower, upper) in canonical order.
std::vector<CoverRelation> Covers(const Sublattice& s);

// Lattice meet: the union of all elements below both x and y. In general
// this differs from x ∩ y.
FiniteSet Meet(const Sublattice& s, const FiniteSet& x, const FiniteSet& y);

}  // namespace boolattice

#endif  // BOOLATTICE_SUBLATTICE_H_
