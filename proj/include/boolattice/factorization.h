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

#ifndef BOOLATTICE_FACTORIZATION_H_
#define BOOLATTICE_FACTORIZATION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "boolattice/finite_set.h"
#include "boolattice/rational.h"
#include "boolattice/report.h"
#include "boolattice/sublattice.h"

namespace boolattice {

// All factorizations of x into quarks of s, sorted by length and then
// lexicographically. Empty iff x is not a union of quarks. Throws
// kElementNotInLattice, and kPreconditionViolated for x = ∅.
std::vector<Factorization> Factorizations(const Sublattice& s,
                                          const FiniteSet& x);

// Throws kNotFactorable when x has no factorization.
LengthSet Lengths(const Sublattice& s, const FiniteSet& x);

// max L(x) / min L(x).
Elasticity ElasticityOf(const Sublattice& s, const FiniteSet& x);

struct LatticeElasticity {
  Elasticity value = Elasticity::Finite(Rational(1));
  // First element (canonical order) attaining the maximum; unset for the
  // trivial lattice.
  std::optional<FiniteSet> witness;
};

// Maximum elasticity over the nonempty elements. Throws kNotFactorizable.
LatticeElasticity ElasticityOfLattice(const Sublattice& s);

// Exhaustive classification over every nonempty element. Non-factorizable
// lattices are still classified: UFS/HFS/LFS and the elasticity then range
// over the factorable elements only.
ClassificationReport ClassifyBrute(const Sublattice& s);

struct DecompositionPiece {
  // Index into BuildQuarkicGraph(s).graph.components().
  std::size_t component;
  FiniteSet piece;

  friend bool operator==(const DecompositionPiece&,
                         const DecompositionPiece&) = default;
};

// Splits x into the disjoint pieces generated by each quarkic component,
// ordered by smallest ground element. Throws kNotFactorizable,
// kElementNotInLattice.
std::vector<DecompositionPiece> Decompose(const Sublattice& s,
                                          const FiniteSet& x);

struct ProductCheck {
  bool holds = false;
  std::size_t total = 0;  // |Z_S(x)|
  // |Z(piece)| inside the sublattice generated by that piece's component.
  std::vector<std::size_t> per_piece;
};

// Checks |Z_S(x)| = ∏ |Z_<V(C_i)>(x_i)| by enumerating both sides.
ProductCheck FactorizationProductCheck(const Sublattice& s,
                                       const FiniteSet& x);

}  // namespace boolattice

#endif  // BOOLATTICE_FACTORIZATION_H_
