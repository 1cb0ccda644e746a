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

// Explicit lattice families with known factorization behaviour.
//
// Elasticity family: for ratios a_n/b_n, block J_n is an a_n x b_n grid of
// fresh integers and the generators are its rows and columns. Each J_n then
// factors exactly two ways (all rows or all columns), every element not
// containing a full block factors uniquely, and the lattice elasticity is the
// largest ratio.
//
// Layered family: the ground set is the binary strings of length T_N
// (triangular number). Layer n splits the strings by the value of their n-th
// digit segment (positions T_{n-1}+1..T_n) into 2^n blocks. The full ground
// set factors once per layer, with pairwise different lengths 2^n, and every
// other element factors uniquely.

#ifndef BOOLATTICE_CONSTRUCTIONS_H_
#define BOOLATTICE_CONSTRUCTIONS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolattice/finite_set.h"
#include "boolattice/rational.h"
#include "boolattice/report.h"
#include "boolattice/sublattice.h"

namespace boolattice {

// Evaluates (a_1+...+a_k)/(b_1+...+b_k) <= a_k/b_k exactly. Throws
// kPreconditionViolated unless the lists have equal length k >= 1, all
// entries are positive and 1 < a_1/b_1 <= ... <= a_k/b_k.
bool MediantBound(std::span<const std::int64_t> a,
                  std::span<const std::int64_t> b);

// Ratios reduced to lowest terms; strictly increasing, each > 1, with
// numerator and denominator at least 2.
class ElasticitySpec {
 public:
  // Throws kPreconditionViolated on any violation (ratios are reduced first,
  // so 6/2 is rejected as 3/1).
  explicit ElasticitySpec(std::vector<Rational> ratios);

  // Parses "p1/q1,p2/q2,...".
  static ElasticitySpec Parse(std::string_view text);

  const std::vector<Rational>& ratios() const { return ratios_; }
  Rational max_ratio() const { return ratios_.back(); }

 private:
  std::vector<Rational> ratios_;
};

inline constexpr int kMaxLayers = 4;

struct LayeredSpec {
  int layers = 1;  // N in [1, kMaxLayers]
};

inline constexpr std::size_t TriangularNumber(std::size_t n) {
  return n * (n + 1) / 2;
}

struct BlockLabel {
  // Elasticity family: kind is "row" or "col", block is the 1-based matrix
  // index n and index the 1-based row/column. Layered family: kind is
  // "layer", block is the layer n and index the digit value k.
  std::string kind;
  std::size_t block = 0;
  std::size_t index = 0;

  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

struct ConstructionOutput {
  std::vector<FiniteSet> generators;
  std::vector<BlockLabel> labels;  // parallel to generators
  std::size_t ground_size = 0;
};

ConstructionOutput BuildElasticityLattice(const ElasticitySpec& spec);

// J_n for each n, in order.
std::vector<FiniteSet> ElasticityBlocks(const ElasticitySpec& spec);

struct ElasticityBlockReport {
  FiniteSet block;
  std::size_t factorization_count = 0;
  LengthSet lengths;
};

struct ElasticityVerification {
  std::size_t closure_size = 0;
  std::vector<ElasticityBlockReport> blocks;
  // Elements checked for unique factorization (those containing no J_n).
  std::size_t unique_checked = 0;
  Elasticity elasticity = Elasticity::Finite(Rational(1));
  std::optional<FiniteSet> elasticity_witness;
};

// Closes the construction and checks, through the factorization engine:
// "quarks" - the quarks are exactly the generators;
// "blocks" - each J_n has two factorizations with lengths {a_n, b_n};
// "unique" - every nonempty element containing no J_n factors uniquely;
// "elasticity" - the lattice elasticity equals the largest ratio.
// Throws VerificationFailed naming the first failing claim.
ElasticityVerification VerifyElasticityConstruction(
    const ConstructionOutput& out, const ElasticitySpec& spec,
    std::size_t max_closure = kDefaultMaxClosure);

// Throws kPreconditionViolated unless 1 <= layers <= kMaxLayers.
ConstructionOutput BuildLayeredLattice(const LayeredSpec& spec);

struct LayeredVerification {
  int layers = 0;
  std::size_t closure_size = 0;
  std::vector<Factorization> top_factorizations;
  LengthSet top_lengths;
  std::size_t unique_checked = 0;
  bool lfs = false;
  bool ufs = false;
};

// Checks: "quarks" (quarks = all blocks), "top" (the full ground set has
// exactly one factorization per layer, of lengths 2, 4, ..., 2^N), "unique"
// (every other nonempty element factors uniquely) and "lfs". Throws
// VerificationFailed naming the first failing claim.
LayeredVerification VerifyLayeredLattice(
    const ConstructionOutput& out,
    std::size_t max_closure = kDefaultMaxClosure);

// Named generator families: hfs_triangle, ufs_chain_overlap,
// quarkic_two_components, lfs_not_ufs, not_factorizable, candy_11.
// Throws kUnknownExample for any other name.
ConstructionOutput NamedExample(std::string_view name);
std::vector<std::string_view> NamedExampleNames();

}  // namespace boolattice

#endif  // BOOLATTICE_CONSTRUCTIONS_H_
