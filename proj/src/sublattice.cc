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

#include "boolattice/sublattice.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "bits.h"
#include "boolattice/error.h"

namespace boolattice {

using internal::Bits;
using internal::BitsHash;
using internal::LabelIndex;

std::optional<std::size_t> Sublattice::IndexOf(const FiniteSet& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Sublattice::RequireElement(const FiniteSet& x) const {
  if (!Contains(x)) {
    throw Error(ErrorKind::kElementNotInLattice,
                "{" + x.ToString() + "} is not an element of the lattice");
  }
}

Sublattice Close(std::span<const FiniteSet> generators,
                 std::size_t max_closure) {
  if (max_closure == 0) {
    throw Error(ErrorKind::kPreconditionViolated,
                "max_closure must be positive");
  }
  Sublattice s;
  s.max_closure_ = max_closure;
  {
    std::unordered_set<FiniteSet> seen;
    for (const FiniteSet& g : generators) {
      if (g.empty()) continue;
      if (seen.insert(g).second) s.generators_.push_back(g);
    }
  }
  s.universe_ = UnionOf(s.generators_);

  const LabelIndex index(s.universe_);
  std::vector<Bits> gen_bits;
  gen_bits.reserve(s.generators_.size());
  for (const FiniteSet& g : s.generators_) gen_bits.push_back(index.ToBits(g));

  // Every element is a union of generators, so extending each discovered
  // element by one generator at a time reaches the whole closure.
  std::vector<Bits> found;
  std::unordered_set<Bits, BitsHash> seen;
  found.emplace_back(index.size());
  seen.insert(found.back());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const Bits& g : gen_bits) {
      Bits u = found[i] | g;
      if (seen.contains(u)) continue;
      if (found.size() >= max_closure) {
        throw Error(ErrorKind::kClosureCapExceeded,
                    "closure exceeds max_closure=" +
                        std::to_string(max_closure) + " (reached " +
                        std::to_string(found.size()) +
                        " elements before stopping)");
      }
      seen.insert(u);
      found.push_back(std::move(u));
    }
  }

  s.elements_.reserve(found.size());
  for (const Bits& b : found) s.elements_.push_back(index.FromBits(b));
  std::sort(s.elements_.begin(), s.elements_.end());
  s.index_.reserve(s.elements_.size());
  for (std::size_t i = 0; i < s.elements_.size(); ++i) {
    s.index_.emplace(s.elements_[i], i);
  }

  // A nonempty element strictly below a generator g is a union of generators
  // strictly below g, so the minimal elements are the minimal generators.
  for (std::size_t i = 0; i < s.generators_.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < s.generators_.size() && minimal; ++j) {
      if (i != j && gen_bits[j].IsSubsetOf(gen_bits[i])) minimal = false;
    }
    if (minimal) s.quarks_.push_back(s.generators_[i]);
  }
  std::sort(s.quarks_.begin(), s.quarks_.end());
  return s;
}

std::vector<FiniteSet> Quarks(const Sublattice& s) { return s.quarks(); }

FactorizabilityResult IsFactorizable(const Sublattice& s) {
  for (const FiniteSet& x : s.elements()) {
    if (x.empty()) continue;
    FiniteSet covered;
    for (const FiniteSet& q : s.quarks()) {
      if (q.IsSubsetOf(x)) covered = covered.Union(q);
    }
    if (covered != x) return {false, x};
  }
  return {};
}

std::vector<FiniteSet> Downset(const Sublattice& s, const FiniteSet& x) {
  s.RequireElement(x);
  std::vector<FiniteSet> out;
  for (const FiniteSet& e : s.elements()) {
    if (e.IsSubsetOf(x)) out.push_back(e);
  }
  return out;
}

std::vector<CoverRelation> Covers(const Sublattice& s) {
  const LabelIndex index(s.universe());
  std::vector<Bits> gen_bits;
  for (const FiniteSet& g : s.generators()) gen_bits.push_back(index.ToBits(g));

  std::vector<CoverRelation> out;
  for (const FiniteSet& lower : s.elements()) {
    // If lower < y then y contains a generator g not below lower, and
    // lower < lower ∪ g <= y; so the upper covers of `lower` are the minimal
    // sets of the form lower ∪ g.
    const Bits lower_bits = index.ToBits(lower);
    std::vector<Bits> candidates;
    for (const Bits& g : gen_bits) {
      if (g.IsSubsetOf(lower_bits)) continue;
      Bits c = lower_bits | g;
      if (std::find(candidates.begin(), candidates.end(), c) ==
          candidates.end()) {
        candidates.push_back(std::move(c));
      }
    }
    std::vector<FiniteSet> uppers;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
        if (i != j && candidates[j].IsSubsetOf(candidates[i])) minimal = false;
      }
      if (minimal) uppers.push_back(index.FromBits(candidates[i]));
    }
    std::sort(uppers.begin(), uppers.end());
    for (FiniteSet& u : uppers) out.push_back({lower, std::move(u)});
  }
  return out;
}

FiniteSet Meet(const Sublattice& s, const FiniteSet& x, const FiniteSet& y) {
  s.RequireElement(x);
  s.RequireElement(y);
  FiniteSet out;
  for (const FiniteSet& e : s.elements()) {
    if (e.IsSubsetOf(x) && e.IsSubsetOf(y)) out = out.Union(e);
  }
  return out;
}

}  // namespace boolattice
