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

// Dense bitset over a compressed ground universe. Internal to the library.

#ifndef BOOLATTICE_SRC_BITS_H_
#define BOOLATTICE_SRC_BITS_H_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "boolattice/finite_set.h"

namespace boolattice::internal {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

  void Set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool Test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  Bits& operator|=(const Bits& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  bool IsSubsetOf(const Bits& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  bool Intersects(const Bits& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & other.words_[w]) return true;
    }
    return false;
  }

  std::size_t Count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  bool None() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  template <typename F>
  void ForEach(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t w : b.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Maps the labels of a fixed universe to dense bit positions.
class LabelIndex {
 public:
  explicit LabelIndex(FiniteSet universe) : universe_(std::move(universe)) {}

  std::size_t size() const { return universe_.size(); }

  // Labels outside the universe are ignored.
  Bits ToBits(const FiniteSet& s) const {
    Bits b(universe_.size());
    auto labels = universe_.elements();
    for (Label x : s.elements()) {
      auto it = std::lower_bound(labels.begin(), labels.end(), x);
      if (it != labels.end() && *it == x) {
        b.Set(static_cast<std::size_t>(it - labels.begin()));
      }
    }
    return b;
  }

  FiniteSet FromBits(const Bits& b) const {
    std::vector<Label> out;
    out.reserve(b.Count());
    auto labels = universe_.elements();
    b.ForEach([&](std::size_t i) { out.push_back(labels[i]); });
    return FiniteSet(std::move(out));
  }

 private:
  FiniteSet universe_;
};

}  // namespace boolattice::internal

#endif  // BOOLATTICE_SRC_BITS_H_
