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

#include "boolattice/constructions.h"

#include <algorithm>
#include <array>
#include <utility>

#include "boolattice/error.h"
#include "boolattice/factorization.h"

namespace boolattice {

namespace {

[[noreturn]] void Precondition(const std::string& message) {
  throw Error(ErrorKind::kPreconditionViolated, message);
}

std::vector<FiniteSet> Sorted(std::vector<FiniteSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

bool MediantBound(std::span<const std::int64_t> a,
                  std::span<const std::int64_t> b) {
  if (a.empty() || a.size() != b.size()) {
    Precondition("mediant bound needs two lists of equal length k >= 1");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0 || b[i] <= 0) Precondition("entries must be positive");
  }
  if (Rational(a[0], b[0]) <= Rational(1)) {
    Precondition("the first ratio must exceed 1");
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (Rational(a[i], b[i]) < Rational(a[i - 1], b[i - 1])) {
      Precondition("ratios must be non-decreasing");
    }
  }
  std::int64_t sum_a = 0;
  std::int64_t sum_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum_a += a[i];
    sum_b += b[i];
  }
  return Rational(sum_a, sum_b) <= Rational(a.back(), b.back());
}

ElasticitySpec::ElasticitySpec(std::vector<Rational> ratios)
    : ratios_(std::move(ratios)) {
  if (ratios_.empty()) Precondition("at least one ratio is required");
  for (std::size_t i = 0; i < ratios_.size(); ++i) {
    const Rational& q = ratios_[i];
    if (q <= Rational(1)) {
      Precondition("ratio " + q.ToString() + " must exceed 1");
    }
    if (std::min(q.numerator(), q.denominator()) < 2) {
      Precondition("ratio " + q.ToString() +
                   " needs numerator and denominator at least 2");
    }
    if (i > 0 && !(ratios_[i - 1] < q)) {
      Precondition("ratios must be strictly increasing");
    }
  }
}

ElasticitySpec ElasticitySpec::Parse(std::string_view text) {
  std::vector<Rational> ratios;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    auto q = Rational::Parse(item);
    if (!q) Precondition("malformed ratio '" + std::string(item) + "'");
    ratios.push_back(*q);
    start = comma + 1;
  }
  return ElasticitySpec(std::move(ratios));
}

ConstructionOutput BuildElasticityLattice(const ElasticitySpec& spec) {
  ConstructionOutput out;
  Label base = 0;
  for (std::size_t n = 0; n < spec.ratios().size(); ++n) {
    const auto rows = static_cast<Label>(spec.ratios()[n].numerator());
    const auto cols = static_cast<Label>(spec.ratios()[n].denominator());
    // Entry (i, j) of the n-th matrix, row-major, 0-based.
    auto entry = [&](Label i, Label j) { return base + i * cols + j + 1; };
    for (Label i = 0; i < rows; ++i) {
      std::vector<Label> row;
      for (Label j = 0; j < cols; ++j) row.push_back(entry(i, j));
      out.generators.emplace_back(std::move(row));
      out.labels.push_back({"row", n + 1, i + 1});
    }
    for (Label j = 0; j < cols; ++j) {
      std::vector<Label> col;
      for (Label i = 0; i < rows; ++i) col.push_back(entry(i, j));
      out.generators.emplace_back(std::move(col));
      out.labels.push_back({"col", n + 1, j + 1});
    }
    base += rows * cols;
  }
  out.ground_size = base;
  return out;
}

std::vector<FiniteSet> ElasticityBlocks(const ElasticitySpec& spec) {
  std::vector<FiniteSet> out;
  Label base = 0;
  for (const Rational& q : spec.ratios()) {
    const auto size = static_cast<Label>(q.numerator() * q.denominator());
    std::vector<Label> block;
    for (Label x = 1; x <= size; ++x) block.push_back(base + x);
    out.emplace_back(std::move(block));
    base += size;
  }
  return out;
}

ElasticityVerification VerifyElasticityConstruction(
    const ConstructionOutput& out, const ElasticitySpec& spec,
    std::size_t max_closure) {
  const Sublattice s = Close(out.generators, max_closure);
  ElasticityVerification report;
  report.closure_size = s.size();

  if (s.quarks() != Sorted(out.generators)) {
    throw VerificationFailed("quarks",
                             "the quarks differ from the generators");
  }

  const std::vector<FiniteSet> blocks = ElasticityBlocks(spec);
  for (std::size_t n = 0; n < blocks.size(); ++n) {
    const Rational& q = spec.ratios()[n];
    const std::vector<Factorization> z = Factorizations(s, blocks[n]);
    ElasticityBlockReport br{blocks[n], z.size(), {}};
    if (!z.empty()) br.lengths = Lengths(s, blocks[n]);
    const LengthSet expected = {static_cast<std::size_t>(q.denominator()),
                                static_cast<std::size_t>(q.numerator())};
    if (z.size() != 2 || br.lengths != expected) {
      throw VerificationFailed(
          "blocks", "J_" + std::to_string(n + 1) + " has " +
                        std::to_string(z.size()) +
                        " factorizations; expected 2 with lengths {" +
                        std::to_string(q.denominator()) + ", " +
                        std::to_string(q.numerator()) + "}");
    }
    report.blocks.push_back(std::move(br));
  }

  for (const FiniteSet& x : s.elements()) {
    if (x.empty()) continue;
    const bool contains_block =
        std::any_of(blocks.begin(), blocks.end(),
                    [&](const FiniteSet& j) { return j.IsSubsetOf(x); });
    if (contains_block) continue;
    ++report.unique_checked;
    const std::size_t count = Factorizations(s, x).size();
    if (count != 1) {
      throw VerificationFailed("unique", "{" + x.ToString() + "} has " +
                                             std::to_string(count) +
                                             " factorizations");
    }
  }

  const LatticeElasticity rho = ElasticityOfLattice(s);
  report.elasticity = rho.value;
  report.elasticity_witness = rho.witness;
  if (rho.value != Elasticity::Finite(spec.max_ratio())) {
    throw VerificationFailed("elasticity",
                             "lattice elasticity " + rho.value.ToString() +
                                 " differs from the largest ratio " +
                                 spec.max_ratio().ToString());
  }
  return report;
}

ConstructionOutput BuildLayeredLattice(const LayeredSpec& spec) {
  if (spec.layers < 1 || spec.layers > kMaxLayers) {
    Precondition("layer count must be in [1, " + std::to_string(kMaxLayers) +
                 "]");
  }
  const auto layers = static_cast<std::size_t>(spec.layers);
  const std::size_t digits = TriangularNumber(layers);
  const std::uint64_t strings = std::uint64_t{1} << digits;

  ConstructionOutput out;
  out.ground_size = strings;
  for (std::size_t n = 1; n <= layers; ++n) {
    // Segment n occupies digit positions T_{n-1}+1..T_n counted from the
    // most significant digit.
    const std::size_t shift = digits - TriangularNumber(n);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<Label>> blocks(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < strings; ++s) {
      blocks[(s >> shift) & mask].push_back(s + 1);
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      out.generators.emplace_back(std::move(blocks[k]));
      out.labels.push_back({"layer", n, k});
    }
  }
  return out;
}

LayeredVerification VerifyLayeredLattice(const ConstructionOutput& out,
                                         std::size_t max_closure) {
  LayeredVerification report;
  for (const BlockLabel& l : out.labels) {
    report.layers = std::max(report.layers, static_cast<int>(l.block));
  }
  const Sublattice s = Close(out.generators, max_closure);
  report.closure_size = s.size();

  if (s.quarks() != Sorted(out.generators)) {
    throw VerificationFailed("quarks", "the quarks differ from the blocks");
  }

  const FiniteSet& top = s.universe();
  report.top_factorizations = Factorizations(s, top);
  for (int n = 1; n <= report.layers; ++n) {
    std::vector<FiniteSet> layer;
    for (std::size_t i = 0; i < out.generators.size(); ++i) {
      if (out.labels[i].block == static_cast<std::size_t>(n)) {
        layer.push_back(out.generators[i]);
      }
    }
    Factorization f{Sorted(std::move(layer))};
    const bool found =
        std::find(report.top_factorizations.begin(),
                  report.top_factorizations.end(),
                  f) != report.top_factorizations.end();
    if (!found) {
      throw VerificationFailed(
          "top", "layer " + std::to_string(n) +
                     " is not a factorization of the ground set");
    }
    report.top_lengths.push_back(std::size_t{1} << n);
  }
  if (report.top_factorizations.size() !=
      static_cast<std::size_t>(report.layers)) {
    throw VerificationFailed(
        "top", "the ground set has " +
                   std::to_string(report.top_factorizations.size()) +
                   " factorizations; expected " +
                   std::to_string(report.layers));
  }

  for (const FiniteSet& x : s.elements()) {
    if (x.empty() || x == top) continue;
    ++report.unique_checked;
    const std::size_t count = Factorizations(s, x).size();
    if (count != 1) {
      throw VerificationFailed("unique", "{" + x.ToString() + "} has " +
                                             std::to_string(count) +
                                             " factorizations");
    }
  }

  const ClassificationReport brute = ClassifyBrute(s);
  report.lfs = brute.lfs;
  report.ufs = brute.ufs;
  if (!brute.lfs) {
    throw VerificationFailed("lfs", "the lattice is not length-factorial");
  }
  return report;
}

namespace {

struct NamedFamily {
  std::string_view name;
  std::vector<std::vector<Label>> generators;
};

const std::vector<NamedFamily>& Families() {
  // candy_11 relabels a, a1..a3, b1..b4, c, c1, c2 as 1..11: centers a = 1
  // and c = 9, middles 5..8, leaves 2..4 on a and 10, 11 on c.
  static const std::vector<NamedFamily> kFamilies = {
      {"hfs_triangle", {{1, 2}, {2, 3}, {1, 3}}},
      {"ufs_chain_overlap", {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}}},
      {"quarkic_two_components", {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}}},
      {"lfs_not_ufs", {{1, 2, 3}, {4, 5, 6}, {1, 4}, {2, 5}, {3, 6}}},
      {"not_factorizable", {{1}, {1, 2}}},
      {"candy_11",
       {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {5, 9},
        {6, 9}, {7, 9}, {8, 9}, {9, 10}, {9, 11}}},
  };
  return kFamilies;
}

}  // namespace

ConstructionOutput NamedExample(std::string_view name) {
  for (const NamedFamily& family : Families()) {
    if (family.name != name) continue;
    ConstructionOutput out;
    for (std::size_t i = 0; i < family.generators.size(); ++i) {
      out.generators.emplace_back(family.generators[i]);
      out.labels.push_back({std::string(name), 1, i + 1});
    }
    out.ground_size = UnionOf(out.generators).size();
    return out;
  }
  throw Error(ErrorKind::kUnknownExample,
              "no example named '" + std::string(name) + "'");
}

std::vector<std::string_view> NamedExampleNames() {
  std::vector<std::string_view> out;
  for (const NamedFamily& family : Families()) out.push_back(family.name);
  return out;
}

}  // namespace boolattice
