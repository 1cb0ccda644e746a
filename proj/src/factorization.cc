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

#include "boolattice/factorization.h"

#include <algorithm>
#include <utility>

#include "bits.h"
#include "boolattice/error.h"
#include "boolattice/structure_graphs.h"

namespace boolattice {

using internal::Bits;
using internal::LabelIndex;

std::string_view FlagName(Flag flag) {
  switch (flag) {
    case Flag::kFactorizable:
      return "factorizable";
    case Flag::kFfs:
      return "ffs";
    case Flag::kUfs:
      return "ufs";
    case Flag::kHfs:
      return "hfs";
    case Flag::kLfs:
      return "lfs";
  }
  return "?";
}

namespace {

// Enumerates irredundant covers of a ground set of size `n` by the given
// quark bitsets. Each branch covers the smallest uncovered element; a quark
// tried (and abandoned) for that element is excluded from the rest of that
// subtree, so every cover is produced exactly once. A branch is cut as soon
// as some chosen quark loses its last private element, since adding quarks
// can never restore it.
class CoverSearch {
 public:
  CoverSearch(std::size_t n, const std::vector<Bits>& quarks)
      : quarks_(quarks),
        count_(n, 0),
        holders_(n),
        excluded_(quarks.size(), false) {
    for (std::size_t i = 0; i < quarks.size(); ++i) {
      quarks[i].ForEach([&](std::size_t e) { holders_[e].push_back(i); });
    }
  }

  std::vector<std::vector<std::size_t>> Run() {
    Descend();
    return std::move(results_);
  }

 private:
  void Descend() {
    auto uncovered = std::find(count_.begin(), count_.end(), 0);
    if (uncovered == count_.end()) {
      std::vector<std::size_t> z = chosen_;
      std::sort(z.begin(), z.end());
      results_.push_back(std::move(z));
      return;
    }
    const auto e = static_cast<std::size_t>(uncovered - count_.begin());
    std::vector<std::size_t> tried;
    for (std::size_t i : holders_[e]) {
      if (excluded_[i]) continue;
      Add(i);
      if (Irredundant()) Descend();
      Remove(i);
      excluded_[i] = true;
      tried.push_back(i);
    }
    for (std::size_t i : tried) excluded_[i] = false;
  }

  void Add(std::size_t i) {
    chosen_.push_back(i);
    quarks_[i].ForEach([&](std::size_t e) { ++count_[e]; });
  }

  void Remove(std::size_t i) {
    chosen_.pop_back();
    quarks_[i].ForEach([&](std::size_t e) { --count_[e]; });
  }

  bool Irredundant() const {
    for (std::size_t c : chosen_) {
      bool has_private = false;
      quarks_[c].ForEach([&](std::size_t e) {
        if (count_[e] == 1) has_private = true;
      });
      if (!has_private) return false;
    }
    return true;
  }

  const std::vector<Bits>& quarks_;
  std::vector<int> count_;
  std::vector<std::vector<std::size_t>> holders_;
  std::vector<bool> excluded_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> results_;
};

}  // namespace

std::vector<Factorization> Factorizations(const Sublattice& s,
                                          const FiniteSet& x) {
  if (x.empty()) {
    throw Error(ErrorKind::kPreconditionViolated,
                "the minimum has no factorizations");
  }
  s.RequireElement(x);

  std::vector<const FiniteSet*> below;
  for (const FiniteSet& q : s.quarks()) {
    if (q.IsSubsetOf(x)) below.push_back(&q);
  }
  const LabelIndex local(x);
  std::vector<Bits> bits;
  bits.reserve(below.size());
  for (const FiniteSet* q : below) bits.push_back(local.ToBits(*q));

  std::vector<Factorization> out;
  for (const auto& z : CoverSearch(x.size(), bits).Run()) {
    Factorization f;
    f.quarks.reserve(z.size());
    for (std::size_t i : z) f.quarks.push_back(*below[i]);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LengthSet Lengths(const Sublattice& s, const FiniteSet& x) {
  LengthSet out;
  for (const Factorization& z : Factorizations(s, x)) {
    out.push_back(z.length());
  }
  if (out.empty()) {
    throw Error(ErrorKind::kNotFactorable,
                "{" + x.ToString() + "} is not a union of quarks");
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Elasticity ElasticityOf(const Sublattice& s, const FiniteSet& x) {
  const LengthSet l = Lengths(s, x);
  return Elasticity::Finite(Rational(static_cast<std::int64_t>(l.back()),
                                     static_cast<std::int64_t>(l.front())));
}

LatticeElasticity ElasticityOfLattice(const Sublattice& s) {
  const FactorizabilityResult f = IsFactorizable(s);
  if (!f.factorizable) {
    throw Error(ErrorKind::kNotFactorizable,
                "{" + f.witness->ToString() + "} is not a union of quarks");
  }
  LatticeElasticity out;
  for (const FiniteSet& x : s.elements()) {
    if (x.empty()) continue;
    Elasticity e = ElasticityOf(s, x);
    if (!out.witness || e > out.value) {
      out.value = e;
      out.witness = x;
    }
  }
  return out;
}

ClassificationReport ClassifyBrute(const Sublattice& s) {
  ClassificationReport report;
  report.method = ClassificationMethod::kBrute;
  const FactorizabilityResult f = IsFactorizable(s);
  report.factorizable = f.factorizable;
  report.ffs = f.factorizable;
  if (!f.factorizable) {
    report.witnesses[Flag::kFactorizable] = Witness{*f.witness, {}};
    report.witnesses[Flag::kFfs] = Witness{*f.witness, {}};
  }

  Rational best(1);
  for (const FiniteSet& x : s.elements()) {
    if (x.empty()) continue;
    const std::vector<Factorization> z = Factorizations(s, x);
    if (z.empty()) continue;

    if (report.ufs && z.size() > 1) {
      report.ufs = false;
      report.witnesses[Flag::kUfs] = Witness{x, {z[0], z[1]}};
    }
    if (report.hfs && z.front().length() != z.back().length()) {
      report.hfs = false;
      auto other = std::find_if(z.begin(), z.end(), [&](const auto& f) {
        return f.length() != z.front().length();
      });
      report.witnesses[Flag::kHfs] = Witness{x, {z.front(), *other}};
    }
    if (report.lfs) {
      for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        if (z[i].length() == z[i + 1].length()) {
          report.lfs = false;
          report.witnesses[Flag::kLfs] = Witness{x, {z[i], z[i + 1]}};
          break;
        }
      }
    }
    Rational rho(static_cast<std::int64_t>(z.back().length()),
                 static_cast<std::int64_t>(z.front().length()));
    if (!report.elasticity_witness || rho > best) {
      best = rho;
      report.elasticity_witness = x;
    }
  }
  report.elasticity = Elasticity::Finite(best);
  return report;
}

std::vector<DecompositionPiece> Decompose(const Sublattice& s,
                                          const FiniteSet& x) {
  const FactorizabilityResult f = IsFactorizable(s);
  if (!f.factorizable) {
    throw Error(ErrorKind::kNotFactorizable,
                "{" + f.witness->ToString() + "} is not a union of quarks");
  }
  if (x.empty()) {
    throw Error(ErrorKind::kPreconditionViolated,
                "cannot decompose the minimum");
  }
  s.RequireElement(x);

  const QuarkicGraph qg = BuildQuarkicGraph(s);
  std::vector<DecompositionPiece> out;
  const auto& components = qg.graph.components();
  for (std::size_t c = 0; c < components.size(); ++c) {
    FiniteSet piece;
    for (std::size_t v : components[c]) {
      const FiniteSet& q = qg.quarks[qg.graph.label(v)];
      if (q.IsSubsetOf(x)) piece = piece.Union(q);
    }
    if (!piece.empty()) out.push_back({c, std::move(piece)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.piece.min() < b.piece.min();
  });
  return out;
}

ProductCheck FactorizationProductCheck(const Sublattice& s,
                                       const FiniteSet& x) {
  const std::vector<DecompositionPiece> pieces = Decompose(s, x);
  const QuarkicGraph qg = BuildQuarkicGraph(s);
  ProductCheck out;
  out.total = Factorizations(s, x).size();
  std::size_t product = 1;
  for (const DecompositionPiece& p : pieces) {
    std::vector<FiniteSet> gens;
    for (std::size_t v : qg.graph.components()[p.component]) {
      gens.push_back(qg.quarks[qg.graph.label(v)]);
    }
    const Sublattice sub = Close(gens, s.max_closure());
    const std::size_t n = Factorizations(sub, p.piece).size();
    out.per_piece.push_back(n);
    product *= n;
  }
  out.holds = out.total == product;
  return out;
}

}  // namespace boolattice
