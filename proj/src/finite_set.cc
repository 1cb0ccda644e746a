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

#include "boolattice/finite_set.h"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <utility>

#include "boolattice/error.h"

namespace boolattice {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kClosureCapExceeded:
      return "ClosureCapExceeded";
    case ErrorKind::kElementNotInLattice:
      return "ElementNotInLattice";
    case ErrorKind::kNotFactorable:
      return "NotFactorable";
    case ErrorKind::kNotFactorizable:
      return "NotFactorizable";
    case ErrorKind::kQuarkTooLarge:
      return "QuarkTooLarge";
    case ErrorKind::kNotAComponent:
      return "NotAComponent";
    case ErrorKind::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorKind::kVerificationFailed:
      return "VerificationFailed";
    case ErrorKind::kUnknownExample:
      return "UnknownExample";
    case ErrorKind::kParseError:
      return "ParseError";
  }
  return "Error";
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& reason)
    : Error(ErrorKind::kParseError, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

FiniteSet::FiniteSet(std::initializer_list<Label> labels)
    : FiniteSet(std::vector<Label>(labels)) {}

FiniteSet::FiniteSet(std::vector<Label> labels) : elements_(std::move(labels)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!elements_.empty() && elements_.front() == 0) {
    throw Error(ErrorKind::kPreconditionViolated,
                "ground labels must be positive integers");
  }
}

bool FiniteSet::Contains(Label label) const {
  return std::binary_search(elements_.begin(), elements_.end(), label);
}

bool FiniteSet::IsSubsetOf(const FiniteSet& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool FiniteSet::IsProperSubsetOf(const FiniteSet& other) const {
  return size() < other.size() && IsSubsetOf(other);
}

bool FiniteSet::Intersects(const FiniteSet& other) const {
  auto a = elements_.begin();
  auto b = other.elements_.begin();
  while (a != elements_.end() && b != other.elements_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

FiniteSet FiniteSet::Union(const FiniteSet& other) const {
  std::vector<Label> out;
  out.reserve(size() + other.size());
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(out));
  return FiniteSet(SortedTag{}, std::move(out));
}

FiniteSet FiniteSet::Intersection(const FiniteSet& other) const {
  std::vector<Label> out;
  std::set_intersection(elements_.begin(), elements_.end(),
                        other.elements_.begin(), other.elements_.end(),
                        std::back_inserter(out));
  return FiniteSet(SortedTag{}, std::move(out));
}

FiniteSet FiniteSet::Difference(const FiniteSet& other) const {
  std::vector<Label> out;
  std::set_difference(elements_.begin(), elements_.end(),
                      other.elements_.begin(), other.elements_.end(),
                      std::back_inserter(out));
  return FiniteSet(SortedTag{}, std::move(out));
}

std::string FiniteSet::ToString() const {
  if (elements_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) os << ' ';
    os << elements_[i];
  }
  return os.str();
}

std::strong_ordering operator<=>(const FiniteSet& a, const FiniteSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
      b.elements_.end());
}

std::ostream& operator<<(std::ostream& os, const FiniteSet& set) {
  return os << set.ToString();
}

FiniteSet UnionOf(std::span<const FiniteSet> sets) {
  FiniteSet out;
  for (const FiniteSet& s : sets) out = out.Union(s);
  return out;
}

std::size_t FiniteSetHash::operator()(const FiniteSet& set) const noexcept {
  // FNV-1a over the labels.
  std::uint64_t h = 1469598103934665603ULL;
  for (Label x : set.elements()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace boolattice
