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

// Generator text format: one generator per line as whitespace-separated
// positive integers. Blank lines and lines starting with '#' are skipped;
// "{}" denotes the empty set.

#ifndef BOOLATTICE_TEXT_FORMAT_H_
#define BOOLATTICE_TEXT_FORMAT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolattice/finite_set.h"

namespace boolattice {

// Deduplicated generators in input order. Throws ParseError on non-integer
// tokens, zero or negative values, out-of-range values and repeated
// integers within a line.
std::vector<FiniteSet> ParseGenerators(std::string_view text);

// Parses a single set in the same token syntax ("1 2 3" or "{}").
FiniteSet ParseSet(std::string_view text);

// One canonical set per line, newline-terminated.
std::string SerializeGenerators(std::span<const FiniteSet> generators);

}  // namespace boolattice

#endif  // BOOLATTICE_TEXT_FORMAT_H_
