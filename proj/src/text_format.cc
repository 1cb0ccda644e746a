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

#include "boolattice/text_format.h"

#include <charconv>
#include <unordered_set>

#include "boolattice/error.h"

namespace boolattice {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Parses one line; `line_no` is 1-based and columns are 1-based byte
// offsets.
FiniteSet ParseLine(std::string_view line, std::size_t line_no) {
  std::vector<Label> values;
  std::unordered_set<Label> seen;
  std::size_t i = 0;
  while (i < line.size()) {
    if (IsSpace(line[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < line.size() && !IsSpace(line[end])) ++end;
    const std::string_view token = line.substr(i, end - i);
    const std::size_t column = i + 1;
    if (token == "{}") {
      if (!values.empty()) {
        throw ParseError(line_no, column, "'{}' must appear alone");
      }
      i = end;
      while (i < line.size() && IsSpace(line[i])) ++i;
      if (i != line.size()) {
        throw ParseError(line_no, i + 1, "'{}' must appear alone");
      }
      return FiniteSet();
    }
    if (token.front() == '-') {
      throw ParseError(line_no, column,
                       "negative integer '" + std::string(token) + "'");
    }
    Label value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(line_no, column,
                       "integer '" + std::string(token) + "' out of range");
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, column,
                       "expected a positive integer, got '" +
                           std::string(token) + "'");
    }
    if (value == 0) {
      throw ParseError(line_no, column, "elements must be positive");
    }
    if (!seen.insert(value).second) {
      throw ParseError(line_no, column,
                       "duplicate element " + std::to_string(value));
    }
    values.push_back(value);
    i = end;
  }
  return FiniteSet(std::move(values));
}

bool IsSkipped(std::string_view line) {
  for (char c : line) {
    if (IsSpace(c)) continue;
    return c == '#';
  }
  return true;
}

}  // namespace

std::vector<FiniteSet> ParseGenerators(std::string_view text) {
  std::vector<FiniteSet> out;
  std::unordered_set<FiniteSet> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (IsSkipped(line)) continue;
    FiniteSet set = ParseLine(line, line_no);
    if (seen.insert(set).second) out.push_back(std::move(set));
  }
  return out;
}

FiniteSet ParseSet(std::string_view text) { return ParseLine(text, 1); }

std::string SerializeGenerators(std::span<const FiniteSet> generators) {
  std::string out;
  for (const FiniteSet& g : generators) {
    out += g.ToString();
    out += '\n';
  }
  return out;
}

}  // namespace boolattice
