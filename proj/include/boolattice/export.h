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

// Byte-stable JSON and Graphviz DOT renderings of reports, graphs and Hasse
// diagrams.

#ifndef BOOLATTICE_EXPORT_H_
#define BOOLATTICE_EXPORT_H_

#include <string>

#include "boolattice/report.h"
#include "boolattice/sublattice.h"

namespace boolattice {

// Keys: method, factorizable, ffs, ufs, hfs, lfs, elasticity ("p/q", "inf",
// or "unknown" when not computed), elasticity_witness (canonical set string
// or null), witnesses (flag name -> {element, factorizations}). Each
// factorization is an array of canonical set strings. Ends with a newline.
std::string ReportToJson(const ClassificationReport& report);

// Quarkic graph: one node per quark labeled by its set string, filled by
// component index.
std::string QuarkicGraphToDot(const Sublattice& s);

// Pairing graph: one node per integer, filled by component index; centers of
// candy components are drawn as double circles. Throws kQuarkTooLarge as
// BuildPairingGraph does.
std::string PairingGraphToDot(const Sublattice& s);

// Cover relation of the whole closure, drawn bottom to top.
std::string HasseToDot(const Sublattice& s);

}  // namespace boolattice

#endif  // BOOLATTICE_EXPORT_H_
