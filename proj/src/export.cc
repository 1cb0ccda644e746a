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

#include "boolattice/export.h"

#include <array>
#include <set>
#include <sstream>
#include <string_view>

#include "boolattice/structure_graphs.h"
#include "json.hpp"

namespace boolattice {

namespace {

using nlohmann::ordered_json;

constexpr std::array<std::string_view, 8> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
    "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

std::string_view ColorFor(std::size_t component) {
  return kPalette[component % kPalette.size()];
}

ordered_json FactorizationJson(const Factorization& f) {
  ordered_json out = ordered_json::array();
  for (const FiniteSet& q : f.quarks) out.push_back(q.ToString());
  return out;
}

std::string_view MethodName(ClassificationMethod m) {
  return m == ClassificationMethod::kBrute ? "brute" : "structural";
}

}  // namespace

std::string ReportToJson(const ClassificationReport& report) {
  ordered_json j;
  j["method"] = MethodName(report.method);
  j["factorizable"] = report.factorizable;
  j["ffs"] = report.ffs;
  j["ufs"] = report.ufs;
  j["hfs"] = report.hfs;
  j["lfs"] = report.lfs;
  j["elasticity"] =
      report.elasticity ? report.elasticity->ToJsonString() : "unknown";
  j["elasticity_witness"] =
      report.elasticity_witness
          ? ordered_json(report.elasticity_witness->ToString())
          : ordered_json(nullptr);
  ordered_json witnesses = ordered_json::object();
  for (const auto& [flag, w] : report.witnesses) {
    ordered_json entry;
    entry["element"] = w.element.ToString();
    entry["factorizations"] = ordered_json::array();
    for (const Factorization& f : w.factorizations) {
      entry["factorizations"].push_back(FactorizationJson(f));
    }
    witnesses[std::string(FlagName(flag))] = std::move(entry);
  }
  j["witnesses"] = std::move(witnesses);
  return j.dump(2) + "\n";
}

std::string QuarkicGraphToDot(const Sublattice& s) {
  const QuarkicGraph qg = BuildQuarkicGraph(s);
  const Graph& g = qg.graph;
  std::ostringstream out;
  out << "graph quarkic {\n";
  out << "  node [shape=box, style=filled];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  q" << g.label(v) << " [label=\"" << qg.quarks[g.label(v)]
        << "\", fillcolor=\"" << ColorFor(g.component_of(v)) << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  q" << g.label(u) << " -- q" << g.label(v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string PairingGraphToDot(const Sublattice& s) {
  const PairingGraph pg = BuildPairingGraph(s);
  const Graph& g = pg.graph;
  std::set<Graph::VertexLabel> centers;
  for (const auto& comp : g.components()) {
    const ComponentShape shape = ClassifyComponent(pg, g.ToLabels(comp));
    if (shape.kind == ShapeKind::kCandyGraph) {
      centers.insert(shape.centers.begin(), shape.centers.end());
    }
  }
  std::ostringstream out;
  out << "graph pairing {\n";
  out << "  node [shape=circle, style=filled];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Graph::VertexLabel l = g.label(v);
    out << "  v" << l << " [label=\"" << l << "\", fillcolor=\""
        << ColorFor(g.component_of(v)) << "\"";
    if (centers.contains(l)) out << ", shape=doublecircle, xlabel=\"center\"";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  v" << g.label(u) << " -- v" << g.label(v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string HasseToDot(const Sublattice& s) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << "  n" << i << " [label=\"" << s.elements()[i] << "\"];\n";
  }
  for (const CoverRelation& c : Covers(s)) {
    out << "  n" << *s.IndexOf(c.lower) << " -> n" << *s.IndexOf(c.upper)
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace boolattice
