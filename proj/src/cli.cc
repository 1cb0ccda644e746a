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

#include "boolattice/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "boolattice/constructions.h"
#include "boolattice/error.h"
#include "boolattice/export.h"
#include "boolattice/factorization.h"
#include "boolattice/structure_graphs.h"
#include "boolattice/sublattice.h"
#include "boolattice/text_format.h"
#include "json.hpp"

namespace boolattice::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file = "-";
  std::string element;
  bool json = false;
  bool structural = false;
  bool brute = false;
  std::size_t max_closure = kDefaultMaxClosure;
  std::string format = "dot";
  std::string kind = "quarkic";
  std::string out_path;
  std::string target;
  std::string ratios;
  int layers = 0;
  std::string name;
};

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << contents;
}

std::string SidecarPath(const std::string& path) {
  return path + ".meta.json";
}

std::vector<FiniteSet> LoadGenerators(const Options& opts, std::istream& in) {
  if (opts.file == "-") {
    return ParseGenerators(
        std::string(std::istreambuf_iterator<char>(in), {}));
  }
  return ParseGenerators(ReadFile(opts.file));
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

std::string FormatFactorization(const Factorization& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.quarks.size(); ++i) {
    if (i > 0) out += " | ";
    out += f.quarks[i].ToString();
  }
  return out + "]";
}

ordered_json FactorizationJson(const Factorization& f) {
  ordered_json out = ordered_json::array();
  for (const FiniteSet& q : f.quarks) out.push_back(q.ToString());
  return out;
}

ordered_json SetsJson(std::span<const FiniteSet> sets) {
  ordered_json out = ordered_json::array();
  for (const FiniteSet& x : sets) out.push_back(x.ToString());
  return out;
}

void EmitJson(std::ostream& out, const ordered_json& j) {
  out << j.dump(2) << "\n";
}

bool StructuralApplies(const Sublattice& s) {
  try {
    BuildPairingGraph(s);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kQuarkTooLarge) throw;
    return false;
  }
}

std::string TextFlagName(Flag flag) {
  if (flag == Flag::kFactorizable) return "factorizable";
  std::string name(FlagName(flag));
  for (char& c : name) c = static_cast<char>(std::toupper(c));
  return name;
}

int Classify(const Options& opts, std::istream& in, std::ostream& out) {
  const std::vector<FiniteSet> gens = LoadGenerators(opts, in);
  const Sublattice s = Close(gens, opts.max_closure);
  const ClassificationReport r =
      opts.structural ? ClassifyStructural(s) : ClassifyBrute(s);
  if (opts.json) {
    out << ReportToJson(r);
    return kExitOk;
  }
  out << "method: " << (opts.structural ? "structural" : "brute") << "\n";
  out << "generators: " << s.generators().size() << "\n";
  out << "closure size: " << s.size() << "\n";
  out << "quarks: " << s.quarks().size() << "\n";
  out << "factorizable: " << YesNo(r.factorizable) << "\n";
  out << "FFS: " << YesNo(r.ffs) << "\n";
  out << "UFS: " << YesNo(r.ufs) << "\n";
  out << "HFS: " << YesNo(r.hfs) << "\n";
  out << "LFS: " << YesNo(r.lfs) << "\n";
  out << "elasticity: "
      << (r.elasticity ? r.elasticity->ToString() : std::string("unknown"))
      << "\n";
  if (r.elasticity_witness) {
    out << "elasticity witness: " << *r.elasticity_witness << "\n";
  }
  for (const auto& [flag, w] : r.witnesses) {
    out << TextFlagName(flag) << " witness: " << w.element;
    if (w.factorizations.empty()) {
      out << " (not a union of quarks)";
    } else {
      out << " ->";
      for (std::size_t i = 0; i < w.factorizations.size(); ++i) {
        out << (i == 0 ? " " : ", ") << FormatFactorization(w.factorizations[i]);
      }
    }
    out << "\n";
  }
  if (!opts.structural && StructuralApplies(s)) {
    out << "note: every non-isolated quark has two elements; "
           "--structural decides UFS/HFS/LFS from the pairing graph\n";
  }
  return kExitOk;
}

int ListQuarks(const Options& opts, std::istream& in, std::ostream& out) {
  const Sublattice s = Close(LoadGenerators(opts, in), opts.max_closure);
  if (opts.json) {
    ordered_json j;
    j["quarks"] = SetsJson(s.quarks());
    EmitJson(out, j);
    return kExitOk;
  }
  for (const FiniteSet& q : s.quarks()) out << q << "\n";
  return kExitOk;
}

int Factorize(const Options& opts, std::istream& in, std::ostream& out) {
  const Sublattice s = Close(LoadGenerators(opts, in), opts.max_closure);
  const FiniteSet x = ParseSet(opts.element);
  const std::vector<Factorization> z = Factorizations(s, x);
  LengthSet lengths;
  for (const Factorization& f : z) {
    if (lengths.empty() || lengths.back() != f.length()) {
      lengths.push_back(f.length());
    }
  }
  if (opts.json) {
    ordered_json j;
    j["element"] = x.ToString();
    j["factorizations"] = ordered_json::array();
    for (const Factorization& f : z) {
      j["factorizations"].push_back(FactorizationJson(f));
    }
    j["lengths"] = lengths;
    EmitJson(out, j);
    return kExitOk;
  }
  out << "element: " << x << "\n";
  out << "factorizations: " << z.size() << "\n";
  for (const Factorization& f : z) {
    out << "  " << f.length() << ": " << FormatFactorization(f) << "\n";
  }
  out << "lengths:";
  if (lengths.empty()) out << " none";
  for (std::size_t l : lengths) out << " " << l;
  out << "\n";
  return kExitOk;
}

int ElasticityCommand(const Options& opts, std::istream& in,
                      std::ostream& out) {
  const Sublattice s = Close(LoadGenerators(opts, in), opts.max_closure);
  Elasticity value = Elasticity::Finite(Rational(1));
  std::optional<FiniteSet> witness;
  if (!opts.element.empty()) {
    witness = ParseSet(opts.element);
    value = ElasticityOf(s, *witness);
  } else {
    const LatticeElasticity rho = ElasticityOfLattice(s);
    value = rho.value;
    witness = rho.witness;
  }
  if (opts.json) {
    ordered_json j;
    j["elasticity"] = value.ToJsonString();
    j["witness"] =
        witness ? ordered_json(witness->ToString()) : ordered_json(nullptr);
    EmitJson(out, j);
    return kExitOk;
  }
  out << "elasticity: " << value.ToString() << "\n";
  if (witness) out << "witness: " << *witness << "\n";
  return kExitOk;
}

ordered_json GraphJson(const Sublattice& s, const std::string& kind) {
  ordered_json j;
  j["kind"] = kind;
  ordered_json edges = ordered_json::array();
  ordered_json components = ordered_json::array();
  if (kind == "quarkic") {
    const QuarkicGraph qg = BuildQuarkicGraph(s);
    j["vertices"] = SetsJson(qg.quarks);
    for (const auto& [u, v] : qg.graph.edges()) {
      edges.push_back({qg.graph.label(u), qg.graph.label(v)});
    }
    for (const auto& comp : qg.graph.components()) {
      components.push_back(qg.graph.ToLabels(comp));
    }
    j["edges"] = std::move(edges);
    j["components"] = std::move(components);
    j["isolated"] = SetsJson(IsolatedQuarks(s));
    return j;
  }
  const PairingGraph pg = BuildPairingGraph(s);
  j["vertices"] = pg.graph.labels();
  for (const auto& [u, v] : pg.graph.edges()) {
    edges.push_back({pg.graph.label(u), pg.graph.label(v)});
  }
  for (const auto& comp : pg.graph.components()) {
    const ComponentShape shape = ClassifyComponent(pg, pg.graph.ToLabels(comp));
    ordered_json c;
    c["vertices"] = shape.vertices;
    c["shape"] = ShapeKindName(shape.kind);
    if (!shape.centers.empty()) c["centers"] = shape.centers;
    if (shape.forbidden) c["forbidden"] = ForbiddenKindName(*shape.forbidden);
    c["ufs"] = ShapeIsUfs(shape.kind);
    c["hfs"] = ShapeIsHfs(shape.kind);
    components.push_back(std::move(c));
  }
  j["edges"] = std::move(edges);
  j["components"] = std::move(components);
  return j;
}

int GraphCommand(const Options& opts, std::istream& in, std::ostream& out) {
  const Sublattice s = Close(LoadGenerators(opts, in), opts.max_closure);
  if (opts.format == "json") {
    EmitJson(out, GraphJson(s, opts.kind));
  } else if (opts.kind == "quarkic") {
    out << QuarkicGraphToDot(s);
  } else {
    out << PairingGraphToDot(s);
  }
  return kExitOk;
}

int HasseCommand(const Options& opts, std::istream& in, std::ostream& out) {
  const Sublattice s = Close(LoadGenerators(opts, in), opts.max_closure);
  if (opts.format == "dot") {
    out << HasseToDot(s);
    return kExitOk;
  }
  ordered_json j;
  j["elements"] = SetsJson(s.elements());
  ordered_json covers = ordered_json::array();
  for (const CoverRelation& c : Covers(s)) {
    covers.push_back({c.lower.ToString(), c.upper.ToString()});
  }
  j["covers"] = std::move(covers);
  EmitJson(out, j);
  return kExitOk;
}

ordered_json LabelsJson(const std::vector<BlockLabel>& labels) {
  ordered_json out = ordered_json::array();
  for (const BlockLabel& l : labels) {
    out.push_back({{"kind", l.kind}, {"block", l.block}, {"index", l.index}});
  }
  return out;
}

// Reads PATH.meta.json and checks it describes `construction`.
ordered_json LoadSidecar(const Options& opts, const std::string& construction) {
  if (opts.file == "-") {
    throw UsageError("verify " + construction +
                     " needs --file PATH with a PATH.meta.json sidecar");
  }
  const std::string path = SidecarPath(opts.file);
  ordered_json meta = ordered_json::parse(ReadFile(path), nullptr, false);
  if (meta.is_discarded() || !meta.is_object() ||
      meta.value("construction", "") != construction) {
    throw UsageError("'" + path + "' is not a " + construction +
                     " metadata file");
  }
  return meta;
}

ConstructionOutput OutputFromFiles(const Options& opts, std::istream& in,
                                   const ordered_json& meta) {
  ConstructionOutput out;
  out.generators = LoadGenerators(opts, in);
  try {
    for (const auto& l : meta.at("blocks")) {
      out.labels.push_back({l.at("kind").get<std::string>(),
                            l.at("block").get<std::size_t>(),
                            l.at("index").get<std::size_t>()});
    }
    out.ground_size = meta.at("ground_size").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed metadata: ") + e.what());
  }
  if (out.labels.size() != out.generators.size()) {
    throw UsageError("metadata lists " + std::to_string(out.labels.size()) +
                     " blocks for " + std::to_string(out.generators.size()) +
                     " generators");
  }
  return out;
}

int VerifyElasticity(const Options& opts, std::istream& in,
                     std::ostream& out) {
  const ordered_json meta = LoadSidecar(opts, "elasticity");
  std::string ratios;
  for (const auto& r : meta.value("ratios", ordered_json::array())) {
    if (!ratios.empty()) ratios += ",";
    ratios += r.is_string() ? r.get<std::string>() : r.dump();
  }
  const ElasticitySpec spec = ElasticitySpec::Parse(ratios);
  const ConstructionOutput built = OutputFromFiles(opts, in, meta);
  const ElasticityVerification v =
      VerifyElasticityConstruction(built, spec, opts.max_closure);
  if (opts.json) {
    ordered_json j;
    j["construction"] = "elasticity";
    j["verified"] = true;
    j["closure_size"] = v.closure_size;
    ordered_json blocks = ordered_json::array();
    for (const ElasticityBlockReport& b : v.blocks) {
      blocks.push_back({{"block", b.block.ToString()},
                        {"factorizations", b.factorization_count},
                        {"lengths", b.lengths}});
    }
    j["blocks"] = std::move(blocks);
    j["unique_checked"] = v.unique_checked;
    j["elasticity"] = v.elasticity.ToJsonString();
    EmitJson(out, j);
    return kExitOk;
  }
  out << "verify elasticity: ok\n";
  out << "closure size: " << v.closure_size << "\n";
  for (std::size_t n = 0; n < v.blocks.size(); ++n) {
    const ElasticityBlockReport& b = v.blocks[n];
    out << "J_" << n + 1 << ": " << b.block.size() << " elements, "
        << b.factorization_count << " factorizations, lengths";
    for (std::size_t l : b.lengths) out << " " << l;
    out << "\n";
  }
  out << "unique factorization: " << v.unique_checked
      << " elements checked\n";
  out << "elasticity: " << v.elasticity.ToString()
      << " (largest ratio; realizes the supremum over the truncation)\n";
  return kExitOk;
}

int VerifyLayered(const Options& opts, std::istream& in, std::ostream& out) {
  const ordered_json meta = LoadSidecar(opts, "layered");
  const ConstructionOutput built = OutputFromFiles(opts, in, meta);
  const LayeredVerification v = VerifyLayeredLattice(built, opts.max_closure);
  if (opts.json) {
    ordered_json j;
    j["construction"] = "layered";
    j["verified"] = true;
    j["layers"] = v.layers;
    j["closure_size"] = v.closure_size;
    j["top_factorizations"] = v.top_factorizations.size();
    j["top_lengths"] = v.top_lengths;
    j["unique_checked"] = v.unique_checked;
    j["lfs"] = v.lfs;
    j["ufs"] = v.ufs;
    EmitJson(out, j);
    return kExitOk;
  }
  out << "verify layered: ok\n";
  out << "layers: " << v.layers << "\n";
  out << "closure size: " << v.closure_size << "\n";
  out << "top factorizations: " << v.top_factorizations.size()
      << ", lengths";
  for (std::size_t l : v.top_lengths) out << " " << l;
  out << "\n";
  out << "unique factorization: " << v.unique_checked
      << " elements checked\n";
  out << "LFS: " << YesNo(v.lfs) << "\n";
  out << "UFS: " << YesNo(v.ufs) << "\n";
  return kExitOk;
}

int VerifyProduct(const Options& opts, std::istream& in, std::ostream& out) {
  if (opts.element.empty()) {
    throw UsageError("verify product needs --element");
  }
  const Sublattice s = Close(LoadGenerators(opts, in), opts.max_closure);
  const FiniteSet x = ParseSet(opts.element);
  const ProductCheck check = FactorizationProductCheck(s, x);
  std::string product;
  for (std::size_t i = 0; i < check.per_piece.size(); ++i) {
    if (i > 0) product += " x ";
    product += std::to_string(check.per_piece[i]);
  }
  if (product.empty()) product = "1";
  if (!check.holds) {
    throw VerificationFailed("product", std::to_string(check.total) +
                                            " factorizations but the pieces "
                                            "give " + product);
  }
  if (opts.json) {
    ordered_json j;
    j["element"] = x.ToString();
    j["verified"] = true;
    j["total"] = check.total;
    j["per_piece"] = check.per_piece;
    EmitJson(out, j);
    return kExitOk;
  }
  out << "verify product: ok\n";
  out << "factorizations: " << check.total << " = " << product << "\n";
  return kExitOk;
}

// Writes generators and, given a path, the metadata sidecar next to them.
void EmitConstruction(const Options& opts, const ConstructionOutput& built,
                      ordered_json meta, std::ostream& out) {
  const std::string text = SerializeGenerators(built.generators);
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  meta["ground_size"] = built.ground_size;
  meta["generators"] = built.generators.size();
  meta["blocks"] = LabelsJson(built.labels);
  WriteFile(opts.out_path, text);
  WriteFile(SidecarPath(opts.out_path), meta.dump(2) + "\n");
  out << "wrote " << opts.out_path << " (" << built.generators.size()
      << " generators) and " << SidecarPath(opts.out_path) << "\n";
}

int Construct(const Options& opts, std::ostream& out) {
  ordered_json meta;
  meta["construction"] = opts.target;
  if (opts.target == "elasticity") {
    if (opts.ratios.empty()) {
      throw UsageError("construct elasticity needs --ratios p1/q1,...");
    }
    const ElasticitySpec spec = ElasticitySpec::Parse(opts.ratios);
    ordered_json ratios = ordered_json::array();
    for (const Rational& q : spec.ratios()) {
      ratios.push_back(q.ToFractionString());
    }
    meta["ratios"] = std::move(ratios);
    EmitConstruction(opts, BuildElasticityLattice(spec), std::move(meta), out);
    return kExitOk;
  }
  if (opts.layers == 0) throw UsageError("construct layered needs --layers N");
  meta["layers"] = opts.layers;
  EmitConstruction(opts, BuildLayeredLattice(LayeredSpec{opts.layers}),
                   std::move(meta), out);
  return kExitOk;
}

int Example(const Options& opts, std::ostream& out) {
  if (opts.name.empty()) {
    for (std::string_view name : NamedExampleNames()) out << name << "\n";
    return kExitOk;
  }
  ordered_json meta;
  meta["construction"] = "example";
  meta["name"] = opts.name;
  EmitConstruction(opts, NamedExample(opts.name), std::move(meta), out);
  return kExitOk;
}

void AddInputOptions(CLI::App* sub, Options& opts) {
  sub->add_option("--file", opts.file, "Generator file, or - for stdin");
  sub->add_option("--max-closure", opts.max_closure,
                  "Abort when the closure exceeds this many elements");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app("Finitely generated Boolean sublattices: closure, "
               "factorization and classification.",
               "boolattice");
  app.require_subcommand(1);

  CLI::App* classify = app.add_subcommand(
      "classify", "Report FFS/UFS/HFS/LFS flags and elasticity");
  AddInputOptions(classify, opts);
  classify->add_flag("--json", opts.json, "Emit the JSON report");
  auto* structural = classify->add_flag(
      "--structural", opts.structural,
      "Decide from the pairing graph (quarks of size <= 2 only)");
  auto* brute = classify->add_flag("--brute", opts.brute,
                                   "Enumerate every element (default)");
  structural->excludes(brute);

  CLI::App* quarks = app.add_subcommand("quarks", "List the quarks");
  AddInputOptions(quarks, opts);
  quarks->add_flag("--json", opts.json, "Emit JSON");

  CLI::App* factorize =
      app.add_subcommand("factorize", "Enumerate the factorizations of an element");
  AddInputOptions(factorize, opts);
  factorize->add_option("--element", opts.element, "Element, e.g. \"1 2 3\"")
      ->required();
  factorize->add_flag("--json", opts.json, "Emit JSON");

  CLI::App* elasticity = app.add_subcommand(
      "elasticity", "Elasticity of the lattice or of one element");
  AddInputOptions(elasticity, opts);
  elasticity->add_option("--element", opts.element, "Element, e.g. \"1 2 3\"");
  elasticity->add_flag("--json", opts.json, "Emit JSON");

  CLI::App* graph =
      app.add_subcommand("graph", "Draw the quarkic or pairing graph");
  AddInputOptions(graph, opts);
  graph->add_option("--kind", opts.kind, "quarkic or pairing")
      ->check(CLI::IsMember({"quarkic", "pairing"}));
  graph->add_option("--format", opts.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* hasse = app.add_subcommand("hasse", "Draw the Hasse diagram");
  AddInputOptions(hasse, opts);
  hasse->add_option("--format", opts.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Check a construction's claims by brute force");
  verify->add_option("target", opts.target, "elasticity, layered or product")
      ->required()
      ->check(CLI::IsMember({"elasticity", "layered", "product"}));
  AddInputOptions(verify, opts);
  verify->add_option("--element", opts.element,
                     "Element for the product check");
  verify->add_flag("--json", opts.json, "Emit JSON");

  CLI::App* construct =
      app.add_subcommand("construct", "Build an explicit lattice family");
  construct->add_option("family", opts.target, "elasticity or layered")
      ->required()
      ->check(CLI::IsMember({"elasticity", "layered"}));
  construct->add_option("--ratios", opts.ratios, "p1/q1,p2/q2,...");
  construct->add_option("--layers", opts.layers, "Layer count N")
      ->check(CLI::Range(1, kMaxLayers));
  construct->add_option("--out", opts.out_path,
                        "Write PATH and PATH.meta.json instead of stdout");

  CLI::App* example =
      app.add_subcommand("example", "Emit a named generator family");
  example->add_option("name", opts.name, "Example name; omit to list");
  example->add_option("--out", opts.out_path,
                      "Write PATH and PATH.meta.json instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "boolattice: " << e.what() << " (see boolattice --help)\n";
    return kExitUsageError;
  }
  try {
    if (classify->parsed()) return Classify(opts, in, out);
    if (quarks->parsed()) return ListQuarks(opts, in, out);
    if (factorize->parsed()) return Factorize(opts, in, out);
    if (elasticity->parsed()) return ElasticityCommand(opts, in, out);
    if (graph->parsed()) return GraphCommand(opts, in, out);
    if (hasse->parsed()) return HasseCommand(opts, in, out);
    if (verify->parsed()) {
      if (opts.target == "elasticity") return VerifyElasticity(opts, in, out);
      if (opts.target == "layered") return VerifyLayered(opts, in, out);
      return VerifyProduct(opts, in, out);
    }
    if (construct->parsed()) return Construct(opts, out);
    return Example(opts, out);
  } catch (const UsageError& e) {
    err << "boolattice: " << e.what() << " (see boolattice --help)\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "boolattice: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace boolattice::cli
