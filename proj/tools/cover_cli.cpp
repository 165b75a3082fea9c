#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cover/error.hpp"
#include "cover/pipeline.hpp"
#include "cover/spec_io.hpp"

namespace {

using cover::Error;
using cover::ErrorKind;
using json = nlohmann::ordered_json;

int exitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return 3;
    case ErrorKind::InvalidCover:
      return 1;
    default:
      return 2;  // pipeline integrity failure
  }
}

// Built-in names may be used anywhere a path is accepted.
cover::CoverSpecInput loadInputOrBuiltin(const std::string& path) {
  for (const std::string& name : cover::builtinExampleNames())
    if (path == name || path == name + ".json")
      if (!std::filesystem::exists(path)) return cover::parseInput(cover::builtinExample(name));
  return cover::loadInput(path);
}

json intJson(const cover::Int& v) {
  // Entries are tiny in practice, but cpp_int has no implicit conversion.
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json matrixJson(const cover::IMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(intJson(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrixText(const cover::IMat& m, const std::string& indent) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j);
    out << "]\n";
  }
  return out.str();
}

const char* typeName(cover::BasisType t) {
  switch (t) {
    case cover::BasisType::Free:
      return "1";
    case cover::BasisType::Torsion:
      return "2";
    case cover::BasisType::Translate:
      return "3";
    case cover::BasisType::SubgroupFixed:
      return "4";
    default:
      return "unclassified";
  }
}

const char* blockKindName(cover::BlockKind k) {
  switch (k) {
    case cover::BlockKind::Permutation:
      return "permutation";
    case cover::BlockKind::TorsionCompanion:
      return "torsion-companion";
    case cover::BlockKind::SignedPermutation:
      return "signed-permutation";
    default:
      return "general";
  }
}

std::string stepKindName(cover::StepKind k) {
  switch (k) {
    case cover::StepKind::RemoveTrivialRelator:
      return "remove-trivial-relator";
    case cover::StepKind::EliminateGenerator:
      return "eliminate-generator";
    case cover::StepKind::Substitute:
      return "substitute";
    default:
      return "combine";
  }
}

json traceJson(const cover::SimplificationTrace& trace,
               const cover::AlphabetPtr& alphabet) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step{{"kind", stepKindName(s.kind)}, {"relator_index", s.relatorIndex}};
    if (s.generator >= 0) {
      step["generator"] = alphabet->name(s.generator);
      step["replacement"] = s.replacement.str();
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

json witnessJson(const cover::BasisClassification& e, const cover::FiniteGroup& g) {
  json w = json::object();
  if (e.torsion) {
    w["element"] = g.elementName(e.torsion->element);
    w["order"] = e.torsion->order;
  } else if (e.translate) {
    w["origin"] = e.translate->origin;
    w["power"] = e.translate->power;
  } else if (e.subgroupFixed) {
    json stab = json::array();
    for (auto q : e.subgroupFixed->stabilizer) stab.push_back(g.elementName(q));
    w["stabilizer"] = std::move(stab);
    json signs = json::object();
    for (auto [q, s] : e.subgroupFixed->signPattern)
      signs[g.elementName(cover::GroupElement{q})] = s;
    w["signs"] = std::move(signs);
  }
  return w;
}

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    out << text;
  }
};

cover::Stage parseStage(const std::string& s) {
  if (s == "rs") return cover::Stage::RS;
  if (s == "tietze") return cover::Stage::Tietze;
  if (s == "homology") return cover::Stage::Homology;
  if (s == "full") return cover::Stage::Full;
  throw Error(ErrorKind::Parse, "unknown stage '" + s + "'");
}

int runValidate(const std::string& path) {
  cover::CoverSpecInput input = loadInputOrBuiltin(path);
  auto report =
      cover::CoverSpec::validate(*input.group, input.signature, input.vector);
  if (report.valid()) {
    std::cout << "valid; genus "
              << cover::riemannHurwitzGenus(input.signature, input.group->order())
              << "\n";
    return 0;
  }
  std::cout << "invalid:\n";
  for (const auto& f : report.failures) std::cout << "  - " << f << "\n";
  return 1;
}

json buildReport(const cover::ParsedSpec& parsed, const cover::Analysis& a,
                 cover::Stage stage, const std::vector<int>& basisOrder) {
  const cover::CoverSpec& spec = *a.spec;
  const cover::FiniteGroup& g = spec.group();

  json report;
  report["spec"] = parsed.raw;
  report["genus"] = spec.genus();
  report["group_order"] = g.order();

  json transversal = json::array();
  for (const cover::Word& w : a.rewriting->transversal().reps())
    transversal.push_back(w.str());
  report["transversal"] = std::move(transversal);

  json sgens = json::array();
  for (const auto& sg : a.rewriting->generators()) {
    json row{{"coset", g.elementName(cover::GroupElement{sg.coset})},
             {"generator", spec.alphabet()->name(sg.gen)},
             {"value", sg.value.str()},
             {"trivial", sg.trivial}};
    if (!sg.trivial) row["name"] = a.presentation.alphabet->name(sg.kernelIndex);
    sgens.push_back(std::move(row));
  }
  report["schreier_generators"] = std::move(sgens);

  json pres{{"generators", a.presentation.alphabet->names()},
            {"relators", json::array()}};
  for (const cover::Word& r : a.presentation.relators)
    pres["relators"].push_back(r.str());
  report["presentation"] = std::move(pres);
  if (!a.trace) return report;

  const auto& trace = *a.trace;
  json survivors = json::array();
  for (int s : trace.survivors)
    survivors.push_back(a.presentation.alphabet->name(s));
  json relators = json::array();
  for (const cover::Word& r : trace.final.relators) relators.push_back(r.str());
  report["tietze"] = json{{"steps", static_cast<int>(trace.steps.size())},
                          {"canonical", trace.canonical},
                          {"partial", trace.partial},
                          {"generators", std::move(survivors)},
                          {"relators", std::move(relators)}};
  if (!a.basis) return report;

  report["rank"] = a.basis->rank;
  json basisNames = json::array();
  for (int i : a.basis->generators)
    basisNames.push_back(a.presentation.alphabet->name(i));
  report["basis_generators"] = std::move(basisNames);

  json matrices = json::object();
  for (int q = 0; q < g.order(); ++q)
    matrices[g.elementName(cover::GroupElement{q})] =
        matrixJson(a.action->matrices[static_cast<size_t>(q)]);
  report["matrices"] = std::move(matrices);
  if (stage != cover::Stage::Full) return report;

  json fixed = json::object();
  for (const auto& row : a.lefschetz->rows)
    fixed[g.elementName(row.element)] = json{{"oracle", row.oracleCount},
                                             {"lefschetz", intJson(row.lefschetzCount)},
                                             {"consistent", row.consistent}};
  report["fixed_points"] = std::move(fixed);
  report["lefschetz_consistent"] = a.lefschetz->allConsistent;

  json elems = json::array();
  for (const auto& e : a.classification->elements)
    elems.push_back(json{{"type", typeName(e.type)},
                         {"orbit", e.orbit},
                         {"witness", witnessJson(e, g)}});
  json cls{{"elements", std::move(elems)},
           {"suggested_order", a.classification->suggestedOrder},
           {"complete", a.classification->complete}};
  if (!a.classification->complete && !a.classification->diagnostic.empty())
    cls["diagnostic"] = a.classification->diagnostic;
  report["classification"] = std::move(cls);

  if (a.classification->complete) {
    const std::vector<int>* order = basisOrder.empty() ? nullptr : &basisOrder;
    json blocks = json::object();
    for (int q = 1; q < g.order(); ++q) {
      auto br = cover::blockReport(*a.action, *a.classification,
                                   cover::GroupElement{q}, order);
      json list = json::array();
      for (const auto& b : br.blocks)
        list.push_back(json{{"kind", blockKindName(b.kind)},
                            {"size", b.size},
                            {"entries", matrixJson(b.entries)}});
      blocks[g.elementName(cover::GroupElement{q})] =
          json{{"order", br.order}, {"blocks", std::move(list)}};
    }
    report["block_reports"] = std::move(blocks);
  }
  return report;
}

std::string textReport(const cover::ParsedSpec& parsed, const cover::Analysis& a,
                       cover::Stage stage, const std::vector<int>& basisOrder) {
  const cover::CoverSpec& spec = *a.spec;
  const cover::FiniteGroup& g = spec.group();
  std::ostringstream out;

  out << "genus: " << spec.genus() << "\n";
  out << "group order: " << g.order() << "\n";
  out << "transversal: ";
  const auto& reps = a.rewriting->transversal().reps();
  for (size_t i = 0; i < reps.size(); ++i)
    out << (i ? ", " : "") << reps[i].str();
  out << "\n";

  int nontrivial = 0;
  for (const auto& sg : a.rewriting->generators())
    if (!sg.trivial) ++nontrivial;
  out << "schreier generators: " << nontrivial << " nontrivial\n";
  if (stage == cover::Stage::RS) {
    for (const auto& sg : a.rewriting->generators()) {
      out << "  S{" << g.elementName(cover::GroupElement{sg.coset}) << ","
          << spec.alphabet()->name(sg.gen) << "} = " << sg.value.str();
      if (sg.trivial) out << "  (trivial)";
      out << "\n";
    }
  }
  out << "presentation: " << a.presentation.alphabet->size() << " generators, "
      << a.presentation.relators.size() << " relators\n";
  if (stage == cover::Stage::RS) {
    for (const cover::Word& r : a.presentation.relators)
      out << "  " << r.str() << "\n";
    return out.str();
  }

  const auto& trace = *a.trace;
  out << "tietze: " << trace.steps.size() << " steps, "
      << trace.survivors.size() << " generators, "
      << trace.final.relators.size() << " relator(s), "
      << (trace.canonical ? "canonical" : (trace.partial ? "partial" : "reduced"))
      << "\n";
  out << "final presentation: <";
  for (size_t i = 0; i < trace.survivors.size(); ++i)
    out << (i ? ", " : " ") << a.presentation.alphabet->name(trace.survivors[i]);
  out << " |";
  for (size_t i = 0; i < trace.final.relators.size(); ++i)
    out << (i ? ", " : " ") << trace.final.relators[i].str();
  out << " >\n";
  if (stage == cover::Stage::Tietze) return out.str();

  out << "H1 rank: " << a.basis->rank << " (torsion-free)\n";
  out << "matrices (column i = image of basis element i):\n";
  for (int q = 0; q < g.order(); ++q) {
    out << "  M[" << g.elementName(cover::GroupElement{q}) << "]:\n";
    out << matrixText(a.action->matrices[static_cast<size_t>(q)], "    ");
  }
  if (stage == cover::Stage::Homology) return out.str();

  out << "fixed points:\n";
  for (const auto& row : a.lefschetz->rows)
    out << "  " << g.elementName(row.element) << ": oracle " << row.oracleCount
        << ", lefschetz " << row.lefschetzCount << ", "
        << (row.consistent ? "consistent" : "INCONSISTENT") << "\n";
  out << "lefschetz consistent: " << (a.lefschetz->allConsistent ? "yes" : "no")
      << "\n";

  out << "classification:\n";
  for (size_t i = 0; i < a.classification->elements.size(); ++i) {
    const auto& e = a.classification->elements[i];
    out << "  basis " << i << ": type " << typeName(e.type) << ", orbit "
        << e.orbit;
    if (e.torsion)
      out << ", witness " << g.elementName(e.torsion->element) << " of order "
          << e.torsion->order;
    if (e.translate)
      out << ", translate of basis " << e.translate->origin << " by power "
          << e.translate->power;
    if (e.subgroupFixed) {
      out << ", stabilizer {";
      for (size_t j = 0; j < e.subgroupFixed->stabilizer.size(); ++j)
        out << (j ? ", " : "") << g.elementName(e.subgroupFixed->stabilizer[j]);
      out << "}";
    }
    if (!e.diagnostic.empty()) out << " (" << e.diagnostic << ")";
    out << "\n";
  }
  out << "suggested order:";
  for (int i : a.classification->suggestedOrder) out << " " << i;
  out << "\n";

  if (a.classification->complete) {
    const std::vector<int>* order = basisOrder.empty() ? nullptr : &basisOrder;
    out << "block structure (rows = images, reordered basis):\n";
    for (int q = 1; q < g.order(); ++q) {
      auto br = cover::blockReport(*a.action, *a.classification,
                                   cover::GroupElement{q}, order);
      out << "  " << g.elementName(cover::GroupElement{q}) << ":";
      for (size_t i = 0; i < br.blocks.size(); ++i)
        out << (i ? ", " : " ") << br.blocks[i].size << "x" << br.blocks[i].size
            << " " << blockKindName(br.blocks[i].kind);
      out << "\n";
    }
  }
  return out.str();
}

int runAnalyze(const std::string& path, const std::string& stageName,
               const std::string& format, const std::string& dumpTrace,
               std::vector<int> basisOrder, const Output& output) {
  cover::Stage stage = parseStage(stageName);
  cover::ParsedSpec parsed = cover::buildSpec(loadInputOrBuiltin(path));
  if (basisOrder.empty()) basisOrder = parsed.basisOrder;

  cover::Analysis a = cover::analyze(parsed.spec, parsed.transversal, stage);

  if (!dumpTrace.empty() && a.trace) {
    std::ofstream out(dumpTrace);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + dumpTrace + "'");
    out << traceJson(*a.trace, a.presentation.alphabet).dump(2) << "\n";
  }

  if (format == "json") {
    output.write(buildReport(parsed, a, stage, basisOrder).dump(2) + "\n");
  } else if (format == "text") {
    output.write(textReport(parsed, a, stage, basisOrder));
  } else {
    throw Error(ErrorKind::Parse, "unknown format '" + format + "'");
  }
  return 0;
}

int runExamples(const std::string& name, const Output& output) {
  if (name.empty()) {
    std::ostringstream out;
    for (const std::string& n : cover::builtinExampleNames())
      out << n << ": " << cover::builtinExampleSummary(n) << "\n";
    output.write(out.str());
    return 0;
  }
  output.write(cover::builtinExample(name).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branched-cover homology pipeline: Reidemeister-Schreier "
               "rewriting, Tietze simplification, homology action, adapted "
               "basis classification"};
  app.require_subcommand(1);

  std::string path, stage = "full", format = "text", dumpTrace, exampleName, outPath;
  std::vector<int> basisOrder;

  auto* validate = app.add_subcommand("validate", "Validate a cover specification");
  validate->add_option("path", path, "Specification file or built-in name")->required();

  auto* analyze = app.add_subcommand("analyze", "Run the pipeline");
  analyze->add_option("path", path, "Specification file or built-in name")->required();
  analyze->add_option("--stage", stage, "rs|tietze|homology|full");
  analyze->add_option("--format", format, "text|json");
  analyze->add_option("--dump-trace", dumpTrace, "Write the Tietze replay log (JSON)");
  analyze->add_option("--basis-order", basisOrder, "Basis permutation for block reports")
      ->delimiter(',');
  analyze->add_option("-o,--output", outPath, "Write the report to a file");

  auto* examples = app.add_subcommand("examples", "List or materialize built-in examples");
  examples->add_option("name", exampleName, "Built-in example name");
  examples->add_option("-o,--output", outPath, "Write the spec to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    Output output{outPath};
    if (validate->parsed()) return runValidate(path);
    if (analyze->parsed())
      return runAnalyze(path, stage, format, dumpTrace, basisOrder, output);
    return runExamples(exampleName, output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCode(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
