#ifndef COVER_SPEC_IO_HPP
#define COVER_SPEC_IO_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cover/orbifold.hpp"
#include "cover/schreier.hpp"

namespace cover {

// Raw document contents before semantic validation: signature, group,
// generating vector, and the optional transversal / basis-order extras.
// Parsing throws ErrorKind::Parse only; vector validity is checked later.
struct CoverSpecInput {
  OrbifoldSignature signature;
  std::optional<FiniteGroup> group;
  GeneratingVector vector;
  std::vector<std::string> transversalWords;  // empty = default BFS
  std::vector<int> basisOrder;                // empty = suggested order
  nlohmann::ordered_json raw;                 // echoed in reports
};

CoverSpecInput parseInput(const nlohmann::ordered_json& doc);
CoverSpecInput loadInput(const std::string& path);

// Validated spec plus the parsed transversal override, ready for the
// pipeline. Construction throws ErrorKind::InvalidCover on a bad vector.
struct ParsedSpec {
  CoverSpec spec;
  std::vector<Word> transversal;  // empty = default BFS
  std::vector<int> basisOrder;
  nlohmann::ordered_json raw;
};

ParsedSpec buildSpec(const CoverSpecInput& input);

std::vector<std::string> builtinExampleNames();
// One-line description of a built-in example.
std::string builtinExampleSummary(const std::string& name);
// The document itself; throws ErrorKind::Parse for unknown names.
nlohmann::ordered_json builtinExample(const std::string& name);

}  // namespace cover

#endif
