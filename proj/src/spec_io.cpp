#include "cover/spec_io.hpp"

#include <fstream>

#include "cover/error.hpp"

namespace cover {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::Parse, "field '" + field + "': " + what);
}

int requireInt(const json& doc, const std::string& field, int min, int max) {
  if (!doc.contains(field)) fail(field, "missing");
  const json& v = doc.at(field);
  if (!v.is_number_integer()) fail(field, "expected an integer");
  long long n = v.get<long long>();
  if (n < min || n > max)
    fail(field, "out of range [" + std::to_string(min) + ", " + std::to_string(max) + "]");
  return static_cast<int>(n);
}

FiniteGroup parseGroup(const json& g) {
  if (!g.is_object()) fail("group", "expected an object");
  if (!g.contains("type") || !g.at("type").is_string()) fail("group.type", "missing or not a string");
  const std::string type = g.at("type").get<std::string>();
  if (type == "abelian") {
    if (!g.contains("invariants") || !g.at("invariants").is_array())
      fail("group.invariants", "expected an array of integers >= 2");
    std::vector<int> inv;
    for (const json& v : g.at("invariants")) {
      if (!v.is_number_integer() || v.get<long long>() < 2)
        fail("group.invariants", "entries must be integers >= 2");
      inv.push_back(v.get<int>());
    }
    return FiniteGroup::fromAbelianInvariants(inv);  // empty list = trivial group
  }
  if (type == "permutation") {
    int degree = requireInt(g, "degree", 1, 64);
    if (!g.contains("generators") || !g.at("generators").is_array())
      fail("group.generators", "expected an array of permutations");
    std::vector<std::vector<int>> gens;
    for (const json& p : g.at("generators")) {
      if (!p.is_array()) fail("group.generators", "each generator must be an array");
      std::vector<int> perm;
      for (const json& v : p) {
        if (!v.is_number_integer()) fail("group.generators", "permutation entries must be integers");
        perm.push_back(v.get<int>());
      }
      gens.push_back(std::move(perm));
    }
    return FiniteGroup::fromPermutations(degree, gens);
  }
  fail("group.type", "unknown type '" + type + "' (expected abelian or permutation)");
}

std::vector<GroupElement> parseElementWords(const FiniteGroup& group, const json& arr,
                                            const std::string& field) {
  if (!arr.is_array()) fail(field, "expected an array of element words");
  std::vector<GroupElement> out;
  for (const json& w : arr) {
    if (!w.is_string()) fail(field, "entries must be strings (words in group generators)");
    try {
      out.push_back(group.elementFromWord(w.get<std::string>()));
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }
  return out;
}

}  // namespace

CoverSpecInput parseInput(const json& doc) {
  if (!doc.is_object()) fail("<document>", "expected a JSON object");
  CoverSpecInput input;
  input.raw = doc;
  input.signature.quotientGenus = requireInt(doc, "quotient_genus", 0, 1000);

  if (!doc.contains("branch_orders") || !doc.at("branch_orders").is_array())
    fail("branch_orders", "missing or not an array");
  for (const json& v : doc.at("branch_orders")) {
    if (!v.is_number_integer() || v.get<long long>() < 2)
      fail("branch_orders", "branch orders must be integers >= 2");
    input.signature.branchOrders.push_back(v.get<int>());
  }

  if (!doc.contains("group")) fail("group", "missing");
  input.group = parseGroup(doc.at("group"));

  if (!doc.contains("generating_vector") || !doc.at("generating_vector").is_object())
    fail("generating_vector", "missing or not an object");
  const json& gv = doc.at("generating_vector");
  input.vector.a = parseElementWords(*input.group, gv.value("a", json::array()),
                                     "generating_vector.a");
  input.vector.b = parseElementWords(*input.group, gv.value("b", json::array()),
                                     "generating_vector.b");
  input.vector.x = parseElementWords(*input.group, gv.value("x", json::array()),
                                     "generating_vector.x");

  if (doc.contains("transversal")) {
    if (!doc.at("transversal").is_array())
      fail("transversal", "expected an array of words");
    for (const json& w : doc.at("transversal")) {
      if (!w.is_string()) fail("transversal", "entries must be strings");
      input.transversalWords.push_back(w.get<std::string>());
    }
  }
  if (doc.contains("basis_order")) {
    if (!doc.at("basis_order").is_array())
      fail("basis_order", "expected an array of integers");
    for (const json& v : doc.at("basis_order")) {
      if (!v.is_number_integer()) fail("basis_order", "entries must be integers");
      input.basisOrder.push_back(v.get<int>());
    }
  }
  return input;
}

CoverSpecInput loadInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return parseInput(doc);
}

ParsedSpec buildSpec(const CoverSpecInput& input) {
  CoverSpec spec(*input.group, input.signature, input.vector);
  std::vector<Word> transversal;
  for (const std::string& w : input.transversalWords)
    transversal.push_back(Word::parse(spec.alphabet(), w));
  return ParsedSpec{std::move(spec), std::move(transversal), input.basisOrder, input.raw};
}

std::vector<std::string> builtinExampleNames() {
  return {"example1", "example2", "example3"};
}

std::string builtinExampleSummary(const std::string& name) {
  if (name == "example1")
    return "Z6 acting freely on a genus-7 surface, quotient genus 2, unbranched";
  if (name == "example2")
    return "Z2 x Z2 on a genus-1 surface, signature (0; 2,2,2,2)";
  if (name == "example3")
    return "Z2 x Z3 on a genus-4 surface, signature (0; 2,2,3,3,3)";
  throw Error(ErrorKind::Parse, "unknown example '" + name + "'");
}

nlohmann::ordered_json builtinExample(const std::string& name) {
  if (name == "example1")
    return json{{"quotient_genus", 2},
                {"branch_orders", json::array()},
                {"group", {{"type", "abelian"}, {"invariants", {6}}}},
                {"generating_vector",
                 {{"a", {"1", "1"}}, {"b", {"1", "h"}}, {"x", json::array()}}}};
  if (name == "example2")
    return json{{"quotient_genus", 0},
                {"branch_orders", {2, 2, 2, 2}},
                {"group", {{"type", "abelian"}, {"invariants", {2, 2}}}},
                {"generating_vector",
                 {{"a", json::array()}, {"b", json::array()}, {"x", {"g", "g", "h", "h"}}}},
                {"transversal", {"1", "b", "d", "b d"}}};
  if (name == "example3")
    return json{{"quotient_genus", 0},
                {"branch_orders", {2, 2, 3, 3, 3}},
                {"group", {{"type", "abelian"}, {"invariants", {2, 3}}}},
                {"generating_vector",
                 {{"a", json::array()}, {"b", json::array()}, {"x", {"g", "g", "h", "h", "h"}}}},
                {"transversal", {"1", "d", "d d", "b", "d b", "d d b"}}};
  throw Error(ErrorKind::Parse,
              "unknown example '" + name + "' (valid: example1, example2, example3)");
}

}  // namespace cover
