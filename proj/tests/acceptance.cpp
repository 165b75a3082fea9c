// Acceptance checks for the full pipeline: the three worked covers, the
// randomized property suite, the SNF oracle, and Tietze soundness. Prints one
// PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cover/error.hpp"
#include "cover/pipeline.hpp"
#include "cover/spec_io.hpp"

using namespace cover;

namespace {

int gFailures = 0;
std::vector<std::string> gNotes;

void require(bool ok, const std::string& what) {
  if (!ok) {
    ++gFailures;
    gNotes.push_back(what);
  }
}

double runCriterion(int number, const std::string& title,
                    const std::function<void()>& body) {
  gFailures = 0;
  gNotes.clear();
  auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    ++gFailures;
    gNotes.push_back(std::string("unexpected exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  std::ostringstream line;
  line << (gFailures ? "FAIL" : "PASS") << " criterion " << number << ": "
       << title << " (" << seconds << " s)";
  std::cout << line.str() << "\n";
  for (size_t i = 0; i < gNotes.size() && i < 10; ++i)
    std::cout << "    " << gNotes[i] << "\n";
  if (gNotes.size() > 10)
    std::cout << "    ... " << (gNotes.size() - 10) << " more\n";
  return seconds;
}

int totalFailures = 0;

Analysis analyzeExample(const char* name) {
  ParsedSpec ps = buildSpec(parseInput(builtinExample(name)));
  return analyze(ps.spec, ps.transversal, Stage::Full);
}

IMat scaledIdentity(int n, int s) {
  IMat m = IMat::identity(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
  ParsedSpec ps = buildSpec(parseInput(builtinExample("example1")));
  require(ps.spec.genus() == 7, "genus should be 7");

  Transversal t = Transversal::bfs(ps.spec);
  Word d = Word::parse(ps.spec.alphabet(), "d");
  const FiniteGroup& g = ps.spec.group();
  GroupElement h = g.elementFromWord("h");
  GroupElement q = g.identity();
  for (int j = 0; j < 6; ++j) {
    require(t.rep(q) == d.pow(j), "transversal rep should be d^" + std::to_string(j));
    q = g.mul(q, h);
  }

  Analysis a = analyze(ps.spec, {}, Stage::Full);
  require(a.trace->canonical, "canonical surface form should be reached");
  require(a.trace->survivors.size() == 14, "14 surviving generators expected");
  require(a.trace->final.relators.size() == 1 &&
              a.trace->final.relators[0].size() == 28,
          "single relator of length 28 expected");
  require(isCanonicalSurfaceRelator(a.trace->final.relators, a.trace->survivors, 7),
          "relator should pass the canonical-form check");
  require(a.basis->rank == 14, "H1 rank should be 14");

  int free = 0, fixed = 0;
  for (const auto& e : a.classification->elements) {
    if (e.type == BasisType::Free) ++free;
    if (e.type == BasisType::SubgroupFixed) ++fixed;
  }
  require(free == 12 && fixed == 2, "12 type-1 and 2 type-4 elements expected");

  BlockReport report = blockReport(*a.action, *a.classification, h);
  require(report.blocks.size() == 3, "M_h should split into three blocks");
  if (report.blocks.size() == 3) {
    require(report.blocks[0].size == 6 && report.blocks[1].size == 6 &&
                report.blocks[2].size == 2,
            "block sizes should be 6, 6, 2");
    for (const Block& b : report.blocks)
      require(b.kind == BlockKind::Permutation, "every block should be a permutation");
    require(report.blocks[2].entries == IMat::identity(2),
            "the C/D block should be the identity");
  }

  GroupElement hj = h;
  for (int j = 1; j <= 5; ++j) {
    require(2 - a.action->matrix(hj).trace() == 0,
            "2 - trace should vanish for h^" + std::to_string(j));
    require(fixedPointOracle(ps.spec, hj) == 0,
            "oracle should vanish for h^" + std::to_string(j));
    hj = g.mul(hj, h);
  }
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
  ParsedSpec ps = buildSpec(parseInput(builtinExample("example2")));
  require(ps.spec.genus() == 1, "genus should be 1");

  Transversal t = Transversal::fromWords(ps.spec, ps.transversal);
  RewritingSystem rs(ps.spec, t);
  auto alpha = ps.spec.alphabet();
  const FiniteGroup& g = ps.spec.group();

  require(rs.schreierGenerator(g.identity(), *alpha->find("a")).value ==
              Word::parse(alpha, "a b^-1"),
          "S_{1,a} should equal a b^-1");
  Word tauAA = rs.rewrite(Word::parse(alpha, "a a"));
  bool ok = tauAA.size() == 2 &&
            rs.kernelAlphabet()->name(tauAA.letters()[0].gen) == "S{1,a}" &&
            rs.kernelAlphabet()->name(tauAA.letters()[1].gen) == "S{b,a}" &&
            tauAA.letters()[0].sign == 1 && tauAA.letters()[1].sign == 1;
  require(ok, "tau(a a) should equal S{1,a} S{b,a}");

  Analysis a = analyze(ps.spec, ps.transversal, Stage::Full);
  require(a.trace->canonical && a.trace->survivors.size() == 2 &&
              a.trace->final.relators.size() == 1 &&
              a.trace->final.relators[0].size() == 4,
          "final presentation should be a genus-1 commutator relator");

  require(a.action->matrix(g.elementFromWord("g")) == scaledIdentity(2, -1),
          "M_g should be -I2");
  require(a.action->matrix(g.elementFromWord("h")) == scaledIdentity(2, -1),
          "M_h should be -I2");
  require(a.action->matrix(g.elementFromWord("g h")) == IMat::identity(2),
          "M_gh should be I2");

  require(a.lefschetz->allConsistent, "Lefschetz must match the oracle");
  int countG = fixedPointOracle(ps.spec, g.elementFromWord("g"));
  int countH = fixedPointOracle(ps.spec, g.elementFromWord("h"));
  int countGH = fixedPointOracle(ps.spec, g.elementFromWord("g h"));
  require(countG == 4 && countH == 4 && countGH == 0,
          "fixed point counts should be (4, 4, 0)");

  for (const auto& e : a.classification->elements)
    require(e.type == BasisType::SubgroupFixed, "both elements should be type 4");
}

// ---------------------------------------------------------------- criterion 3

void criterion3() {
  ParsedSpec ps = buildSpec(parseInput(builtinExample("example3")));
  require(ps.spec.genus() == 4, "genus should be 4");

  Analysis a = analyze(ps.spec, ps.transversal, Stage::Full);
  require(a.basis->rank == 8, "H1 rank should be 8");
  require(a.trace->canonical && a.trace->survivors.size() == 8 &&
              a.trace->final.relators.size() == 1 &&
              a.trace->final.relators[0].size() == 16,
          "one relator of length 16 in 8 generators expected");

  Word tauCCC = a.rewriting->rewrite(Word::parse(ps.spec.alphabet(), "c c c"));
  bool ok = tauCCC.size() == 3;
  const char* expected[] = {"S{1,c}", "S{d,c}", "S{dd,c}"};
  for (int i = 0; ok && i < 3; ++i)
    ok = a.rewriting->kernelAlphabet()->name(tauCCC.letters()[static_cast<size_t>(i)].gen) ==
             expected[i] &&
         tauCCC.letters()[static_cast<size_t>(i)].sign == 1;
  require(ok, "tau(ccc) should equal S{1,c} S{d,c} S{d^2,c}");

  const FiniteGroup& g = ps.spec.group();
  GroupElement eg = g.elementFromWord("g"), eh = g.elementFromWord("h"),
               egh = g.elementFromWord("g h");
  require(2 - a.action->matrix(eh).trace() == 6, "2 - trace(M_h) should be 6");
  require(fixedPointOracle(ps.spec, eh) == 6, "oracle for h should be 6");
  require(2 - a.action->matrix(eg).trace() == 6, "2 - trace(M_g) should be 6");
  require(fixedPointOracle(ps.spec, eg) == 6, "oracle for g should be 6");
  require(2 - a.action->matrix(egh).trace() == 0, "2 - trace(M_gh) should be 0");
  require(fixedPointOracle(ps.spec, egh) == 0, "oracle for gh should be 0");
  require(a.lefschetz->allConsistent, "Lefschetz must match the oracle everywhere");

  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      require(a.action->matrix(g.mul(GroupElement{i}, GroupElement{j})) ==
                  a.action->matrix(GroupElement{i}) * a.action->matrix(GroupElement{j}),
              "action must be a homomorphism on all 36 pairs");

  IMat sum(8, 8);
  for (const IMat& m : a.action->matrices) sum = sum + m;
  require(sum.isZero(), "sum of M_q over G should vanish");

  BlockReport report = blockReport(*a.action, *a.classification, eh);
  require(report.blocks.size() == 4, "M_h should split into four blocks");
  IMat companion(2, 2);
  companion.at(0, 1) = 1;
  companion.at(1, 0) = -1;
  companion.at(1, 1) = -1;
  for (const Block& b : report.blocks)
    require(b.size == 2 && b.kind == BlockKind::TorsionCompanion &&
                b.entries == companion,
            "each block should be the 2x2 torsion companion");
}

// ----------------------------------------------------- random cover generator

struct GeneratedCover {
  FiniteGroup group;
  OrbifoldSignature signature;
  GeneratingVector vector;
};

std::vector<FiniteGroup> candidateGroups() {
  std::vector<FiniteGroup> out;
  for (auto inv : std::vector<std::vector<int>>{{2}, {3}, {4}, {5}, {6}, {2, 2},
                                                {8}, {2, 4}, {9}, {3, 3}, {10},
                                                {12}, {2, 6}, {2, 2, 2}, {15},
                                                {2, 8}, {4, 4}, {18}, {20}, {24}})
    out.push_back(FiniteGroup::fromAbelianInvariants(inv));
  // S3, D4, A4, S4
  out.push_back(FiniteGroup::fromPermutations(3, {{1, 0, 2}, {1, 2, 0}}));
  out.push_back(FiniteGroup::fromPermutations(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}));
  out.push_back(FiniteGroup::fromPermutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
  out.push_back(FiniteGroup::fromPermutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}));
  return out;
}

std::vector<GeneratedCover> generateCovers(int count, unsigned seed) {
  std::vector<FiniteGroup> groups = candidateGroups();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pickGroup(0, groups.size() - 1);
  std::uniform_int_distribution<int> pickG0(0, 2), pickT(0, 4);

  std::vector<GeneratedCover> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 400) {
    ++attempts;
    const FiniteGroup& g = groups[pickGroup(rng)];
    const int n = g.order();
    std::uniform_int_distribution<int> pickElt(0, n - 1);
    int g0 = pickG0(rng);
    int t = pickT(rng);
    if (g0 == 0 && t < 3) t = 3;

    GeneratingVector v;
    GroupElement prod = g.identity();
    for (int i = 0; i < g0; ++i) {
      GroupElement ai{pickElt(rng)}, bi{pickElt(rng)};
      v.a.push_back(ai);
      v.b.push_back(bi);
      // commutator contribution (trivial for abelian groups)
      prod = g.mul(prod, g.mul(g.mul(ai, bi), g.mul(g.inverse(ai), g.inverse(bi))));
    }
    bool bad = false;
    for (int j = 0; j + 1 < t; ++j) {
      GroupElement xj{pickElt(rng)};
      if (xj == g.identity()) {
        bad = true;
        break;
      }
      v.x.push_back(xj);
      prod = g.mul(prod, xj);
    }
    if (bad) continue;
    if (t > 0) {
      GroupElement last = g.inverse(prod);
      if (last == g.identity()) continue;
      v.x.push_back(last);
    } else if (prod != g.identity()) {
      continue;
    }

    OrbifoldSignature sig;
    sig.quotientGenus = g0;
    for (GroupElement xj : v.x) sig.branchOrders.push_back(g.elementOrder(xj));

    if (!CoverSpec::validate(g, sig, v).valid()) continue;
    int genus = riemannHurwitzGenus(sig, n);
    if (genus > 20) continue;
    out.push_back(GeneratedCover{g, sig, v});
  }
  return out;
}

// ---------------------------------------------------------------- criterion 4

void criterion4(const std::vector<GeneratedCover>& covers) {
  require(covers.size() >= 200, "at least 200 generated covers required, got " +
                                    std::to_string(covers.size()));
  std::mt19937 rng(7);
  for (size_t idx = 0; idx < covers.size(); ++idx) {
    const GeneratedCover& c = covers[idx];
    CoverSpec spec(c.group, c.signature, c.vector);
    const int n = c.group.order();
    const std::string tag = " (cover " + std::to_string(idx) + ")";

    Analysis a = analyze(spec, {}, Stage::Homology);
    // rank 2g torsion-free is enforced inside h1Basis; reaching here proves it
    require(a.basis->rank == 2 * spec.genus(), "rank must equal 2g" + tag);

    for (int q = 0; q < n; ++q) {
      Int det = a.action->matrix(GroupElement{q}).determinant();
      require(det == 1 || det == -1, "det M_q must be +-1" + tag);
    }

    // homomorphism: all pairs for small groups, a sample otherwise
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<int, int>> pairs;
    if (n * n <= 64) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
    } else {
      for (int k = 0; k < 64; ++k) pairs.emplace_back(pick(rng), pick(rng));
    }
    for (auto [i, j] : pairs)
      require(a.action->matrix(c.group.mul(GroupElement{i}, GroupElement{j})) ==
                  a.action->matrix(GroupElement{i}) * a.action->matrix(GroupElement{j}),
              "action must be a homomorphism" + tag);

    for (int q = 1; q < n; ++q)
      require(2 - a.action->matrix(GroupElement{q}).trace() ==
                  fixedPointOracle(spec, GroupElement{q}),
              "Lefschetz count must match the oracle" + tag);

    if (c.signature.quotientGenus == 0) {
      IMat sum(a.basis->rank, a.basis->rank);
      for (const IMat& m : a.action->matrices) sum = sum + m;
      require(sum.isZero(), "sum of M_q must vanish for genus-0 quotients" + tag);
    }

    // transversal independence of the traces
    Transversal reversed = Transversal::bfsReversed(spec);
    Analysis b = analyze(spec, reversed.reps(), Stage::Homology);
    for (int q = 0; q < n; ++q)
      require(a.action->matrix(GroupElement{q}).trace() ==
                  b.action->matrix(GroupElement{q}).trace(),
              "traces must not depend on the transversal" + tag);
  }
}

// ---------------------------------------------------------------- criterion 5

std::vector<Int> naiveDiagonal(IMat a) {
  const int rows = a.rows(), cols = a.cols();
  const int bound = rows < cols ? rows : cols;
  std::vector<Int> d;
  int t = 0;
  while (t < bound) {
    int pr = -1, pc = -1;
    for (int i = t; i < rows && pr < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (a.at(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    a.swapRows(t, pr);
    a.swapCols(t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i)
        while (a.at(i, t) != 0) {
          Int q = a.at(i, t) / a.at(t, t);
          for (int j = t; j < cols; ++j) a.at(i, j) -= q * a.at(t, j);
          if (a.at(i, t) != 0) a.swapRows(i, t);
        }
      for (int j = t + 1; j < cols; ++j)
        while (a.at(t, j) != 0) {
          Int q = a.at(t, j) / a.at(t, t);
          for (int i = t; i < rows; ++i) a.at(i, j) -= q * a.at(i, t);
          if (a.at(t, j) != 0) a.swapCols(j, t);
        }
      // a column swap may have reintroduced entries below the pivot
      for (int i = t + 1; i < rows && clean; ++i)
        if (a.at(i, t) != 0) clean = false;
      if (!clean) continue;
      for (int i = t + 1; i < rows && clean; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            for (int jj = t; jj < cols; ++jj) a.at(t, jj) += a.at(i, jj);
            clean = false;
            break;
          }
    }
    Int pivot = a.at(t, t);
    d.push_back(pivot < 0 ? Int(-pivot) : pivot);
    ++t;
  }
  while (static_cast<int>(d.size()) < bound) d.push_back(0);
  return d;
}

void criterion5() {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dim(1, 8), entry(-5, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    IMat m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    SNFResult r = smithNormalForm(m);
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    require(r.diagonal() == naiveDiagonal(m),
            "SNF diagonal must match the naive oracle" + tag);
    require(r.U * m * r.V == r.D, "U*m*V must equal D" + tag);
    Int du = r.U.determinant(), dv = r.V.determinant();
    require((du == 1 || du == -1) && (dv == 1 || dv == -1),
            "U and V must be unimodular" + tag);
  }
}

// ---------------------------------------------------------------- criterion 6

std::pair<int, std::vector<Int>> abelianInvariants(const KernelPresentation& p,
                                                   const std::vector<int>& gens) {
  RelationMatrix rm = abelianize(p, gens);
  SNFResult snf = smithNormalForm(rm.entries.transposed());
  std::vector<Int> torsion;
  int rank = static_cast<int>(gens.size());
  for (const Int& d : snf.diagonal()) {
    if (d == 0) continue;
    --rank;
    if (d != 1) torsion.push_back(d);
  }
  return {rank, torsion};
}

void checkTietzeSoundness(const CoverSpec& spec, const std::vector<Word>& override_,
                          const std::string& tag) {
  Transversal t = override_.empty() ? Transversal::bfs(spec)
                                    : Transversal::fromWords(spec, override_);
  RewritingSystem rs(spec, t);
  KernelPresentation p = rs.kernelPresentation();
  SimplificationTrace trace = simplify(p, p.genus);
  if (!trace.canonical) return;  // soundness only asserted when canonical

  std::vector<int> all;
  for (int i = 0; i < p.alphabet->size(); ++i) all.push_back(i);
  require(abelianInvariants(p, all) ==
              abelianInvariants(trace.final, trace.survivors),
          "abelianization invariants must be preserved" + tag);

  SimplePresentation replayed = replay(p, trace.steps);
  bool identical = replayed.generators == trace.survivors &&
                   replayed.relators.size() == trace.final.relators.size();
  for (size_t i = 0; identical && i < replayed.relators.size(); ++i) {
    identical = replayed.relators[i] == trace.final.relators[i] &&
                replayed.relators[i].str() == trace.final.relators[i].str();
  }
  require(identical, "replaying the trace must reproduce the final presentation" + tag);
}

void criterion6(const std::vector<GeneratedCover>& covers) {
  for (const char* name : {"example1", "example2", "example3"}) {
    ParsedSpec ps = buildSpec(parseInput(builtinExample(name)));
    checkTietzeSoundness(ps.spec, ps.transversal, std::string(" (") + name + ")");
  }
  for (size_t idx = 0; idx < covers.size(); ++idx) {
    const GeneratedCover& c = covers[idx];
    CoverSpec spec(c.group, c.signature, c.vector);
    checkTietzeSoundness(spec, {}, " (cover " + std::to_string(idx) + ")");
  }
}

}  // namespace

int main() {
  double t1 = runCriterion(1, "Z6 unbranched cover of genus 7", criterion1);
  totalFailures += gFailures;
  if (t1 >= 1.0) {
    std::cout << "    FAIL: criterion 1 exceeded 1 s\n";
    ++totalFailures;
  }

  double t2 = runCriterion(2, "Klein cover of genus 1", criterion2);
  totalFailures += gFailures;
  if (t2 >= 1.0) {
    std::cout << "    FAIL: criterion 2 exceeded 1 s\n";
    ++totalFailures;
  }

  double t3 = runCriterion(3, "Z2xZ3 cover of genus 4", criterion3);
  totalFailures += gFailures;
  if (t3 >= 1.0) {
    std::cout << "    FAIL: criterion 3 exceeded 1 s\n";
    ++totalFailures;
  }

  std::vector<GeneratedCover> covers = generateCovers(200, 20240811);
  double t4 = runCriterion(4, "randomized property suite (200 covers)",
                           [&] { criterion4(covers); });
  totalFailures += gFailures;
  if (t4 >= 60.0) {
    std::cout << "    FAIL: criterion 4 exceeded 60 s\n";
    ++totalFailures;
  }

  runCriterion(5, "SNF oracle equivalence (1000 matrices)", criterion5);
  totalFailures += gFailures;

  runCriterion(6, "Tietze soundness (examples + property suite)",
               [&] { criterion6(covers); });
  totalFailures += gFailures;

  if (totalFailures) {
    std::cout << "ACCEPTANCE FAILED: " << totalFailures << " failing check(s)\n";
    return 1;
  }
  std::cout << "ACCEPTANCE PASSED\n";
  return 0;
}
