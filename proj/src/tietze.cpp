#include "cover/tietze.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "cover/error.hpp"

namespace cover {

namespace {

int occurrences(const Word& w, int gen) {
  int c = 0;
  for (Letter l : w.letters())
    if (l.gen == gen) ++c;
  return c;
}

// Relator contains gen exactly once; returns the word gen is equal to.
Word solveFor(const Word& relator, int gen) {
  const auto& ls = relator.letters();
  size_t pos = ls.size();
  for (size_t i = 0; i < ls.size(); ++i)
    if (ls[i].gen == gen) pos = i;
  Word prefix(relator.alphabet(),
              std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(pos)));
  Word suffix(relator.alphabet(),
              std::vector<Letter>(ls.begin() + static_cast<long>(pos) + 1, ls.end()));
  if (ls[pos].sign > 0)
    return prefix.inverse() * suffix.inverse();  // p s q = 1  =>  s = p^-1 q^-1
  return suffix * prefix;                        // p s^-1 q = 1  =>  s = q p
}

}  // namespace

bool isCanonicalSurfaceRelator(const std::vector<Word>& relators,
                               const std::vector<int>& generators, int genus) {
  if (relators.size() != 1) return false;
  if (static_cast<int>(generators.size()) != 2 * genus) return false;
  const Word& r = relators.front();
  if (r.size() != 4 * genus) return false;
  std::map<int, std::pair<int, int>> counts;  // gen -> (#positive, #negative)
  for (Letter l : r.letters()) {
    if (l.sign > 0)
      counts[l.gen].first++;
    else
      counts[l.gen].second++;
  }
  for (int g : generators) {
    auto it = counts.find(g);
    if (it == counts.end() || it->second != std::make_pair(1, 1)) return false;
  }
  return true;
}

SimplePresentation eliminateGenerator(const SimplePresentation& p, int gen,
                                      int relatorIndex) {
  if (relatorIndex < 0 || relatorIndex >= static_cast<int>(p.relators.size()))
    throw Error(ErrorKind::Integrity, "relator index out of range");
  const Word& r = p.relators[static_cast<size_t>(relatorIndex)];
  if (occurrences(r, gen) != 1)
    throw Error(ErrorKind::Integrity,
                "eliminate_generator: relator does not contain the generator "
                "exactly once");
  Word value = solveFor(r, gen);

  SimplePresentation out;
  for (int g : p.generators)
    if (g != gen) out.generators.push_back(g);
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (static_cast<int>(i) == relatorIndex) continue;
    out.relators.push_back(p.relators[i].substituted(gen, value).cyclicReduced().first);
  }
  return out;
}

namespace {

struct Engine {
  SimplePresentation pres;
  const KernelPresentation* input = nullptr;
  long long budget = 0;
  SimplificationTrace trace;

  bool branchDerived(int gen) const {
    return input->generatorSource[static_cast<size_t>(gen)] >=
           input->branchSourceStart;
  }

  void checkBudget() const {
    for (const Word& r : pres.relators)
      if (r.size() > budget)
        throw Error(ErrorKind::Budget,
                    "relator exceeded length budget " + std::to_string(budget));
  }

  void recordElimination(int gen, int relatorIndex) {
    Word value = solveFor(pres.relators[static_cast<size_t>(relatorIndex)], gen);
    // Keep the eliminated map closed under substitution.
    for (auto& [dead, w] : trace.eliminated) w = w.substituted(gen, value);
    trace.eliminated.emplace(gen, value);
    trace.steps.push_back(
        TietzeStep{StepKind::EliminateGenerator, gen, relatorIndex, value});
    pres = eliminateGenerator(pres, gen, relatorIndex);
    checkBudget();
  }

  bool dropTrivialRelators() {
    bool changed = false;
    for (size_t i = 0; i < pres.relators.size();) {
      if (pres.relators[i].empty()) {
        trace.steps.push_back(TietzeStep{StepKind::RemoveTrivialRelator, -1,
                                         static_cast<int>(i),
                                         Word::identity(input->alphabet)});
        pres.relators.erase(pres.relators.begin() + static_cast<long>(i));
        changed = true;
      } else {
        ++i;
      }
    }
    return changed;
  }

  // Generator whose total occurrence count across all relators is one:
  // eliminating it is pure free cancellation.
  bool freeCancel() {
    for (int gen : pres.generators) {
      int total = 0, where = -1;
      for (size_t i = 0; i < pres.relators.size(); ++i) {
        int c = occurrences(pres.relators[i], gen);
        total += c;
        if (c > 0) where = static_cast<int>(i);
      }
      if (total == 1) {
        recordElimination(gen, where);
        return true;
      }
    }
    return false;
  }

  // One greedy elimination among (gen, relator) pairs where the relator
  // contains the generator exactly once. Branch-derived generators first,
  // then minimal substitution growth, then lowest generator and relator index.
  bool greedyStep(int genus) {
    if (static_cast<int>(pres.generators.size()) <= 2 * genus) return false;
    using Key = std::tuple<int, long long, int, int, int>;
    std::optional<Key> best;
    for (int gen : pres.generators) {
      int total = 0;
      for (const Word& r : pres.relators) total += occurrences(r, gen);
      for (size_t i = 0; i < pres.relators.size(); ++i) {
        const Word& r = pres.relators[i];
        if (occurrences(r, gen) != 1) continue;
        long long growth = static_cast<long long>(total - 1) * (r.size() - 1);
        Key key{branchDerived(gen) ? 0 : 1, growth, gen, r.size(),
                static_cast<int>(i)};
        if (!best || key < *best) best = key;
      }
    }
    if (!best) return false;
    recordElimination(std::get<2>(*best), std::get<4>(*best));
    return true;
  }
};

}  // namespace

SimplificationTrace simplify(const KernelPresentation& p, int genus,
                             const TietzeOptions& opts) {
  Engine e;
  e.input = &p;
  e.budget = opts.lengthBudget > 0
                 ? opts.lengthBudget
                 : 64LL * std::max(genus, 1) * std::max(p.groupOrder, 1);
  for (int i = 0; i < p.alphabet->size(); ++i) e.pres.generators.push_back(i);
  e.pres.relators = p.relators;

  bool progress = true;
  while (progress &&
         !isCanonicalSurfaceRelator(e.pres.relators, e.pres.generators, genus)) {
    progress = false;
    if (e.dropTrivialRelators()) progress = true;
    while (e.freeCancel()) progress = true;
    if (e.dropTrivialRelators()) progress = true;
    if (isCanonicalSurfaceRelator(e.pres.relators, e.pres.generators, genus)) break;
    if (e.greedyStep(genus)) progress = true;
  }

  SimplificationTrace trace = std::move(e.trace);
  trace.survivors = e.pres.generators;
  trace.final.alphabet = p.alphabet;
  trace.final.relators = e.pres.relators;
  trace.final.genus = genus;
  trace.final.groupOrder = p.groupOrder;
  trace.final.generatorValues = p.generatorValues;
  trace.final.generatorSource = p.generatorSource;
  trace.final.branchSourceStart = p.branchSourceStart;
  trace.canonical =
      isCanonicalSurfaceRelator(e.pres.relators, e.pres.generators, genus);
  trace.partial = !trace.canonical;
  return trace;
}

SimplePresentation replay(const KernelPresentation& p,
                          const std::vector<TietzeStep>& steps) {
  SimplePresentation pres;
  for (int i = 0; i < p.alphabet->size(); ++i) pres.generators.push_back(i);
  pres.relators = p.relators;
  for (const TietzeStep& s : steps) {
    switch (s.kind) {
      case StepKind::RemoveTrivialRelator:
        pres.relators.erase(pres.relators.begin() + s.relatorIndex);
        break;
      case StepKind::EliminateGenerator:
        pres = eliminateGenerator(pres, s.generator, s.relatorIndex);
        break;
      default:
        throw Error(ErrorKind::Integrity, "unsupported step kind in replay");
    }
  }
  return pres;
}

}  // namespace cover
