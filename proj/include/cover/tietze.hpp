#ifndef COVER_TIETZE_HPP
#define COVER_TIETZE_HPP

#include <map>
#include <vector>

#include "cover/schreier.hpp"

namespace cover {

enum class StepKind {
  RemoveTrivialRelator,
  EliminateGenerator,
  Substitute,
  Combine,
};

struct TietzeStep {
  StepKind kind;
  int generator;     // kernel alphabet index, -1 when not applicable
  int relatorIndex;  // index into the relator list at the time of the step
  Word replacement;  // word the generator was solved to (EliminateGenerator)
};

// Record of a simplification run. Replaying `steps` against the input
// presentation reproduces `final` exactly.
struct SimplificationTrace {
  std::vector<TietzeStep> steps;
  KernelPresentation final;     // words over the original kernel alphabet
  std::vector<int> survivors;   // surviving kernel generator indices, ascending
  std::map<int, Word> eliminated;  // removed generator -> word in survivors
  bool canonical = false;       // single relator of length 4g, each gen once +-1
  bool partial = false;         // strategy stalled before the canonical form
};

struct TietzeOptions {
  // Per-relator letter budget; <=0 selects the default 64 * g * n.
  long long lengthBudget = 0;
};

// Greedy elimination toward the single surface relator: drop trivial
// relators, free-cancel generators occurring once in total, then eliminate
// the single-occurrence generator with least substitution growth, preferring
// branch-derived generators. Throws ErrorKind::Budget when a relator exceeds
// the length budget.
SimplificationTrace simplify(const KernelPresentation& p, int genus,
                             const TietzeOptions& opts = {});

// One relator of length 4g over exactly 2g generators, each generator
// appearing exactly once with each sign.
bool isCanonicalSurfaceRelator(const std::vector<Word>& relators,
                               const std::vector<int>& generators, int genus);

// Single Tietze move: relator `relatorIndex` must contain `gen` exactly once;
// solves for it, substitutes everywhere, drops the relator and generator.
struct SimplePresentation {
  std::vector<int> generators;  // kernel indices, ascending
  std::vector<Word> relators;   // cyclically reduced
};

SimplePresentation eliminateGenerator(const SimplePresentation& p, int gen,
                                      int relatorIndex);

// Re-applies a recorded step list to the input presentation.
SimplePresentation replay(const KernelPresentation& p,
                          const std::vector<TietzeStep>& steps);

}  // namespace cover

#endif
