#ifndef COVER_SCHREIER_HPP
#define COVER_SCHREIER_HPP

#include <vector>

#include "cover/orbifold.hpp"

namespace cover {

// Prefix-closed coset representatives for Gamma in Gamma_0, one per element
// of G (cosets are identified with G-elements through phi).
class Transversal {
 public:
  // BFS over the Cayley graph of G with generators in registry order; first
  // word reaching each element wins. Deterministic.
  static Transversal bfs(const CoverSpec& spec);

  // Same, but trying generators in reverse registry order (used to check
  // transversal independence of homology traces).
  static Transversal bfsReversed(const CoverSpec& spec);

  // Validates the Schreier property and phi-coverage of an explicit word
  // list; throws ErrorKind::Transversal on violation. Words are reindexed
  // so that rep(q) has phi-image q.
  static Transversal fromWords(const CoverSpec& spec, const std::vector<Word>& words);

  const Word& rep(GroupElement q) const { return reps_[static_cast<size_t>(q.index)]; }
  const std::vector<Word>& reps() const { return reps_; }
  const Word& repFor(const CoverSpec& spec, const Word& w) const {
    return rep(spec.phi(w));
  }

 private:
  explicit Transversal(std::vector<Word> reps) : reps_(std::move(reps)) {}
  static Transversal bfsImpl(const CoverSpec& spec, bool reversed);

  std::vector<Word> reps_;  // indexed by element index
};

// S_{K,y} = K y (Ky-bar)^-1.
struct SchreierGenerator {
  int coset;        // element index of K
  int gen;          // orbifold generator index y
  Word value;       // freely reduced word over the orbifold alphabet
  bool trivial;     // value is empty
  int kernelIndex;  // index in the kernel alphabet, -1 when trivial
};

// Presentation of the kernel: nontrivial Schreier generators and the
// relators tau(K R K^-1), tau(K x_j^{n_j} K^-1), cyclically reduced,
// empty ones dropped.
struct KernelPresentation {
  AlphabetPtr alphabet;
  std::vector<Word> relators;
  int genus;
  int groupOrder;

  // Per kernel generator: its orbifold-word value and the orbifold
  // generator it came from (drives the Tietze elimination preference).
  std::vector<Word> generatorValues;
  std::vector<int> generatorSource;
  // Orbifold generator indices >= this are branch (x_j) generators.
  int branchSourceStart = 0;
};

// The rewriting process tau for a fixed spec and transversal.
class RewritingSystem {
 public:
  RewritingSystem(const CoverSpec& spec, Transversal transversal);

  const CoverSpec& spec() const { return *spec_; }
  const Transversal& transversal() const { return transversal_; }
  const AlphabetPtr& kernelAlphabet() const { return kernelAlphabet_; }

  const SchreierGenerator& schreierGenerator(GroupElement k, int gen) const;
  const std::vector<SchreierGenerator>& generators() const { return gens_; }

  // tau: rewrites a kernel word over Gamma_0 into Schreier generators,
  // erasing trivial ones. Throws ErrorKind::NotInKernel when phi(w) != 1.
  Word rewrite(const Word& w) const;

  // Expands a kernel-alphabet word back to Gamma_0 letters and reduces.
  Word expand(const Word& kernelWord) const;

  KernelPresentation kernelPresentation() const;

 private:
  const CoverSpec* spec_;
  Transversal transversal_;
  std::vector<SchreierGenerator> gens_;  // indexed gen * n + coset
  AlphabetPtr kernelAlphabet_;
  std::vector<int> kernelToTable_;  // kernel index -> gens_ index
};

}  // namespace cover

#endif
