#ifndef COVER_ORBIFOLD_HPP
#define COVER_ORBIFOLD_HPP

#include <string>
#include <vector>

#include "cover/finite_group.hpp"
#include "cover/word.hpp"

namespace cover {

// Quotient genus plus branch orders (g0; n_1,...,n_t).
struct OrbifoldSignature {
  int quotientGenus = 0;
  std::vector<int> branchOrders;

  int branchCount() const { return static_cast<int>(branchOrders.size()); }
};

// Genus of the covering surface from 2g = 2n*g0 - 2n + 2 + n*sum(1 - 1/n_j).
// Requires n_j | n; throws ErrorKind::InvalidCover on non-integral or
// negative genus.
int riemannHurwitzGenus(const OrbifoldSignature& sig, int n);

// phi-images of the standard orbifold generators a_1..a_g0, b_1..b_g0,
// x_1..x_t, in that order.
struct GeneratingVector {
  std::vector<GroupElement> a, b, x;
};

struct ValidationReport {
  std::vector<std::string> failures;

  bool valid() const { return failures.empty(); }
};

// Validated branched-cover description: group, signature, generating vector,
// the orbifold generator registry and its relators. Construction throws on an
// invalid vector; use validate() for the report form.
class CoverSpec {
 public:
  CoverSpec(FiniteGroup group, OrbifoldSignature sig, GeneratingVector vec);

  static ValidationReport validate(const FiniteGroup& group,
                                   const OrbifoldSignature& sig,
                                   const GeneratingVector& vec);

  const FiniteGroup& group() const { return group_; }
  const OrbifoldSignature& signature() const { return sig_; }
  const GeneratingVector& vector() const { return vec_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  int genus() const { return genus_; }

  // phi-image of the generator with the given alphabet index.
  GroupElement generatorImage(int gen) const {
    return images_[static_cast<size_t>(gen)];
  }
  // True when the alphabet index is one of the x_j (torsion) generators.
  bool isBranchGenerator(int gen) const {
    return gen >= 2 * sig_.quotientGenus;
  }

  const Word& longRelator() const { return longRelator_; }
  const std::vector<Word>& torsionRelators() const { return torsionRelators_; }

  // Homomorphic image of a word over the orbifold alphabet.
  GroupElement phi(const Word& w) const;

 private:
  FiniteGroup group_;
  OrbifoldSignature sig_;
  GeneratingVector vec_;
  AlphabetPtr alphabet_;
  std::vector<GroupElement> images_;
  Word longRelator_;
  std::vector<Word> torsionRelators_;
  int genus_ = 0;
};

// Generator registry for a signature: a_i,b_i pairs then x_j. Named by
// consecutive letters a,b,c,... when 2*g0+t <= 26, indexed names otherwise.
AlphabetPtr makeOrbifoldAlphabet(const OrbifoldSignature& sig);

}  // namespace cover

#endif
