#ifndef COVER_HOMOLOGY_HPP
#define COVER_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "cover/snf.hpp"
#include "cover/tietze.hpp"

namespace cover {

// Rows = relators, columns = surviving presentation generators, entries =
// signed exponent sums.
struct RelationMatrix {
  IMat entries;
  std::vector<int> generators;  // kernel indices labelling the columns
};

RelationMatrix abelianize(const KernelPresentation& p,
                          const std::vector<int>& survivors);

// Basis of H1 = Z^{2g}. basisExpressions (2g x k) gives each basis element
// as an integer combination of surviving generators; generatorImages
// (k x 2g rows) gives each generator's class in the basis.
struct HomologyBasis {
  int rank = 0;
  std::vector<int> generators;  // column labels shared with RelationMatrix
  IMat basisExpressions;        // 2g x k
  IMat generatorImages;         // k x 2g
  bool generatorBasis = false;  // basis elements are exactly the generators
};

// Throws ErrorKind::Integrity when rank != 2g or torsion is present.
HomologyBasis h1Basis(const KernelPresentation& p, int genus,
                      const std::vector<int>& survivors);

// Matrices act on column vectors: column i of M_q is the image of basis
// element i, so q1*q2 maps to M_{q1} * M_{q2}.
struct HomologyAction {
  std::vector<IMat> matrices;  // indexed by element index
  HomologyBasis basis;

  const IMat& matrix(GroupElement q) const {
    return matrices[static_cast<size_t>(q.index)];
  }
};

IMat actionMatrix(const RewritingSystem& rs, const SimplificationTrace& trace,
                  const HomologyBasis& basis, GroupElement q);

HomologyAction homologyAction(const RewritingSystem& rs,
                              const SimplificationTrace& trace,
                              const HomologyBasis& basis);

// Combinatorial fixed-point count: over each branch point, the cosets of
// <phi(x_j)> whose conjugate contains q. Undefined for the identity.
int fixedPointOracle(const CoverSpec& spec, GroupElement q);

struct FixedPointRow {
  GroupElement element;
  int oracleCount;
  Int lefschetzCount;  // 2 - trace(M_q)
  bool consistent;
};

struct FixedPointReport {
  std::vector<FixedPointRow> rows;  // every q != 1, by element index
  bool allConsistent = true;
};

FixedPointReport lefschetzReport(const HomologyAction& action, const CoverSpec& spec);

}  // namespace cover

#endif
