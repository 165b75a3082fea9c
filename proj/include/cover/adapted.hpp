#ifndef COVER_ADAPTED_HPP
#define COVER_ADAPTED_HPP

#include <optional>
#include <string>
#include <vector>

#include "cover/homology.hpp"

namespace cover {

enum class BasisType {
  Free = 1,        // full free orbit of basis elements
  Torsion = 2,     // cyclic orbit with the -(sum) relation
  Translate = 3,   // power image of a Torsion element
  SubgroupFixed = 4,  // every image is +- a basis element
  Unclassified = 0,
};

struct TorsionWitness {
  GroupElement element;  // cyclic element h
  int order;             // m
};

struct TranslateWitness {
  int origin;  // basis index of the Torsion element
  int power;   // r with gamma = h^r(gamma_0), 1 <= r <= m-2
};

struct SubgroupFixedWitness {
  std::vector<GroupElement> stabilizer;        // {q : q(gamma) = gamma}
  std::vector<std::pair<int, int>> signPattern;  // element index -> +-1
};

struct BasisClassification {
  BasisType type = BasisType::Unclassified;
  int orbit = -1;
  std::optional<TorsionWitness> torsion;
  std::optional<TranslateWitness> translate;
  std::optional<SubgroupFixedWitness> subgroupFixed;
  std::string diagnostic;  // first failed test when unclassified
};

struct AdaptedClassification {
  std::vector<BasisClassification> elements;  // per basis index
  std::vector<int> suggestedOrder;            // basis permutation
  bool complete = false;                      // no unclassified elements
  std::string diagnostic;                     // set when classification is skipped
};

// Tests each basis element against the four adapted-basis types in order.
// Requires the surviving-generator basis; otherwise returns all-unclassified
// with a diagnostic. Torsion witnesses are drawn from the conjugates of the
// branch images phi(x_j).
AdaptedClassification classify(const HomologyAction& action, const CoverSpec& spec);

enum class BlockKind { Permutation, TorsionCompanion, SignedPermutation, General };

struct Block {
  BlockKind kind;
  int size;
  IMat entries;  // row i = image of the i-th basis element of the block
};

struct BlockReport {
  std::vector<int> order;     // basis permutation applied
  std::vector<Block> blocks;  // diagonal blocks, in order
};

// Diagonal block decomposition of the action of q in the reordered basis.
// Blocks are reported row-convention (entry (i,j) = coefficient of basis j
// in the image of basis i) so torsion blocks show 1's on the superdiagonal
// and a last row of -1's. Throws when cls has unclassified elements.
BlockReport blockReport(const HomologyAction& action,
                        const AdaptedClassification& cls, GroupElement q,
                        const std::vector<int>* orderOverride = nullptr);

}  // namespace cover

#endif
