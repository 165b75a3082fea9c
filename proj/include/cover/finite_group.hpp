#ifndef COVER_FINITE_GROUP_HPP
#define COVER_FINITE_GROUP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cover {

// Index into a FiniteGroup's element list.
struct GroupElement {
  int index = 0;

  bool operator==(const GroupElement& o) const { return index == o.index; }
  bool operator!=(const GroupElement& o) const { return index != o.index; }
  bool operator<(const GroupElement& o) const { return index < o.index; }
};

// Finite group given by a dense multiplication table. Element 0 is the
// identity. Elements carry canonical display names (words in the named
// generators, "1" for the identity). Immutable after construction.
class FiniteGroup {
 public:
  // Direct product of cyclic groups, elements in mixed-radix order.
  // Generator names: "h" for one factor, "g","h" for two, "g1".. beyond.
  static FiniteGroup fromAbelianInvariants(const std::vector<int>& invariants);

  // Closure of permutations of {0..degree-1} under composition, elements
  // enumerated by BFS in generator order. Generators named "s0","s1",...
  static FiniteGroup fromPermutations(int degree,
                                      const std::vector<std::vector<int>>& gens,
                                      int sizeBound = 512);

  int order() const { return n_; }
  GroupElement identity() const { return GroupElement{0}; }
  GroupElement mul(GroupElement a, GroupElement b) const {
    return GroupElement{table_[static_cast<size_t>(a.index) * n_ + b.index]};
  }
  GroupElement inverse(GroupElement a) const { return GroupElement{inv_[a.index]}; }
  GroupElement conjugate(GroupElement k, GroupElement q) const {
    return mul(mul(inverse(k), q), k);  // k^-1 q k
  }

  int elementOrder(GroupElement q) const;
  bool generates(const std::vector<GroupElement>& subset) const;

  // Subgroup generated by gens, sorted by index.
  std::vector<GroupElement> closure(const std::vector<GroupElement>& gens) const;

  // Right cosets H*g of the generated subgroup, each represented by its
  // lowest element index, reps ordered by that index.
  std::pair<std::vector<GroupElement>, std::vector<GroupElement>> subgroupCosets(
      const std::vector<GroupElement>& gens) const;

  // Left-coset transversal for a subgroup (cosets K*H), lowest index per coset.
  std::vector<GroupElement> leftCosetReps(const std::vector<GroupElement>& subgroup) const;

  const std::string& elementName(GroupElement q) const {
    return elementNames_[static_cast<size_t>(q.index)];
  }
  const std::vector<std::pair<std::string, int>>& namedGenerators() const {
    return generators_;
  }

  // Parses a whitespace-separated word in named generators ("g h h", "1").
  GroupElement elementFromWord(const std::string& word) const;

 private:
  FiniteGroup() = default;
  void buildInverses();
  void verifyTable(int bound) const;

  int n_ = 1;
  std::vector<int> table_;  // n*n row-major
  std::vector<int> inv_;
  std::vector<std::string> elementNames_;
  std::vector<std::pair<std::string, int>> generators_;  // name -> element index
};

}  // namespace cover

#endif
