#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cover/error.hpp"
#include "cover/finite_group.hpp"

using namespace cover;

namespace {

int eulerPhi(int k) {
  int count = 0;
  for (int i = 1; i <= k; ++i)
    if (std::gcd(i, k) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("cyclic group of order 6") {
  auto g = FiniteGroup::fromAbelianInvariants({6});
  CHECK(g.order() == 6);
  REQUIRE(g.namedGenerators().size() == 1);
  CHECK(g.namedGenerators()[0].first == "h");
  GroupElement h{g.namedGenerators()[0].second};
  CHECK(g.elementOrder(h) == 6);
  CHECK(g.elementOrder(g.identity()) == 1);
  CHECK(g.elementName(g.identity()) == "1");
}

TEST_CASE("Klein four-group") {
  auto g = FiniteGroup::fromAbelianInvariants({2, 2});
  CHECK(g.order() == 4);
  CHECK(g.namedGenerators()[0].first == "g");
  CHECK(g.namedGenerators()[1].first == "h");
  for (int i = 1; i < 4; ++i) CHECK(g.elementOrder(GroupElement{i}) == 2);
  GroupElement gg{g.namedGenerators()[0].second};
  CHECK_FALSE(g.generates({gg}));
  CHECK(g.generates({gg, g.elementFromWord("h")}));
}

TEST_CASE("Z2 x Z3 is cyclic of order 6") {
  auto g = FiniteGroup::fromAbelianInvariants({2, 3});
  CHECK(g.order() == 6);
  CHECK(g.elementOrder(g.elementFromWord("g h")) == 6);
  CHECK(g.elementOrder(g.elementFromWord("g")) == 2);
  CHECK(g.elementOrder(g.elementFromWord("h")) == 3);
  CHECK(g.generates({g.elementFromWord("g"), g.elementFromWord("h")}));
}

TEST_CASE("empty invariants give the trivial group") {
  auto g = FiniteGroup::fromAbelianInvariants({});
  CHECK(g.order() == 1);
  CHECK(g.generates({}));
}

TEST_CASE("permutation groups") {
  auto swap2 = FiniteGroup::fromPermutations(2, {{1, 0}});
  CHECK(swap2.order() == 2);

  auto s3 = FiniteGroup::fromPermutations(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  // S3 is nonabelian
  bool abelian = true;
  for (int a = 0; a < 6 && abelian; ++a)
    for (int b = 0; b < 6; ++b)
      if (s3.mul(GroupElement{a}, GroupElement{b}) !=
          s3.mul(GroupElement{b}, GroupElement{a})) {
        abelian = false;
        break;
      }
  CHECK_FALSE(abelian);

  auto trivial = FiniteGroup::fromPermutations(3, {});
  CHECK(trivial.order() == 1);

  CHECK_THROWS_AS(FiniteGroup::fromPermutations(3, {{0, 0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::fromPermutations(2, {{1, 0, 2}}), Error);
}

TEST_CASE("closure size bound") {
  std::vector<int> cycle(8);
  for (int i = 0; i < 8; ++i) cycle[static_cast<size_t>(i)] = (i + 1) % 8;
  CHECK_THROWS_AS(FiniteGroup::fromPermutations(8, {cycle}, 4), Error);
}

TEST_CASE("element orders divide the group order") {
  for (auto inv : {std::vector<int>{6}, {2, 2}, {2, 3}, {4, 2}, {12}}) {
    auto g = FiniteGroup::fromAbelianInvariants(inv);
    for (int i = 0; i < g.order(); ++i)
      CHECK(g.order() % g.elementOrder(GroupElement{i}) == 0);
  }
}

TEST_CASE("cyclic groups have Euler-phi many generators") {
  for (int k = 2; k <= 12; ++k) {
    auto g = FiniteGroup::fromAbelianInvariants({k});
    int count = 0;
    for (int i = 0; i < k; ++i)
      if (g.elementOrder(GroupElement{i}) == k) ++count;
    CHECK(count == eulerPhi(k));
  }
}

TEST_CASE("subgroup cosets partition the group") {
  auto g = FiniteGroup::fromAbelianInvariants({2, 3});
  auto [subH, repsH] = g.subgroupCosets({g.elementFromWord("h")});
  CHECK(subH.size() == 3);
  CHECK(repsH.size() == 2);

  auto [sub1, reps1] = g.subgroupCosets({g.identity()});
  CHECK(sub1.size() == 1);
  CHECK(reps1.size() == 6);

  auto klein = FiniteGroup::fromAbelianInvariants({2, 2});
  auto [subG, repsG] = klein.subgroupCosets({klein.elementFromWord("g")});
  CHECK(subG.size() == 2);
  CHECK(repsG.size() == 2);

  // cosets cover all elements without overlap
  auto s3 = FiniteGroup::fromPermutations(3, {{1, 0, 2}, {1, 2, 0}});
  auto [sub, reps] = s3.subgroupCosets({GroupElement{1}});
  std::vector<bool> seen(6, false);
  for (GroupElement r : reps)
    for (GroupElement h : sub) {
      int idx = s3.mul(h, r).index;
      CHECK_FALSE(seen[static_cast<size_t>(idx)]);
      seen[static_cast<size_t>(idx)] = true;
    }
  CHECK(std::count(seen.begin(), seen.end(), true) == 6);
}

TEST_CASE("conjugation and inverses") {
  auto s3 = FiniteGroup::fromPermutations(3, {{1, 0, 2}, {1, 2, 0}});
  for (int a = 0; a < 6; ++a) {
    GroupElement q{a};
    CHECK(s3.mul(q, s3.inverse(q)) == s3.identity());
    CHECK(s3.elementOrder(s3.conjugate(GroupElement{2}, q)) == s3.elementOrder(q));
  }
}

TEST_CASE("element words parse against named generators") {
  auto g = FiniteGroup::fromAbelianInvariants({2, 3});
  CHECK(g.elementFromWord("1") == g.identity());
  CHECK(g.elementFromWord("h h h") == g.identity());
  CHECK(g.elementFromWord("h^-1") == g.elementFromWord("h h"));
  CHECK_THROWS_AS(g.elementFromWord("z"), Error);
}
