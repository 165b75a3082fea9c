#include "cover/finite_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cover/error.hpp"

namespace cover {

namespace {

std::vector<std::string> abelianGeneratorNames(size_t count) {
  if (count == 0) return {};
  if (count == 1) return {"h"};
  if (count == 2) return {"g", "h"};
  std::vector<std::string> names;
  for (size_t i = 0; i < count; ++i) names.push_back("g" + std::to_string(i + 1));
  return names;
}

}  // namespace

FiniteGroup FiniteGroup::fromAbelianInvariants(const std::vector<int>& invariants) {
  for (int k : invariants)
    if (k < 2)
      throw Error(ErrorKind::InvalidCover, "abelian invariant must be >= 2");

  FiniteGroup g;
  long long order = 1;
  for (int k : invariants) {
    order *= k;
    if (order > 1 << 20)
      throw Error(ErrorKind::SizeLimit, "abelian group too large");
  }
  g.n_ = static_cast<int>(order);
  const size_t m = invariants.size();

  // index = ((e1*k2 + e2)*k3 + e3)... ; decode most-significant first
  auto decode = [&](int idx) {
    std::vector<int> e(m);
    for (size_t i = m; i-- > 0;) {
      e[i] = idx % invariants[i];
      idx /= invariants[i];
    }
    return e;
  };
  auto encode = [&](const std::vector<int>& e) {
    int idx = 0;
    for (size_t i = 0; i < m; ++i) idx = idx * invariants[i] + e[i];
    return idx;
  };

  g.table_.resize(static_cast<size_t>(g.n_) * g.n_);
  for (int a = 0; a < g.n_; ++a) {
    auto ea = decode(a);
    for (int b = 0; b < g.n_; ++b) {
      auto eb = decode(b);
      std::vector<int> ec(m);
      for (size_t i = 0; i < m; ++i) ec[i] = (ea[i] + eb[i]) % invariants[i];
      g.table_[static_cast<size_t>(a) * g.n_ + b] = encode(ec);
    }
  }

  auto names = abelianGeneratorNames(m);
  for (size_t i = 0; i < m; ++i) {
    std::vector<int> e(m, 0);
    e[i] = 1;
    g.generators_.emplace_back(names[i], encode(e));
  }

  g.elementNames_.resize(static_cast<size_t>(g.n_));
  for (int a = 0; a < g.n_; ++a) {
    auto e = decode(a);
    std::string nm;
    for (size_t i = 0; i < m; ++i)
      for (int r = 0; r < e[i]; ++r) {
        if (!nm.empty()) nm += ' ';
        nm += names[i];
      }
    g.elementNames_[static_cast<size_t>(a)] = nm.empty() ? "1" : nm;
  }

  g.buildInverses();
  g.verifyTable(512);
  return g;
}

FiniteGroup FiniteGroup::fromPermutations(int degree,
                                          const std::vector<std::vector<int>>& gens,
                                          int sizeBound) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw Error(ErrorKind::Parse, "permutation has wrong degree");
    std::vector<bool> seen(static_cast<size_t>(degree), false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[static_cast<size_t>(v)])
        throw Error(ErrorKind::Parse, "not a permutation");
      seen[static_cast<size_t>(v)] = true;
    }
  }

  using Perm = std::vector<int>;
  Perm id(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<size_t>(i)] = i;

  // mul(a,b) = a after b is NOT used; convention: (a*b)(x) = b(a(x)) so that
  // appending a generator on the right of a word multiplies on the right.
  auto compose = [&](const Perm& a, const Perm& b) {
    Perm c(static_cast<size_t>(degree));
    for (int x = 0; x < degree; ++x)
      c[static_cast<size_t>(x)] = b[static_cast<size_t>(a[static_cast<size_t>(x)])];
    return c;
  };

  std::vector<Perm> elements{id};
  std::vector<std::string> names{"1"};
  std::map<Perm, int> index{{id, 0}};
  for (size_t head = 0; head < elements.size(); ++head) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Perm next = compose(elements[head], gens[gi]);
      if (index.count(next)) continue;
      if (static_cast<int>(elements.size()) >= sizeBound)
        throw Error(ErrorKind::SizeLimit, "permutation closure exceeds bound");
      index.emplace(next, static_cast<int>(elements.size()));
      std::string nm = head == 0 ? "" : names[head] + " ";
      names.push_back(nm + "s" + std::to_string(gi));
      elements.push_back(std::move(next));
    }
  }

  FiniteGroup g;
  g.n_ = static_cast<int>(elements.size());
  g.table_.resize(static_cast<size_t>(g.n_) * g.n_);
  for (int a = 0; a < g.n_; ++a)
    for (int b = 0; b < g.n_; ++b)
      g.table_[static_cast<size_t>(a) * g.n_ + b] =
          index.at(compose(elements[static_cast<size_t>(a)],
                           elements[static_cast<size_t>(b)]));
  g.elementNames_ = std::move(names);
  for (size_t gi = 0; gi < gens.size(); ++gi)
    g.generators_.emplace_back("s" + std::to_string(gi), index.at(gens[gi]));
  g.buildInverses();
  g.verifyTable(512);
  return g;
}

void FiniteGroup::buildInverses() {
  inv_.assign(static_cast<size_t>(n_), -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (table_[static_cast<size_t>(a) * n_ + b] == 0) inv_[static_cast<size_t>(a)] = b;
  for (int a = 0; a < n_; ++a)
    if (inv_[static_cast<size_t>(a)] < 0)
      throw Error(ErrorKind::Integrity, "element without inverse");
}

void FiniteGroup::verifyTable(int bound) const {
  if (n_ > bound) return;
  for (int a = 0; a < n_; ++a) {
    if (table_[static_cast<size_t>(a) * n_] != a || table_[static_cast<size_t>(a)] != a)
      throw Error(ErrorKind::Integrity, "identity law fails");
    if (mul(GroupElement{a}, inverse(GroupElement{a})).index != 0)
      throw Error(ErrorKind::Integrity, "inverse law fails");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(GroupElement{a}, GroupElement{b}), GroupElement{c}) !=
            mul(GroupElement{a}, mul(GroupElement{b}, GroupElement{c})))
          throw Error(ErrorKind::Integrity, "associativity fails");
}

int FiniteGroup::elementOrder(GroupElement q) const {
  int k = 1;
  GroupElement p = q;
  while (p.index != 0) {
    p = mul(p, q);
    ++k;
  }
  return k;
}

std::vector<GroupElement> FiniteGroup::closure(
    const std::vector<GroupElement>& gens) const {
  std::vector<bool> in(static_cast<size_t>(n_), false);
  in[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    for (GroupElement g : gens) {
      for (int b : {mul(GroupElement{a}, g).index, mul(g, GroupElement{a}).index}) {
        if (!in[static_cast<size_t>(b)]) {
          in[static_cast<size_t>(b)] = true;
          frontier.push_back(b);
        }
      }
    }
  }
  std::vector<GroupElement> out;
  for (int a = 0; a < n_; ++a)
    if (in[static_cast<size_t>(a)]) out.push_back(GroupElement{a});
  return out;
}

bool FiniteGroup::generates(const std::vector<GroupElement>& subset) const {
  return static_cast<int>(closure(subset).size()) == n_;
}

std::pair<std::vector<GroupElement>, std::vector<GroupElement>>
FiniteGroup::subgroupCosets(const std::vector<GroupElement>& gens) const {
  auto sub = closure(gens);
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  std::vector<GroupElement> reps;
  for (int a = 0; a < n_; ++a) {
    if (seen[static_cast<size_t>(a)]) continue;
    reps.push_back(GroupElement{a});
    for (GroupElement h : sub)
      seen[static_cast<size_t>(mul(h, GroupElement{a}).index)] = true;  // H*a
  }
  return {sub, reps};
}

std::vector<GroupElement> FiniteGroup::leftCosetReps(
    const std::vector<GroupElement>& subgroup) const {
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  std::vector<GroupElement> reps;
  for (int a = 0; a < n_; ++a) {
    if (seen[static_cast<size_t>(a)]) continue;
    reps.push_back(GroupElement{a});
    for (GroupElement h : subgroup)
      seen[static_cast<size_t>(mul(GroupElement{a}, h).index)] = true;  // a*H
  }
  return reps;
}

GroupElement FiniteGroup::elementFromWord(const std::string& word) const {
  std::istringstream in(word);
  GroupElement acc = identity();
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int sign = 1;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      sign = -1;
      tok.resize(tok.size() - 3);
    }
    GroupElement g{-1};
    for (const auto& [name, idx] : generators_)
      if (name == tok) g = GroupElement{idx};
    if (g.index < 0)
      throw Error(ErrorKind::Parse, "unknown group generator '" + tok + "'");
    if (sign < 0) g = inverse(g);
    acc = mul(acc, g);
  }
  return acc;
}

}  // namespace cover
