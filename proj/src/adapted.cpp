#include "cover/adapted.hpp"

#include <algorithm>
#include <set>

#include "cover/error.hpp"

namespace cover {

namespace {

// Column j of m as +-(standard basis vector): (index, sign), if it is one.
std::optional<std::pair<int, int>> unitColumn(const IMat& m, int j) {
  int idx = -1, sign = 0;
  for (int i = 0; i < m.rows(); ++i) {
    const Int& v = m.at(i, j);
    if (v == 0) continue;
    if (idx >= 0 || (v != 1 && v != -1)) return std::nullopt;
    idx = i;
    sign = v > 0 ? 1 : -1;
  }
  if (idx < 0) return std::nullopt;
  return std::make_pair(idx, sign);
}

std::vector<Int> column(const IMat& m, int j) {
  std::vector<Int> v(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) v[static_cast<size_t>(i)] = m.at(i, j);
  return v;
}

std::vector<Int> applyMat(const IMat& m, const std::vector<Int>& v) {
  std::vector<Int> out(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

std::optional<std::pair<int, int>> asUnit(const std::vector<Int>& v) {
  int idx = -1, sign = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (idx >= 0 || (v[i] != 1 && v[i] != -1)) return std::nullopt;
    idx = static_cast<int>(i);
    sign = v[i] > 0 ? 1 : -1;
  }
  if (idx < 0) return std::nullopt;
  return std::make_pair(idx, sign);
}

}  // namespace

AdaptedClassification classify(const HomologyAction& action, const CoverSpec& spec) {
  const FiniteGroup& g = spec.group();
  const int n = g.order();
  const int rank = action.basis.rank;

  AdaptedClassification cls;
  cls.elements.resize(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) cls.suggestedOrder.push_back(i);

  if (!action.basis.generatorBasis) {
    cls.diagnostic =
        "basis is not the surviving-generator basis (canonical surface form "
        "not reached); classification skipped";
    for (auto& e : cls.elements) e.diagnostic = cls.diagnostic;
    return cls;
  }

  // Torsion witnesses: conjugates of the branch images, lowest index first.
  std::set<int> witnessSet;
  for (GroupElement xj : spec.vector().x)
    for (int k = 0; k < n; ++k) {
      GroupElement c = g.conjugate(GroupElement{k}, xj);
      if (c != g.identity()) witnessSet.insert(c.index);
    }
  std::vector<GroupElement> witnesses;
  for (int w : witnessSet) witnesses.push_back(GroupElement{w});

  auto image = [&](GroupElement q, int i) { return column(action.matrix(q), i); };

  // Type 1: every image a distinct positive basis vector, moved by all q != 1.
  auto testFree = [&](int i) -> bool {
    std::set<int> seen;
    for (int q = 0; q < n; ++q) {
      auto u = asUnit(image(GroupElement{q}, i));
      if (!u || u->second != 1) return false;
      if (q != 0 && u->first == i) return false;
      seen.insert(u->first);
    }
    return static_cast<int>(seen.size()) == n;
  };

  // Type 2: h-orbit prefix in the basis and the -(sum) closing relation.
  // Order-2 witnesses are excluded: their degenerate one-element "orbit"
  // (h(gamma) = -gamma) is the sign behaviour of a subgroup-fixed element
  // and is reported as type 4 instead.  Coset translates of the orbit are
  // not constrained: the mechanically derived bases realise them only up
  // to sign and linear combination.
  auto testTorsion = [&](int i) -> std::optional<TorsionWitness> {
    std::vector<Int> self(static_cast<size_t>(rank));
    self[static_cast<size_t>(i)] = 1;
    for (GroupElement h : witnesses) {
      const int m = g.elementOrder(h);
      if (m < 3) continue;
      const IMat& mh = action.matrix(h);
      std::vector<std::vector<Int>> orbit{self};
      bool ok = true;
      for (int j = 1; j <= m - 2 && ok; ++j) {
        auto v = applyMat(mh, orbit.back());
        auto u = asUnit(v);
        if (!u || u->second != 1) ok = false;
        orbit.push_back(std::move(v));
      }
      if (!ok) continue;
      std::vector<Int> sum(static_cast<size_t>(rank));
      for (const auto& v : orbit)
        for (int r = 0; r < rank; ++r) sum[static_cast<size_t>(r)] += v[static_cast<size_t>(r)];
      auto last = applyMat(mh, orbit.back());
      for (int r = 0; r < rank && ok; ++r)
        if (last[static_cast<size_t>(r)] != -sum[static_cast<size_t>(r)]) ok = false;
      if (!ok) continue;
      return TorsionWitness{h, m};
    }
    return std::nullopt;
  };

  auto testSubgroupFixed = [&](int i) -> std::optional<SubgroupFixedWitness> {
    SubgroupFixedWitness w;
    for (int q = 0; q < n; ++q) {
      auto u = asUnit(image(GroupElement{q}, i));
      if (!u) return std::nullopt;
      if (u->first == i) {
        w.signPattern.emplace_back(q, u->second);
        if (u->second == 1) w.stabilizer.push_back(GroupElement{q});
      }
    }
    return w;
  };

  std::vector<bool> free(static_cast<size_t>(rank));
  std::vector<std::optional<TorsionWitness>> torsion(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    free[static_cast<size_t>(i)] = testFree(i);
    torsion[static_cast<size_t>(i)] = testTorsion(i);
  }

  int nextOrbit = 0;
  std::vector<int> orbitOf(static_cast<size_t>(rank), -1);
  for (int i = 0; i < rank; ++i) {
    auto& e = cls.elements[static_cast<size_t>(i)];
    if (free[static_cast<size_t>(i)]) {
      e.type = BasisType::Free;
      continue;
    }
    if (torsion[static_cast<size_t>(i)]) {
      e.type = BasisType::Torsion;
      e.torsion = torsion[static_cast<size_t>(i)];
      continue;
    }
    // translate of a torsion element?
    bool found = false;
    for (int i0 = 0; i0 < rank && !found; ++i0) {
      if (free[static_cast<size_t>(i0)] || !torsion[static_cast<size_t>(i0)]) continue;
      const auto& tw = *torsion[static_cast<size_t>(i0)];
      std::vector<Int> v(static_cast<size_t>(rank));
      v[static_cast<size_t>(i0)] = 1;
      for (int r = 1; r <= tw.order - 2; ++r) {
        v = applyMat(action.matrix(tw.element), v);
        auto u = asUnit(v);
        if (u && u->second == 1 && u->first == i) {
          e.type = BasisType::Translate;
          e.translate = TranslateWitness{i0, r};
          found = true;
          break;
        }
      }
    }
    if (found) continue;
    if (auto w = testSubgroupFixed(i)) {
      e.type = BasisType::SubgroupFixed;
      e.subgroupFixed = w;
      continue;
    }
    e.type = BasisType::Unclassified;
    e.diagnostic = "not free (some image is not a distinct positive basis "
                   "vector), no torsion witness closes the orbit, not a power "
                   "translate, and some image is not +-(basis element)";
  }

  // Orbit ids and suggested ordering: torsion orbits grouped as
  // gamma, h(gamma), ..., h^{m-2}(gamma); free orbits grouped by group order.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<size_t>(rank), false);
  auto place = [&](int i, int orbit) {
    if (placed[static_cast<size_t>(i)]) return;
    placed[static_cast<size_t>(i)] = true;
    order.push_back(i);
    if (orbitOf[static_cast<size_t>(i)] < 0) orbitOf[static_cast<size_t>(i)] = orbit;
  };
  for (int i = 0; i < rank; ++i) {
    if (placed[static_cast<size_t>(i)]) continue;
    const auto& e = cls.elements[static_cast<size_t>(i)];
    int orbit = nextOrbit++;
    if (e.type == BasisType::Torsion) {
      place(i, orbit);
      std::vector<Int> v(static_cast<size_t>(rank));
      v[static_cast<size_t>(i)] = 1;
      for (int r = 1; r <= e.torsion->order - 2; ++r) {
        v = applyMat(action.matrix(e.torsion->element), v);
        if (auto u = asUnit(v)) place(u->first, orbit);
      }
    } else if (e.type == BasisType::Free) {
      for (int q = 0; q < n; ++q) {
        std::vector<Int> v(static_cast<size_t>(rank));
        v[static_cast<size_t>(i)] = 1;
        if (auto u = asUnit(applyMat(action.matrix(GroupElement{q}), v)))
          place(u->first, orbit);
      }
    } else {
      place(i, orbit);
    }
  }
  cls.suggestedOrder = order;
  for (int i = 0; i < rank; ++i)
    cls.elements[static_cast<size_t>(i)].orbit = orbitOf[static_cast<size_t>(i)];

  cls.complete = std::none_of(cls.elements.begin(), cls.elements.end(),
                              [](const BasisClassification& e) {
                                return e.type == BasisType::Unclassified;
                              });
  return cls;
}

namespace {

bool isPermutationBlock(const IMat& b, bool allowSigns) {
  for (int i = 0; i < b.rows(); ++i) {
    int nz = 0;
    for (int j = 0; j < b.cols(); ++j) {
      const Int& v = b.at(i, j);
      if (v == 0) continue;
      if (v != 1 && !(allowSigns && v == -1)) return false;
      ++nz;
    }
    if (nz != 1) return false;
  }
  for (int j = 0; j < b.cols(); ++j) {
    int nz = 0;
    for (int i = 0; i < b.rows(); ++i)
      if (b.at(i, j) != 0) ++nz;
    if (nz != 1) return false;
  }
  return true;
}

bool isTorsionCompanion(const IMat& b) {
  const int s = b.rows();
  if (s < 1) return false;
  for (int i = 0; i + 1 < s; ++i)
    for (int j = 0; j < s; ++j)
      if (b.at(i, j) != (j == i + 1 ? 1 : 0)) return false;
  for (int j = 0; j < s; ++j)
    if (b.at(s - 1, j) != -1) return false;
  return true;
}

}  // namespace

BlockReport blockReport(const HomologyAction& action,
                        const AdaptedClassification& cls, GroupElement q,
                        const std::vector<int>* orderOverride) {
  if (!cls.complete)
    throw Error(ErrorKind::Integrity,
                "block report requires a complete classification");
  const int rank = action.basis.rank;
  std::vector<int> order = orderOverride ? *orderOverride : cls.suggestedOrder;
  if (static_cast<int>(order.size()) != rank)
    throw Error(ErrorKind::Parse, "basis order must be a permutation of the basis");
  std::vector<bool> seen(static_cast<size_t>(rank), false);
  for (int i : order) {
    if (i < 0 || i >= rank || seen[static_cast<size_t>(i)])
      throw Error(ErrorKind::Parse, "basis order must be a permutation of the basis");
    seen[static_cast<size_t>(i)] = true;
  }

  // Row convention: entry (i,j) = coefficient of basis order[j] in the image
  // of basis order[i].
  const IMat& m = action.matrix(q);
  IMat b(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      b.at(i, j) = m.at(order[static_cast<size_t>(j)], order[static_cast<size_t>(i)]);

  // Finest diagonal decomposition, except that runs of adjacent 1x1 blocks
  // are reported as one diagonal block (the paper writes C, D jointly as I_2).
  std::vector<std::pair<int, int>> spans;
  int start = 0;
  while (start < rank) {
    int end = start + 1;  // [start, end)
    for (int probe = start; probe < end; ++probe)
      for (int j = 0; j < rank; ++j)
        if ((b.at(probe, j) != 0 || b.at(j, probe) != 0) && j >= end)
          end = j + 1;
    bool mergeable = end - start == 1 && !spans.empty();
    if (mergeable) {
      // merge only onto a previous run of diagonal +-1 entries
      for (int i = spans.back().first; i < spans.back().second && mergeable; ++i)
        for (int j = spans.back().first; j < spans.back().second; ++j)
          if (i != j ? b.at(i, j) != 0 : (b.at(i, j) != 1 && b.at(i, j) != -1)) {
            mergeable = false;
            break;
          }
    }
    if (mergeable)
      spans.back().second = end;
    else
      spans.emplace_back(start, end);
    start = end;
  }

  BlockReport report;
  report.order = order;
  for (auto [lo, end2] : spans) {
    start = lo;
    int end = end2;
    IMat sub(end - start, end - start);
    for (int i = start; i < end; ++i)
      for (int j = start; j < end; ++j) sub.at(i - start, j - start) = b.at(i, j);
    Block block;
    block.size = end - start;
    block.entries = sub;
    if (isTorsionCompanion(sub))
      block.kind = BlockKind::TorsionCompanion;
    else if (isPermutationBlock(sub, false))
      block.kind = BlockKind::Permutation;
    else if (isPermutationBlock(sub, true))
      block.kind = BlockKind::SignedPermutation;
    else
      block.kind = BlockKind::General;
    report.blocks.push_back(std::move(block));
  }

  // Reconstruction check: blocks on the diagonal, permutation undone, must
  // reproduce M_q exactly.
  IMat rebuilt(rank, rank);
  int off = 0;
  for (const Block& blk : report.blocks) {
    for (int i = 0; i < blk.size; ++i)
      for (int j = 0; j < blk.size; ++j)
        rebuilt.at(order[static_cast<size_t>(off + j)], order[static_cast<size_t>(off + i)]) =
            blk.entries.at(i, j);
    off += blk.size;
  }
  if (!(rebuilt == m))
    throw Error(ErrorKind::Integrity, "block decomposition failed verification");
  return report;
}

}  // namespace cover
