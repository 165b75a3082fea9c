#include "cover/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "cover/error.hpp"

namespace cover {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Gauss-Jordan over the rationals; the result is integral for unimodular
// input, which is the only case this is used for.
IMat inverseUnimodular(const IMat& m) {
  const int n = m.rows();
  std::vector<std::vector<Rational>> a(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(2 * n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(m.at(i, j));
    a[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw Error(ErrorKind::Integrity, "matrix is singular");
    std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
    Rational p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (auto& v : a[static_cast<size_t>(col)]) v /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < 2 * n; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  IMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = a[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
      if (denominator(v) != 1)
        throw Error(ErrorKind::Integrity, "inverse is not integral");
      inv.at(i, j) = numerator(v);
    }
  return inv;
}

}  // namespace

RelationMatrix abelianize(const KernelPresentation& p,
                          const std::vector<int>& survivors) {
  std::map<int, int> column;
  for (size_t i = 0; i < survivors.size(); ++i)
    column[survivors[i]] = static_cast<int>(i);

  RelationMatrix rm;
  rm.generators = survivors;
  rm.entries = IMat(static_cast<int>(p.relators.size()),
                    static_cast<int>(survivors.size()));
  for (size_t r = 0; r < p.relators.size(); ++r) {
    for (Letter l : p.relators[r].letters()) {
      auto it = column.find(l.gen);
      if (it == column.end())
        throw Error(ErrorKind::Integrity,
                    "relator mentions a generator outside the column set");
      rm.entries.at(static_cast<int>(r), it->second) += l.sign;
    }
  }
  return rm;
}

HomologyBasis h1Basis(const KernelPresentation& p, int genus,
                      const std::vector<int>& survivors) {
  RelationMatrix rm = abelianize(p, survivors);
  const int k = static_cast<int>(survivors.size());

  // Relations as columns: H1 = Z^k / image(B), B = entries^T.
  IMat b = rm.entries.transposed();
  SNFResult snf = smithNormalForm(b);
  auto diag = snf.diagonal();

  std::vector<int> freeIdx;
  for (int i = 0; i < k; ++i) {
    Int d = i < static_cast<int>(diag.size()) ? diag[static_cast<size_t>(i)] : Int(0);
    if (d == 0)
      freeIdx.push_back(i);
    else if (d != 1)
      throw Error(ErrorKind::Integrity,
                  "H1 has torsion (invariant factor " + d.str() + ")");
  }
  if (static_cast<int>(freeIdx.size()) != 2 * genus)
    throw Error(ErrorKind::Integrity,
                "H1 rank " + std::to_string(freeIdx.size()) + " != 2g = " +
                    std::to_string(2 * genus));

  HomologyBasis basis;
  basis.rank = 2 * genus;
  basis.generators = survivors;
  basis.generatorImages = IMat(k, 2 * genus);
  for (int j = 0; j < k; ++j)
    for (int f = 0; f < 2 * genus; ++f)
      basis.generatorImages.at(j, f) = snf.U.at(freeIdx[static_cast<size_t>(f)], j);

  IMat uInv = inverseUnimodular(snf.U);
  basis.basisExpressions = IMat(2 * genus, k);
  for (int f = 0; f < 2 * genus; ++f)
    for (int j = 0; j < k; ++j)
      basis.basisExpressions.at(f, j) = uInv.at(j, freeIdx[static_cast<size_t>(f)]);

  basis.generatorBasis =
      (k == 2 * genus) && basis.basisExpressions == IMat::identity(k);
  return basis;
}

namespace {

// Abelianized images of every kernel generator in terms of the survivors.
struct AbelianContext {
  std::map<int, int> column;                  // survivor -> column
  std::map<int, std::vector<Int>> eliminated; // dead gen -> exponent vector

  AbelianContext(const SimplificationTrace& trace, int k) {
    for (size_t i = 0; i < trace.survivors.size(); ++i)
      column[trace.survivors[i]] = static_cast<int>(i);
    for (const auto& [dead, w] : trace.eliminated) {
      std::vector<Int> v(static_cast<size_t>(k));
      for (Letter l : w.letters()) {
        auto it = column.find(l.gen);
        if (it == column.end())
          throw Error(ErrorKind::Integrity,
                      "eliminated-generator expression not over survivors");
        v[static_cast<size_t>(it->second)] += l.sign;
      }
      eliminated.emplace(dead, std::move(v));
    }
  }

  std::vector<Int> exponents(const Word& w, int k) const {
    std::vector<Int> v(static_cast<size_t>(k));
    for (Letter l : w.letters()) {
      auto sit = column.find(l.gen);
      if (sit != column.end()) {
        v[static_cast<size_t>(sit->second)] += l.sign;
        continue;
      }
      auto eit = eliminated.find(l.gen);
      if (eit == eliminated.end())
        throw Error(ErrorKind::Integrity, "unmapped kernel generator in tau image");
      for (size_t i = 0; i < eit->second.size(); ++i)
        v[i] += Int(l.sign) * eit->second[i];
    }
    return v;
  }
};

IMat actionMatrixImpl(const RewritingSystem& rs, const SimplificationTrace& trace,
                      const HomologyBasis& basis, GroupElement q,
                      const AbelianContext& ctx) {
  const int k = static_cast<int>(basis.generators.size());
  const int rank = basis.rank;
  const Word& rep = rs.transversal().rep(q);
  const Word repInv = rep.inverse();

  // Columns: class of the image of each surviving generator.
  IMat images(rank, k);
  for (int j = 0; j < k; ++j) {
    const Word& value =
        trace.final.generatorValues[static_cast<size_t>(basis.generators[static_cast<size_t>(j)])];
    Word conjugated = rs.rewrite(rep * value * repInv);
    std::vector<Int> v = ctx.exponents(conjugated, k);
    for (int f = 0; f < rank; ++f) {
      Int acc = 0;
      for (int i = 0; i < k; ++i) acc += v[static_cast<size_t>(i)] * basis.generatorImages.at(i, f);
      images.at(f, j) = acc;
    }
  }
  return images * basis.basisExpressions.transposed();
}

}  // namespace

IMat actionMatrix(const RewritingSystem& rs, const SimplificationTrace& trace,
                  const HomologyBasis& basis, GroupElement q) {
  AbelianContext ctx(trace, static_cast<int>(basis.generators.size()));
  return actionMatrixImpl(rs, trace, basis, q, ctx);
}

HomologyAction homologyAction(const RewritingSystem& rs,
                              const SimplificationTrace& trace,
                              const HomologyBasis& basis) {
  AbelianContext ctx(trace, static_cast<int>(basis.generators.size()));
  HomologyAction action;
  action.basis = basis;
  const int n = rs.spec().group().order();
  action.matrices.reserve(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q)
    action.matrices.push_back(
        actionMatrixImpl(rs, trace, basis, GroupElement{q}, ctx));
  return action;
}

int fixedPointOracle(const CoverSpec& spec, GroupElement q) {
  if (q == spec.group().identity())
    throw Error(ErrorKind::Integrity, "fixed-point oracle is undefined for the identity");
  const FiniteGroup& g = spec.group();
  int count = 0;
  for (GroupElement xj : spec.vector().x) {
    auto stabilizer = g.closure({xj});
    std::vector<bool> inStab(static_cast<size_t>(g.order()), false);
    for (GroupElement h : stabilizer) inStab[static_cast<size_t>(h.index)] = true;
    for (GroupElement k : g.leftCosetReps(stabilizer))
      if (inStab[static_cast<size_t>(g.conjugate(k, q).index)]) ++count;
  }
  return count;
}

FixedPointReport lefschetzReport(const HomologyAction& action, const CoverSpec& spec) {
  FixedPointReport report;
  const int n = spec.group().order();
  for (int q = 1; q < n; ++q) {
    FixedPointRow row{GroupElement{q}, fixedPointOracle(spec, GroupElement{q}),
                      Int(2) - action.matrices[static_cast<size_t>(q)].trace(), false};
    row.consistent = Int(row.oracleCount) == row.lefschetzCount;
    report.allConsistent = report.allConsistent && row.consistent;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace cover
