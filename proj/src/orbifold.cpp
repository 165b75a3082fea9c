#include "cover/orbifold.hpp"

#include "cover/error.hpp"

namespace cover {

int riemannHurwitzGenus(const OrbifoldSignature& sig, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidCover, "group order must be >= 1");
  long long twoG = 2LL * n * sig.quotientGenus - 2LL * n + 2;
  for (int nj : sig.branchOrders) {
    if (nj < 2) throw Error(ErrorKind::InvalidCover, "branch order must be >= 2");
    if (n % nj != 0)
      throw Error(ErrorKind::InvalidCover,
                  "branch order " + std::to_string(nj) + " does not divide n=" +
                      std::to_string(n));
    twoG += n - n / nj;
  }
  if (twoG % 2 != 0)
    throw Error(ErrorKind::InvalidCover, "Riemann-Hurwitz gives odd 2g");
  if (twoG < 0)
    throw Error(ErrorKind::InvalidCover, "Riemann-Hurwitz gives negative genus");
  return static_cast<int>(twoG / 2);
}

AlphabetPtr makeOrbifoldAlphabet(const OrbifoldSignature& sig) {
  const int g0 = sig.quotientGenus;
  const int t = sig.branchCount();
  auto alpha = std::make_shared<Alphabet>();
  if (2 * g0 + t <= 26) {
    char c = 'a';
    for (int i = 0; i < 2 * g0 + t; ++i) alpha->add(std::string(1, c++));
  } else {
    for (int i = 1; i <= g0; ++i) {
      alpha->add("a" + std::to_string(i));
      alpha->add("b" + std::to_string(i));
    }
    for (int j = 1; j <= t; ++j) alpha->add("x" + std::to_string(j));
  }
  return alpha;
}

ValidationReport CoverSpec::validate(const FiniteGroup& group,
                                     const OrbifoldSignature& sig,
                                     const GeneratingVector& vec) {
  ValidationReport report;
  const int g0 = sig.quotientGenus;
  const int t = sig.branchCount();

  if (g0 < 0) report.failures.push_back("quotient genus must be non-negative");
  if (g0 == 0 && t <= 2)
    report.failures.push_back("genus-0 quotient requires at least 3 branch points");
  if (static_cast<int>(vec.a.size()) != g0 || static_cast<int>(vec.b.size()) != g0)
    report.failures.push_back("generating vector needs g0 a-images and g0 b-images");
  if (static_cast<int>(vec.x.size()) != t)
    report.failures.push_back("generating vector needs one x-image per branch point");
  if (!report.valid()) return report;

  for (int j = 0; j < t; ++j) {
    int nj = sig.branchOrders[static_cast<size_t>(j)];
    if (nj < 2) {
      report.failures.push_back("branch order n_" + std::to_string(j + 1) +
                                " must be >= 2");
      continue;
    }
    if (group.order() % nj != 0)
      report.failures.push_back("branch order n_" + std::to_string(j + 1) +
                                " does not divide |G|");
    int got = group.elementOrder(vec.x[static_cast<size_t>(j)]);
    if (got != nj)
      report.failures.push_back(
          "phi(x_" + std::to_string(j + 1) + ") has order " + std::to_string(got) +
          ", branch order is " + std::to_string(nj));
  }

  GroupElement prod = group.identity();
  for (int i = 0; i < g0; ++i) {
    GroupElement ai = vec.a[static_cast<size_t>(i)];
    GroupElement bi = vec.b[static_cast<size_t>(i)];
    prod = group.mul(prod, group.mul(group.mul(ai, bi),
                                     group.mul(group.inverse(ai), group.inverse(bi))));
  }
  for (GroupElement xj : vec.x) prod = group.mul(prod, xj);
  if (prod != group.identity())
    report.failures.push_back("product condition fails: phi(R) = " +
                              group.elementName(prod) + " != 1");

  std::vector<GroupElement> all;
  all.insert(all.end(), vec.a.begin(), vec.a.end());
  all.insert(all.end(), vec.b.begin(), vec.b.end());
  all.insert(all.end(), vec.x.begin(), vec.x.end());
  if (!group.generates(all))
    report.failures.push_back("images do not generate G");

  if (report.valid()) {
    try {
      riemannHurwitzGenus(sig, group.order());
    } catch (const Error& e) {
      report.failures.push_back(e.what());
    }
  }
  return report;
}

CoverSpec::CoverSpec(FiniteGroup group, OrbifoldSignature sig, GeneratingVector vec)
    : group_(std::move(group)),
      sig_(std::move(sig)),
      vec_(std::move(vec)),
      alphabet_(makeOrbifoldAlphabet(sig_)),
      longRelator_(alphabet_) {
  auto report = validate(group_, sig_, vec_);
  if (!report.valid()) {
    std::string msg = "invalid cover:";
    for (const auto& f : report.failures) msg += "\n  " + f;
    throw Error(ErrorKind::InvalidCover, msg);
  }

  const int g0 = sig_.quotientGenus;
  const int t = sig_.branchCount();
  images_.reserve(static_cast<size_t>(2 * g0 + t));
  for (int i = 0; i < g0; ++i) {
    images_.push_back(vec_.a[static_cast<size_t>(i)]);
    images_.push_back(vec_.b[static_cast<size_t>(i)]);
  }
  for (int j = 0; j < t; ++j) images_.push_back(vec_.x[static_cast<size_t>(j)]);

  Word r = Word::identity(alphabet_);
  for (int i = 0; i < g0; ++i) {
    Word a = Word::generator(alphabet_, 2 * i);
    Word b = Word::generator(alphabet_, 2 * i + 1);
    r = r * a * b * a.inverse() * b.inverse();
  }
  for (int j = 0; j < t; ++j) r = r * Word::generator(alphabet_, 2 * g0 + j);
  longRelator_ = r;

  for (int j = 0; j < t; ++j)
    torsionRelators_.push_back(
        Word::generator(alphabet_, 2 * g0 + j).pow(sig_.branchOrders[static_cast<size_t>(j)]));

  genus_ = riemannHurwitzGenus(sig_, group_.order());
}

GroupElement CoverSpec::phi(const Word& w) const {
  if (!compatibleAlphabets(w.alphabet(), alphabet_))
    throw Error(ErrorKind::Alphabet, "word not over the orbifold alphabet");
  GroupElement acc = group_.identity();
  for (Letter l : w.letters()) {
    if (l.gen >= static_cast<int>(images_.size()))
      throw Error(ErrorKind::Alphabet, "unknown orbifold generator");
    GroupElement g = images_[static_cast<size_t>(l.gen)];
    acc = group_.mul(acc, l.sign > 0 ? g : group_.inverse(g));
  }
  return acc;
}

}  // namespace cover
