#include "cover/schreier.hpp"

#include <deque>

#include "cover/error.hpp"

namespace cover {

Transversal Transversal::bfsImpl(const CoverSpec& spec, bool reversed) {
  const FiniteGroup& g = spec.group();
  const int n = g.order();
  const int m = spec.alphabet()->size();
  std::vector<Word> reps(static_cast<size_t>(n), Word::identity(spec.alphabet()));
  std::vector<bool> have(static_cast<size_t>(n), false);
  have[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < m; ++i) {
      int gi = reversed ? m - 1 - i : i;
      GroupElement next = g.mul(GroupElement{cur}, spec.generatorImage(gi));
      if (have[static_cast<size_t>(next.index)]) continue;
      have[static_cast<size_t>(next.index)] = true;
      reps[static_cast<size_t>(next.index)] =
          reps[static_cast<size_t>(cur)] * Word::generator(spec.alphabet(), gi);
      queue.push_back(next.index);
    }
  }
  for (bool h : have)
    if (!h)
      throw Error(ErrorKind::Integrity, "generating vector does not reach all cosets");
  return Transversal(std::move(reps));
}

Transversal Transversal::bfs(const CoverSpec& spec) { return bfsImpl(spec, false); }
Transversal Transversal::bfsReversed(const CoverSpec& spec) { return bfsImpl(spec, true); }

Transversal Transversal::fromWords(const CoverSpec& spec,
                                   const std::vector<Word>& words) {
  const int n = spec.group().order();
  if (static_cast<int>(words.size()) != n)
    throw Error(ErrorKind::Transversal,
                "transversal needs exactly " + std::to_string(n) + " words");

  std::vector<Word> reps(static_cast<size_t>(n), Word::identity(spec.alphabet()));
  std::vector<bool> have(static_cast<size_t>(n), false);
  for (const Word& w : words) {
    GroupElement q = spec.phi(w);
    if (have[static_cast<size_t>(q.index)])
      throw Error(ErrorKind::Transversal,
                  "two transversal words map to the same coset: " + w.str());
    have[static_cast<size_t>(q.index)] = true;
    reps[static_cast<size_t>(q.index)] = w;
  }

  // Schreier property: every prefix of a rep is a rep.
  for (const Word& w : words) {
    for (int len = 0; len < w.size(); ++len) {
      Word prefix(spec.alphabet(),
                  std::vector<Letter>(w.letters().begin(), w.letters().begin() + len));
      GroupElement q = spec.phi(prefix);
      if (reps[static_cast<size_t>(q.index)] != prefix)
        throw Error(ErrorKind::Transversal,
                    "Schreier property fails: prefix '" + prefix.str() + "' of '" +
                        w.str() + "' is not a representative");
    }
  }
  if (!reps[0].empty())
    throw Error(ErrorKind::Transversal, "identity coset representative must be empty");
  return Transversal(std::move(reps));
}

namespace {

// Compact display of a coset representative inside a generator name:
// letters juxtaposed, ~ marks an inverse letter, "1" for the identity.
std::string compactRep(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    out += w.alphabet()->name(l.gen);
    if (l.sign < 0) out += '~';
  }
  return out;
}

}  // namespace

RewritingSystem::RewritingSystem(const CoverSpec& spec, Transversal transversal)
    : spec_(&spec), transversal_(std::move(transversal)) {
  const FiniteGroup& g = spec.group();
  const int n = g.order();
  const int m = spec.alphabet()->size();

  auto kernel = std::make_shared<Alphabet>();
  gens_.reserve(static_cast<size_t>(n) * m);
  // y-major order so generators group by orbifold letter, as in hand
  // computations (all a-generators, then b-generators, ...).
  for (int y = 0; y < m; ++y) {
    for (int k = 0; k < n; ++k) {
      const Word& repK = transversal_.rep(GroupElement{k});
      GroupElement target = g.mul(GroupElement{k}, spec.generatorImage(y));
      Word value = repK * Word::generator(spec.alphabet(), y) *
                   transversal_.rep(target).inverse();
      SchreierGenerator sg{k, y, value, value.empty(), -1};
      if (!sg.trivial) {
        sg.kernelIndex =
            kernel->add("S{" + compactRep(repK) + "," + spec.alphabet()->name(y) + "}");
        kernelToTable_.push_back(static_cast<int>(gens_.size()));
      }
      gens_.push_back(std::move(sg));
    }
  }
  kernelAlphabet_ = kernel;
}

const SchreierGenerator& RewritingSystem::schreierGenerator(GroupElement k,
                                                            int gen) const {
  return gens_[static_cast<size_t>(gen) * spec_->group().order() + k.index];
}

Word RewritingSystem::rewrite(const Word& w) const {
  const FiniteGroup& g = spec_->group();
  if (spec_->phi(w) != g.identity())
    throw Error(ErrorKind::NotInKernel, "tau applied to '" + w.str() +
                                            "', which is not in ker(phi)");
  std::vector<Letter> out;
  GroupElement running = g.identity();
  for (Letter l : w.letters()) {
    GroupElement image = spec_->generatorImage(l.gen);
    GroupElement k;
    if (l.sign > 0) {
      k = running;
      running = g.mul(running, image);
    } else {
      running = g.mul(running, g.inverse(image));
      k = running;
    }
    const SchreierGenerator& sg = schreierGenerator(k, l.gen);
    if (!sg.trivial) {
      // push reduced
      if (!out.empty() && out.back().gen == sg.kernelIndex && out.back().sign == -l.sign)
        out.pop_back();
      else
        out.push_back(Letter{sg.kernelIndex, l.sign});
    }
  }
  return Word(kernelAlphabet_, std::move(out));
}

Word RewritingSystem::expand(const Word& kernelWord) const {
  Word out = Word::identity(spec_->alphabet());
  for (Letter l : kernelWord.letters()) {
    const SchreierGenerator& sg = gens_[static_cast<size_t>(
        kernelToTable_[static_cast<size_t>(l.gen)])];
    out = out * (l.sign > 0 ? sg.value : sg.value.inverse());
  }
  return out;
}

KernelPresentation RewritingSystem::kernelPresentation() const {
  const FiniteGroup& g = spec_->group();
  const int n = g.order();

  KernelPresentation p;
  p.alphabet = kernelAlphabet_;
  p.genus = spec_->genus();
  p.groupOrder = n;
  p.branchSourceStart = 2 * spec_->signature().quotientGenus;
  for (int idx : kernelToTable_) {
    p.generatorValues.push_back(gens_[static_cast<size_t>(idx)].value);
    p.generatorSource.push_back(gens_[static_cast<size_t>(idx)].gen);
  }

  auto addRelators = [&](const Word& r) {
    for (int k = 0; k < n; ++k) {
      const Word& repK = transversal_.rep(GroupElement{k});
      Word rel = rewrite(repK * r * repK.inverse());
      Word core = rel.cyclicReduced().first;
      if (!core.empty()) p.relators.push_back(core);
    }
  };
  addRelators(spec_->longRelator());
  for (const Word& t : spec_->torsionRelators()) addRelators(t);
  return p;
}

}  // namespace cover
