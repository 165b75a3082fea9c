#include "cover/pipeline.hpp"

namespace cover {

Analysis analyze(const CoverSpec& spec, const std::vector<Word>& transversalOverride,
                 Stage stage, const TietzeOptions& opts) {
  Analysis a;
  a.spec = std::make_shared<const CoverSpec>(spec);
  Transversal t = transversalOverride.empty()
                      ? Transversal::bfs(*a.spec)
                      : Transversal::fromWords(*a.spec, transversalOverride);
  a.rewriting = std::make_unique<RewritingSystem>(*a.spec, std::move(t));
  a.presentation = a.rewriting->kernelPresentation();
  if (stage == Stage::RS) return a;

  a.trace = simplify(a.presentation, a.presentation.genus, opts);
  if (stage == Stage::Tietze) return a;

  a.basis = h1Basis(a.trace->final, a.presentation.genus, a.trace->survivors);
  a.action = homologyAction(*a.rewriting, *a.trace, *a.basis);
  if (stage == Stage::Homology) return a;

  a.lefschetz = lefschetzReport(*a.action, *a.spec);
  a.classification = classify(*a.action, *a.spec);
  return a;
}

}  // namespace cover
