#ifndef COVER_PIPELINE_HPP
#define COVER_PIPELINE_HPP

#include <memory>
#include <optional>

#include "cover/adapted.hpp"
#include "cover/homology.hpp"
#include "cover/tietze.hpp"

namespace cover {

enum class Stage { RS, Tietze, Homology, Full };

// Everything the pipeline produced up to the requested stage. The spec is
// heap-held so the rewriting system's back-reference survives moves.
struct Analysis {
  std::shared_ptr<const CoverSpec> spec;
  std::unique_ptr<RewritingSystem> rewriting;
  KernelPresentation presentation;
  std::optional<SimplificationTrace> trace;       // Tietze and beyond
  std::optional<HomologyBasis> basis;             // Homology and beyond
  std::optional<HomologyAction> action;
  std::optional<FixedPointReport> lefschetz;      // Full only
  std::optional<AdaptedClassification> classification;
};

// Runs transversal -> rewriting -> simplification -> homology -> Lefschetz +
// classification, stopping after `stage`. An empty override selects the
// default BFS transversal.
Analysis analyze(const CoverSpec& spec, const std::vector<Word>& transversalOverride,
                 Stage stage, const TietzeOptions& opts = {});

}  // namespace cover

#endif
