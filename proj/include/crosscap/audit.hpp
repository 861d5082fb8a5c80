#pragma once

#include <string>

#include "crosscap/characterize.hpp"
#include "crosscap/search.hpp"

namespace crosscap {

// Lemmas with an audit: separating-pair, characteristic-tree,
// component-tree, prop-max-abel.
struct AuditOptions {
  int max_curves = 2;
  int corpus_crossings = 3;  // crossing cap of the enumerated corpus
  SearchBudget budget;       // budget of every checker search
  int jobs = 1;
};

// Runs a checker and the cut-and-classify oracle over every corpus
// configuration. Byte-identical output for any jobs value. A lemma whose
// hypotheses exclude the ambient reports status "NotApplicable".
Json equivalence_audit(const SurfaceInvariants& ambient, const std::string& lemma, const AuditOptions& options);

bool known_audit(const std::string& lemma);

}  // namespace crosscap
