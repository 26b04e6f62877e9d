#ifndef CURRMOD_CLASSIFIER_HPP
#define CURRMOD_CLASSIFIER_HPP

#include "currmod/evalmod.hpp"

#include <string>
#include <variant>

namespace currmod {

/// Partition of Phi into locally finite and injective roots for a module.
struct RootClassification {
  RootSystemPtr rs;
  RootMask phi_f = 0;
  RootMask phi_i = 0;
  bool exact = true;  // false: windowed heuristic
  int window_bound = 0; // provenance when not exact
};

/// Exact classification from factor metadata: a root is locally finite iff
/// its root vector acts nilpotently on every factor. Finite-dimensional
/// factors are nilpotent for every root; a dense factor is injective for
/// both roots of its sl2.
RootClassification classify_exact(const TensorModule& t);

/// Heuristic classification by scanning root strings of a diagram on the
/// tail (bound/2, bound] from a support point lambda0 (an offset into the
/// diagram). Clearly labelled windowed provenance; never acceptance-grade.
RootClassification classify_window(const RootSystemPtr& rs, const WeightDiagram& diagram,
                                   const OffsetVec& lambda0, int bound);

/// Outcome of the classification trichotomy.
struct TrichotomyFinite {};
struct TrichotomyDense {};
using Trichotomy = std::variant<TrichotomyFinite, TrichotomyDense, ParabolicSet>;

/// Case (i) when every root is locally finite, case (ii) when every root is
/// injective, otherwise the proper parabolic built from the partition.
/// Requires an exact classification.
Trichotomy trichotomy(const RootClassification& c);

std::string trichotomy_name(const Trichotomy& t);

} // namespace currmod

#endif
