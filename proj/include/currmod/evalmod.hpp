#ifndef CURRMOD_EVALMOD_HPP
#define CURRMOD_EVALMOD_HPP

#include "currmod/realization.hpp"

#include <string>
#include <vector>

namespace currmod {

/// A g-module (or A1 block module) pulled back along evaluation at a
/// maximal ideal: (x (x) s) acts as s(M) x.
struct EvaluationFactor {
  RealizationPtr base; // over the base field (S of dimension 1)
  MaxCharacter point;
};

/// Realization of the factor over the character's algebra.
RealizationPtr evaluation_realization(const EvaluationFactor& f);

/// Action of x (x) s on a carrier vector of the factor, for an arbitrary
/// algebra element s in the character's parent basis.
SparseVec evaluation_action(const EvaluationFactor& f, const ChevElem& elem,
                            const std::vector<Rat>& s, int carrier);

/// Tensor product of evaluation factors at pairwise distinct maximal ideals,
/// with the Leibniz action of g (x) S across the slots.
class TensorModule {
public:
  std::vector<EvaluationFactor> factors;
  RealizationPtr mod; // the combined realization

  const WeightDiagram& diagram() const { return mod->diag; }

  /// Carrier index from per-factor indices (first factor fastest).
  int flatten(const std::vector<int>& parts) const;
  std::vector<int> unflatten(int carrier) const;
};

TensorModule tensor_eval(std::vector<EvaluationFactor> factors);

/// Convolution multiplicity at anchor + gamma; out-of-window outside the
/// exact region of a windowed diagram.
long weight_mult(const TensorModule& t, const OffsetVec& gamma);

/// Isomorphism invariant of Theorem-4.3 type: the multiset of
/// (structural tag, evaluation point) pairs, canonically sorted.
struct CanonicalForm {
  std::vector<std::string> factors; // sorted rendered factors
  std::string rendered;             // "[f1]x[f2]..."
  bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm iso_canonical_form(const TensorModule& t);

} // namespace currmod

#endif
