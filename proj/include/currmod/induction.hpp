#ifndef CURRMOD_INDUCTION_HPP
#define CURRMOD_INDUCTION_HPP

#include "currmod/realization.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace currmod {

/// Canonical PBW monomial: a weakly decreasing word in the lowering alphabet
/// applied to a Levi-module basis vector.
struct PBWMonomial {
  std::vector<int> letters; // lowering-alphabet ids, weakly decreasing
  int tail = 0;             // W basis index
  auto operator<=>(const PBWMonomial&) const = default;
};

using RaisingWord = std::vector<int>; // raising-alphabet ids, applied right to left
using MonCombo = std::map<PBWMonomial, Rat>;

/// The generalized Verma module M_P(W) over g (x) S together with the exact
/// computation of dim L_P(W) at each weight via raising-word pairings.
///
/// Weights gamma are addressed as integer offsets from the anchor weight of
/// W (its first basis vector) in simple-root coordinates.
///
/// All results are exact when W is finite dimensional. For a windowed W the
/// reported dimensions are window-truncated lower bounds; exact() reports
/// which regime applies.
class InducedModule {
public:
  InducedModule(ChevalleyBasisPtr chev, ParabolicSet p, CoeffAlgebraPtr s, RealizationPtr w);

  const ParabolicSet& parabolic() const { return p_; }
  const CoeffAlgebraPtr& coeff() const { return s_; }
  const RealizationPtr& levi_w() const { return w_; }
  const Weight& anchor() const { return w_->anchor; }
  bool exact() const { return exact_; }

  /// Alphabet letters are (root index, S basis index), ordered by
  /// (canonical root index, basis index).
  const std::vector<std::pair<int, int>>& lowering_alphabet() const { return lower_; }
  const std::vector<std::pair<int, int>>& raising_alphabet() const { return raise_; }

  /// Parabolic height of a weight offset.
  long height_of(const OffsetVec& gamma) const;

  /// All canonical monomials of weight anchor + gamma, sorted.
  std::vector<PBWMonomial> verma_weight_basis(const OffsetVec& gamma) const;

  /// All raising words whose root-sum height cancels ht(gamma).
  /// Requires ht(gamma) <= 0.
  std::vector<RaisingWord> raising_words(const OffsetVec& gamma) const;

  /// word . m, an element of the height-0 component, in W coordinates.
  /// Requires ht(word) + ht(m) = 0.
  std::vector<Rat> straighten_apply(const RaisingWord& word, const PBWMonomial& m) const;

  /// dim L_P(W)_gamma: the rank of the pairing matrix between the weight
  /// basis of M and the raising words.
  long simple_quotient_mult(const OffsetVec& gamma) const;

  /// Dimension of the joint kernel of all single-letter raising operators
  /// on the computed quotient at gamma. Requires ht(gamma) < 0.
  long n_plus_invariants_dim(const OffsetVec& gamma) const;

  /// Offsets with nonempty weight basis and height in [-max_depth, 0],
  /// sorted by (depth, offset).
  std::vector<OffsetVec> support_offsets(int max_depth) const;

  /// Pairing data of one weight level.
  struct LevelInfo {
    std::vector<PBWMonomial> monomials;
    Mat pairing; // rows = monomials, cols = (word, W index) pairs
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows; // monomials mapping to a basis of L
  };
  const LevelInfo& level(const OffsetVec& gamma) const;

  /// (x_u (x) s_b) . m as a combination of canonical monomials.
  MonCombo apply_element(const ChevElem& u, int s_index, const PBWMonomial& m) const;

  /// Coordinates of a monomial combination at level gamma over the pivot
  /// basis of L_gamma (empty when dim L_gamma = 0).
  std::vector<Rat> project_to_quotient(const OffsetVec& gamma, const MonCombo& v) const;

private:
  ChevalleyBasisPtr chev_;
  RootSystemPtr rs_;
  ParabolicSet p_;
  CoeffAlgebraPtr s_;
  RealizationPtr w_;
  bool exact_ = true;

  std::vector<std::pair<int, int>> lower_, raise_;
  std::map<std::pair<int, int>, int> lower_id_;
  RootMask levi_mask_ = 0, raise_mask_ = 0, lower_mask_ = 0;

  mutable std::mutex mutex_;
  mutable std::map<std::tuple<ChevElem, int, PBWMonomial>, MonCombo> apply_memo_;
  mutable std::map<OffsetVec, std::vector<PBWMonomial>> basis_memo_;
  mutable std::map<OffsetVec, LevelInfo> level_memo_;

  MonCombo apply_impl(const ChevElem& u, int s_index, const PBWMonomial& m) const;
  MonCombo apply_to_combo(const ChevElem& u, int s_index, const MonCombo& c,
                          const Rat& scale) const;
  const std::vector<PBWMonomial>& basis_impl(const OffsetVec& gamma) const;
  const LevelInfo& level_impl(const OffsetVec& gamma) const;
  std::vector<RaisingWord> words_impl(const OffsetVec& gamma) const;
  std::vector<Rat> straighten_impl(const RaisingWord& word, const PBWMonomial& m) const;
  std::vector<Rat> project_impl(const OffsetVec& gamma, const MonCombo& v) const;
  OffsetVec monomial_offset(const PBWMonomial& m) const;
};

} // namespace currmod

#endif
