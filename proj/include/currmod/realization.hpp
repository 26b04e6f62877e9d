#ifndef CURRMOD_REALIZATION_HPP
#define CURRMOD_REALIZATION_HPP

#include "currmod/coeff.hpp"
#include "currmod/parabolic.hpp"
#include "currmod/weights.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>

namespace currmod {

using SparseVec = std::vector<std::pair<int, Rat>>;

/// Identity of a module up to isomorphism within a fixed parabolic
/// presentation; the data the Theorem-4.3-style canonical form compares.
struct StructuralTag {
  enum class Kind { highest_weight, dense };
  Kind kind;
  std::vector<Rat> params; // hw: fundamental coordinates; dense: {lambda, tau}
  std::string render() const;
  auto operator<=>(const StructuralTag&) const = default;
};

/// An explicit weight module over a current subalgebra a (x) S, with a a
/// subalgebra of the ambient g containing h. Carrier vectors are weight
/// vectors; every generator action is stored as an exact sparse matrix.
///
/// Windowed realizations (the dense sl2 family and anything built from it)
/// materialize a finite index window. Applying a generator that would leave
/// the window is an explicit out-of-window error, never a truncation.
class Realization {
public:
  RootSystemPtr rs;
  ChevalleyBasisPtr chev;
  CoeffAlgebraPtr coeff;       // the S the action is defined over
  RootMask supported = 0;      // roots alpha with x_alpha acting
  int dim = 0;                 // carrier size
  Weight anchor;               // diagram base point
  std::vector<OffsetVec> offsets; // weight of carrier k = anchor + offsets[k]
  std::vector<Weight> weights;    // cached anchor + offsets[k]
  bool windowed = false;
  std::optional<StructuralTag> tag;
  WeightDiagram diag;

  /// Action of a generator (x) s_b on carrier vector k.
  /// Throws out-of-window when the image is not representable.
  const SparseVec& apply(const ChevElem& elem, int s_index, int carrier) const;

  /// Action of (sum_i combo[i] h_i) (x) s_b on carrier vector k.
  SparseVec apply_cartan_combo(const std::vector<Rat>& combo, int s_index, int carrier) const;

  /// Dense matrix of a generator action; requires every column representable.
  Mat action_matrix(const ChevElem& elem, int s_index) const;

  bool supports(const ChevElem& elem) const;

  struct ActionTable {
    std::vector<SparseVec> cols;
    std::vector<char> valid;
  };
  std::map<std::pair<ChevElem, int>, ActionTable> actions;

  /// Fills weights/diag once supported, dim, anchor, offsets are set.
  void finalize();
};

using RealizationPtr = std::shared_ptr<const Realization>;

/// The infinite-dimensional simple sl2 family on carrier {v_k}, materialized
/// on |k| <= window:
///   h v_k = (lambda + 2k) v_k,  f v_k = v_{k-1},  e v_k = c_k v_{k+1},
///   c_k = tau - k (lambda + k + 1).
/// Rejects parameters with some c_k = 0 (k integer), certified by exact
/// discriminant analysis.
RealizationPtr dense_sl2(ChevalleyBasisPtr chev, const Rat& lambda, const Rat& tau, int window);

/// Simple finite-dimensional module of highest weight lambda (dominant
/// integral, fundamental coordinates), with explicit generator matrices.
/// Built by Borel induction over the base field; requires the Weyl
/// dimension to be at most 200.
RealizationPtr highest_weight_module(ChevalleyBasisPtr chev, const std::vector<long>& lambda);

/// The semisimple part of a Levi module: a module over the sl2-block of a
/// single levi root pair, given by a realization over A1 (same S).
struct LeviBlock {
  int root_index; // positive root of the block in the ambient system
  RealizationPtr u;
};

/// Canonical basis of the centre {z in h : alpha(z) = 0 for levi alpha},
/// as coefficient vectors over h_1..h_n (rref rows, denominator-cleared).
std::vector<std::vector<Rat>> center_basis(const RootSystem& rs, RootMask levi);

/// The l (x) S module U (x) k_chi: the block acts through `block` (if any)
/// and the centre acts by the character chi, a matrix indexed by
/// (center_basis row, S basis element).
RealizationPtr levi_module(ChevalleyBasisPtr chev, const ParabolicSet& p, CoeffAlgebraPtr s,
                           const std::optional<LeviBlock>& block, const Mat& chi);

/// One-dimensional module for a parabolic with abelian Levi, taking the
/// given fundamental coordinates at each character of S (coords grouped per
/// character, rank entries each).
RealizationPtr borel_weight_module(ChevalleyBasisPtr chev, const ParabolicSet& p,
                                   CoeffAlgebraPtr s, const std::vector<long>& coords);

} // namespace currmod

#endif
