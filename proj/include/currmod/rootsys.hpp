#ifndef CURRMOD_ROOTSYS_HPP
#define CURRMOD_ROOTSYS_HPP

#include "currmod/linalg.hpp"
#include "currmod/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace currmod {

/// Roots live in simple-root integer coordinates.
using RootCoords = std::vector<int>;

/// Subsets of the root list as bitmasks over canonical root indices.
using RootMask = std::uint32_t;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

/// A finite root system with exact pairing data.
///
/// Roots are listed in a canonical order (height in the standard base, then
/// lexicographic on coordinates), which fixes the meaning of every RootMask.
class RootSystem {
public:
  Series series;
  int rank;
  std::vector<RootCoords> roots;       // canonical order
  std::vector<std::vector<int>> cartan; // cartan[i][j] = <alpha_i, alpha_j^v>
  Mat gram;                             // (alpha_i, alpha_j), exact rationals

  std::size_t count() const { return roots.size(); }
  RootMask full_mask() const { return (count() == 32) ? ~RootMask(0) : ((RootMask(1) << count()) - 1); }

  /// Index of a root given its coordinates; -1 if not a root.
  int index_of(const RootCoords& c) const;
  int negative_of(int root_index) const { return neg_index_[root_index]; }

  /// Sum of simple-root coordinates.
  int height(int root_index) const;

  /// <mu, alpha_j^v> for mu in the root lattice (simple-root coordinates).
  Rat pair_with_coroot(const RootCoords& mu, int j) const;

  /// Simple reflection s_j applied to a lattice element.
  RootCoords reflect_simple(const RootCoords& mu, int j) const;
  /// Reflection in an arbitrary root.
  RootCoords reflect(const RootCoords& mu, int root_index) const;

  /// (mu, nu) for lattice elements in simple-root coordinates.
  Rat pairing(const RootCoords& mu, const RootCoords& nu) const;

  RootMask negate_mask(RootMask m) const;
  bool is_type_a() const { return series == Series::A; }

  std::string type_name() const;

  /// All bases (Weyl images of the standard base), each a sorted vector of
  /// root indices, the whole list sorted lexicographically.
  const std::vector<std::vector<int>>& bases() const;

  /// Coordinates of every root in the given base (rows = roots).
  /// Entries are exact integers stored as Rat.
  const Mat& base_coords(std::size_t base_pos) const;

private:
  friend std::shared_ptr<const RootSystem> build_root_system(Series, int);
  std::vector<int> neg_index_;
  std::map<RootCoords, int> index_;
  mutable std::vector<std::vector<int>> bases_;
  mutable std::vector<Mat> base_coords_;
  void ensure_bases() const;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Supported types: A1..A4, B2, G2. Anything else: unsupported-type.
RootSystemPtr build_root_system(Series series, int rank);
RootSystemPtr build_root_system(const std::string& type_name); // e.g. "A2"

/// One generator of the Chevalley basis: a root vector or a simple Cartan element.
struct ChevElem {
  enum class Kind { root, cartan } kind;
  int index; // root index, or simple-root index for h_i
  auto operator<=>(const ChevElem& other) const = default;
};

inline ChevElem root_elem(int i) { return {ChevElem::Kind::root, i}; }
inline ChevElem cartan_elem(int i) { return {ChevElem::Kind::cartan, i}; }

/// Integer linear combination of basis elements.
using BracketTerms = std::vector<std::pair<ChevElem, long long>>;

/// Chevalley structure constants for type A, fixed by the matrix-unit
/// realization x_{e_i - e_j} = E_ij. Signs are canonical and reproducible.
class ChevalleyBasis {
public:
  explicit ChevalleyBasis(RootSystemPtr rs);

  const RootSystemPtr& root_system() const { return rs_; }

  /// [u, v] as an integer combination of basis elements (possibly empty).
  const BracketTerms& bracket(const ChevElem& u, const ChevElem& v) const;

  /// h_alpha expanded over the simple Cartan elements h_1..h_n.
  const std::vector<long long>& coroot_coeffs(int root_index) const;

  /// alpha(h_j) for a lattice element given by simple-root coordinates.
  long long eval_on_simple_cartan(const RootCoords& mu, int j) const;

  std::vector<ChevElem> all_elems() const;

private:
  RootSystemPtr rs_;
  int matrix_size_; // n+1 for A_n
  std::vector<std::pair<int, int>> root_unit_; // root index -> (i, j) of E_ij
  std::map<std::pair<ChevElem, ChevElem>, BracketTerms> table_;
  std::vector<std::vector<long long>> coroots_;

  BracketTerms compute_bracket(const ChevElem& u, const ChevElem& v) const;
};

using ChevalleyBasisPtr = std::shared_ptr<const ChevalleyBasis>;

ChevalleyBasisPtr make_chevalley_basis(RootSystemPtr rs);

} // namespace currmod

#endif
