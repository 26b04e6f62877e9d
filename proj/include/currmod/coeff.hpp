#ifndef CURRMOD_COEFF_HPP
#define CURRMOD_COEFF_HPP

#include "currmod/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace currmod {

class CoeffAlgebra;
using CoeffAlgebraPtr = std::shared_ptr<const CoeffAlgebra>;

/// An algebra character S -> Q given by its values on the basis.
struct MaxCharacter {
  CoeffAlgebraPtr parent;
  std::vector<Rat> values; // values[i] = chi(s_i), values[0] = 1

  Rat operator()(std::size_t basis_index) const { return values[basis_index]; }
};

/// A finite-dimensional commutative unital Q-algebra in a fixed basis
/// s_0 = 1, s_1, ..., s_{d-1}. All constructed algebras are quotients
/// Q[t]/(f) with f split over Q, in the monomial basis.
class CoeffAlgebra {
public:
  enum class Kind { points, truncated, split_poly };

  Kind kind;
  std::vector<std::string> labels; // "1", "t", "t^2", ...
  // mult[i][j] = coordinates of s_i * s_j over the basis
  std::vector<std::vector<std::vector<Rat>>> mult;
  std::string descriptor; // canonical CLI descriptor, e.g. "points:0,1"

  std::size_t dim() const { return labels.size(); }

  std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  std::vector<Rat> unit() const;
  std::vector<Rat> basis_vec(std::size_t i) const;

  const std::vector<Rat>& branch_points() const { return points_; }

private:
  friend CoeffAlgebraPtr make_points_algebra(const std::vector<Rat>&);
  friend CoeffAlgebraPtr make_truncated(int);
  friend CoeffAlgebraPtr make_split_poly(const std::vector<std::pair<Rat, int>>&);
  std::vector<Rat> points_; // distinct branch points
};

/// All algebra characters S -> Q, one per distinct branch point, in
/// branch-point order.
std::vector<MaxCharacter> characters(const CoeffAlgebraPtr& s);

/// S = Q[t] / prod (t - a_i) for pairwise distinct points a_i.
CoeffAlgebraPtr make_points_algebra(const std::vector<Rat>& points);

/// S = Q[t] / (t^n).
CoeffAlgebraPtr make_truncated(int n);

/// S = Q[t] / prod (t - a_i)^{m_i} for distinct a_i and multiplicities m_i >= 1.
CoeffAlgebraPtr make_split_poly(const std::vector<std::pair<Rat, int>>& branches);

/// Linear extension of the character values; errors on mismatched parents.
Rat evaluate(const CoeffAlgebraPtr& parent, const std::vector<Rat>& element,
             const MaxCharacter& chi);

/// Parses "points:a1,a2,..." or "trunc:n".
CoeffAlgebraPtr parse_algebra(const std::string& descriptor);

} // namespace currmod

#endif
