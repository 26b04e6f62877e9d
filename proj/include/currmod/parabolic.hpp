#ifndef CURRMOD_PARABOLIC_HPP
#define CURRMOD_PARABOLIC_HPP

#include "currmod/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace currmod {

/// The (Delta, T) certificate of a parabolic subset together with the height
/// function it induces: ht is additive, vanishes on T, and is 1 on Delta \ T.
class HeightFunction {
public:
  HeightFunction(RootSystemPtr rs, std::vector<int> base, std::uint32_t t_mask);

  /// Parabolic height of a root-lattice element (simple-root coordinates).
  long operator()(const RootCoords& mu) const;

  const std::vector<int>& base() const { return base_; }
  std::uint32_t t_mask() const { return t_mask_; }

private:
  RootSystemPtr rs_;
  std::vector<int> base_;
  std::uint32_t t_mask_;
  Mat base_inv_;
};

/// A parabolic subset P of Phi with its base certificate.
class ParabolicSet {
public:
  RootSystemPtr rs;
  RootMask members = 0;
  std::vector<int> base;   // certificate Delta as root indices, ascending
  std::uint32_t t_mask = 0; // positions of T within `base`

  bool contains(int root_index) const { return members & (RootMask(1) << root_index); }
  RootMask levi_mask() const;  // P intersect -P
  RootMask raise_mask() const; // P minus -P
  RootMask lower_mask() const; // -P minus P
  const HeightFunction& height() const;

private:
  friend ParabolicSet attach_certificate(RootSystemPtr, RootMask);
  mutable std::optional<HeightFunction> height_;
};

bool is_closed(const RootSystem& rs, RootMask subset);
bool is_parabolic(const RootSystem& rs, RootMask subset);

/// Subset closed under negation and its own reflections.
bool is_root_subsystem(const RootSystem& rs, RootMask subset);

/// The parabolic subset generated by a certificate:
/// positive roots of the base plus the span of -T.
RootMask parabolic_from_certificate(const RootSystem& rs, std::size_t base_pos,
                                    std::uint32_t t_mask);

/// All parabolic subsets by brute-force subset scan, each with a certificate.
/// Requires |Phi| <= 16. Deterministic: sorted by member mask.
std::vector<ParabolicSet> enumerate_parabolics(RootSystemPtr rs);

/// All parabolic member masks produced from (Delta, T) certificates alone.
std::vector<RootMask> parabolic_masks_from_certificates(const RootSystem& rs);

/// Finds a certificate for a parabolic mask (first match over bases in
/// lexicographic order, then T masks ascending) and wraps the result.
ParabolicSet attach_certificate(RootSystemPtr rs, RootMask members);

/// P = phi_f on (-phi_i) from a locally-finite/injective partition of Phi.
/// Validates the partition and the closure conclusions the construction
/// relies on, reporting a witnessing pair on violation.
ParabolicSet parabolic_from_partition(RootSystemPtr rs, RootMask phi_f, RootMask phi_i);

/// Convenience: the standard positive system as a parabolic set.
ParabolicSet borel_parabolic(RootSystemPtr rs);
/// P = Phi (the improper parabolic; levi is everything).
ParabolicSet full_parabolic(RootSystemPtr rs);

} // namespace currmod

#endif
