#ifndef CURRMOD_WEIGHTS_HPP
#define CURRMOD_WEIGHTS_HPP

#include "currmod/rootsys.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace currmod {

/// A weight as its exact values on the simple Cartan elements h_1..h_n.
using Weight = std::vector<Rat>;

/// Integer offset in simple-root coordinates, relative to some anchor weight.
using OffsetVec = std::vector<int>;

Weight weight_add_offset(const RootSystem& rs, const Weight& w, const OffsetVec& off);
Weight weight_sum(const Weight& a, const Weight& b);

/// mu - nu as an integer root-lattice offset, if it is one.
std::optional<OffsetVec> weight_diff_offset(const RootSystem& rs, const Weight& mu,
                                            const Weight& nu);

OffsetVec offset_add(const OffsetVec& a, const OffsetVec& b);
OffsetVec offset_sub(const OffsetVec& a, const OffsetVec& b);
OffsetVec offset_neg(const OffsetVec& a);
std::string offset_str(const OffsetVec& o);

/// Weight-to-multiplicity map anchored at a base point. Offsets index
/// weights as base + offset (simple-root coordinates).
///
/// A finite diagram answers every query (0 off support). A windowed diagram
/// answers only inside its recorded exact region; everything else is
/// explicitly unknown rather than silently truncated.
struct WeightDiagram {
  enum class Extent { finite, windowed };

  Weight base;
  std::map<OffsetVec, long> mults; // strictly positive entries only
  Extent extent = Extent::finite;
  std::set<OffsetVec> exact; // windowed only: offsets with known values

  bool is_finite() const { return extent == Extent::finite; }
  long total_mass() const;

  /// Multiplicity at base + offset; nullopt when outside a window.
  std::optional<long> mult_at(const OffsetVec& off) const;
};

/// Pointwise convolution of two diagrams over a common root system.
/// At most one operand may be windowed; exactness is tracked per offset.
WeightDiagram convolve(const WeightDiagram& a, const WeightDiagram& b);

} // namespace currmod

#endif
