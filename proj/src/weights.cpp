#include "currmod/weights.hpp"

#include "currmod/error.hpp"

#include <sstream>

namespace currmod {

Weight weight_add_offset(const RootSystem& rs, const Weight& w, const OffsetVec& off) {
  Weight out = w;
  for (int j = 0; j < rs.rank; ++j) {
    Rat delta = 0;
    for (int i = 0; i < rs.rank; ++i)
      if (off[i] != 0) delta += Rat(off[i]) * Rat(rs.cartan[i][j]);
    out[j] += delta;
  }
  return out;
}

Weight weight_sum(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

std::optional<OffsetVec> weight_diff_offset(const RootSystem& rs, const Weight& mu,
                                            const Weight& nu) {
  // Solve offset^T C = mu - nu over the rationals, then require integrality.
  const int n = rs.rank;
  Mat ct(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct.at(j, i) = rs.cartan[i][j];
  std::vector<Rat> rhs(n);
  for (int j = 0; j < n; ++j) rhs[j] = mu[j] - nu[j];
  auto x = solve_unique(ct, rhs);
  if (!x) return std::nullopt;
  OffsetVec out(n);
  for (int i = 0; i < n; ++i) {
    if (!is_integer((*x)[i])) return std::nullopt;
    out[i] = static_cast<int>(to_long((*x)[i]));
  }
  return out;
}

OffsetVec offset_add(const OffsetVec& a, const OffsetVec& b) {
  OffsetVec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

OffsetVec offset_sub(const OffsetVec& a, const OffsetVec& b) {
  OffsetVec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

OffsetVec offset_neg(const OffsetVec& a) {
  OffsetVec out = a;
  for (auto& x : out) x = -x;
  return out;
}

std::string offset_str(const OffsetVec& o) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) os << ',';
    os << o[i];
  }
  os << ')';
  return os.str();
}

long WeightDiagram::total_mass() const {
  if (!is_finite()) fail(ErrorCode::out_of_window, "total mass of a windowed diagram");
  long m = 0;
  for (const auto& [off, mult] : mults) m += mult;
  return m;
}

std::optional<long> WeightDiagram::mult_at(const OffsetVec& off) const {
  if (extent == Extent::windowed && !exact.count(off)) return std::nullopt;
  auto it = mults.find(off);
  return it == mults.end() ? 0 : it->second;
}

WeightDiagram convolve(const WeightDiagram& a, const WeightDiagram& b) {
  if (!a.is_finite() && !b.is_finite())
    fail(ErrorCode::out_of_window, "convolution of two windowed diagrams is not representable");
  const WeightDiagram& fin = a.is_finite() ? a : b;
  const WeightDiagram& other = a.is_finite() ? b : a;

  WeightDiagram out;
  out.base = weight_sum(a.base, b.base);
  out.extent = other.is_finite() ? WeightDiagram::Extent::finite : WeightDiagram::Extent::windowed;

  if (other.is_finite()) {
    for (const auto& [oa, ma] : fin.mults)
      for (const auto& [ob, mb] : other.mults) out.mults[offset_add(oa, ob)] += ma * mb;
    return out;
  }

  // Windowed operand: an output offset is exact iff every translate it needs
  // lies in the window of the windowed factor.
  std::set<OffsetVec> candidates;
  for (const auto& off : other.exact)
    for (const auto& [oa, ma] : fin.mults) candidates.insert(offset_add(oa, off));
  for (const auto& gamma : candidates) {
    bool all_known = true;
    long total = 0;
    for (const auto& [oa, ma] : fin.mults) {
      auto m = other.mult_at(offset_sub(gamma, oa));
      if (!m) {
        all_known = false;
        break;
      }
      total += ma * *m;
    }
    if (all_known) {
      out.exact.insert(gamma);
      if (total != 0) out.mults[gamma] = total;
    }
  }
  return out;
}

} // namespace currmod
