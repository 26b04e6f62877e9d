#include "currmod/parabolic.hpp"

#include "currmod/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace currmod {

namespace {

std::string coords_str(const RootCoords& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

} // namespace

HeightFunction::HeightFunction(RootSystemPtr rs, std::vector<int> base, std::uint32_t t_mask)
    : rs_(std::move(rs)), base_(std::move(base)), t_mask_(t_mask) {
  const int n = rs_->rank;
  Mat b(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) b.at(r, c) = rs_->roots[base_[c]][r];
  auto inv = inverse(b);
  if (!inv) fail(ErrorCode::invalid_argument, "certificate base is degenerate");
  base_inv_ = std::move(*inv);
}

long HeightFunction::operator()(const RootCoords& mu) const {
  const int n = rs_->rank;
  long h = 0;
  for (int i = 0; i < n; ++i) {
    if (t_mask_ & (1u << i)) continue; // delta_i contributes 0
    Rat d = 0;
    for (int k = 0; k < n; ++k) d += base_inv_.at(i, k) * Rat(mu[k]);
    if (!is_integer(d))
      fail(ErrorCode::invalid_argument, "element " + coords_str(mu) + " is not in the root lattice");
    h += to_long(d);
  }
  return h;
}

RootMask ParabolicSet::levi_mask() const { return members & rs->negate_mask(members); }
RootMask ParabolicSet::raise_mask() const { return members & ~rs->negate_mask(members); }
RootMask ParabolicSet::lower_mask() const { return rs->negate_mask(members) & ~members; }

const HeightFunction& ParabolicSet::height() const {
  if (!height_) {
    std::vector<int> b = base;
    height_.emplace(rs, std::move(b), t_mask);
  }
  return *height_;
}

bool is_closed(const RootSystem& rs, RootMask subset) {
  const std::size_t n = rs.count();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(subset & (RootMask(1) << i))) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (!(subset & (RootMask(1) << j))) continue;
      RootCoords sum = rs.roots[i];
      for (int k = 0; k < rs.rank; ++k) sum[k] += rs.roots[j][k];
      int s = rs.index_of(sum);
      if (s >= 0 && !(subset & (RootMask(1) << s))) return false;
    }
  }
  return true;
}

bool is_parabolic(const RootSystem& rs, RootMask subset) {
  return is_closed(rs, subset) && (subset | rs.negate_mask(subset)) == rs.full_mask();
}

bool is_root_subsystem(const RootSystem& rs, RootMask subset) {
  const std::size_t n = rs.count();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(subset & (RootMask(1) << i))) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(subset & (RootMask(1) << j))) continue;
      int img = rs.index_of(rs.reflect(rs.roots[j], static_cast<int>(i)));
      if (img < 0 || !(subset & (RootMask(1) << img))) return false;
    }
  }
  return true;
}

RootMask parabolic_from_certificate(const RootSystem& rs, std::size_t base_pos,
                                    std::uint32_t t_mask) {
  const Mat& coords = rs.base_coords(base_pos);
  RootMask out = 0;
  for (std::size_t r = 0; r < rs.count(); ++r) {
    bool all_nonneg = true, all_nonpos = true, support_in_t = true;
    for (int i = 0; i < rs.rank; ++i) {
      const Rat& v = coords.at(r, i);
      if (v < 0) all_nonneg = false;
      if (v > 0) all_nonpos = false;
      if (v != 0 && !(t_mask & (1u << i))) support_in_t = false;
    }
    if (all_nonneg || (all_nonpos && support_in_t)) out |= RootMask(1) << r;
  }
  return out;
}

std::vector<RootMask> parabolic_masks_from_certificates(const RootSystem& rs) {
  std::set<RootMask> seen;
  const auto& bases = rs.bases();
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (std::uint32_t t = 0; t < (1u << rs.rank); ++t)
      seen.insert(parabolic_from_certificate(rs, b, t));
  return {seen.begin(), seen.end()};
}

ParabolicSet attach_certificate(RootSystemPtr rs, RootMask members) {
  const auto& bases = rs->bases();
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (std::uint32_t t = 0; t < (1u << rs->rank); ++t)
      if (parabolic_from_certificate(*rs, b, t) == members) {
        ParabolicSet p;
        p.rs = rs;
        p.members = members;
        p.base = bases[b];
        p.t_mask = t;
        return p;
      }
  fail(ErrorCode::closure_violation, "subset has no (Delta, T) certificate: not parabolic");
}

std::vector<ParabolicSet> enumerate_parabolics(RootSystemPtr rs) {
  if (rs->count() > 16)
    fail(ErrorCode::too_large, "exhaustive parabolic scan limited to |Phi| <= 16, got " +
                                   std::to_string(rs->count()));
  std::vector<ParabolicSet> out;
  const RootMask full = rs->full_mask();
  for (RootMask m = 0; m <= full; ++m) {
    if (is_parabolic(*rs, m)) out.push_back(attach_certificate(rs, m));
    if (m == full) break; // RootMask may be narrow
  }
  return out;
}

ParabolicSet parabolic_from_partition(RootSystemPtr rs, RootMask phi_f, RootMask phi_i) {
  const RootMask full = rs->full_mask();
  if ((phi_f & phi_i) != 0 || (phi_f | phi_i) != full)
    fail(ErrorCode::not_a_partition, "phi_f and phi_i must partition the root system");

  auto check_closed = [&](RootMask s, const char* name) {
    for (std::size_t i = 0; i < rs->count(); ++i) {
      if (!(s & (RootMask(1) << i))) continue;
      for (std::size_t j = i; j < rs->count(); ++j) {
        if (!(s & (RootMask(1) << j))) continue;
        RootCoords sum = rs->roots[i];
        for (int k = 0; k < rs->rank; ++k) sum[k] += rs->roots[j][k];
        int idx = rs->index_of(sum);
        if (idx >= 0 && !(s & (RootMask(1) << idx)))
          fail(ErrorCode::closure_violation,
               std::string(name) + " is not closed: witnessed by " + coords_str(rs->roots[i]) +
                   " + " + coords_str(rs->roots[j]));
      }
    }
  };
  check_closed(phi_i, "phi_i");
  check_closed(phi_f, "phi_f");

  // No root may be the sum of a two-sided-finite and a two-sided-injective root.
  RootMask f2 = phi_f & rs->negate_mask(phi_f);
  RootMask i2 = phi_i & rs->negate_mask(phi_i);
  for (std::size_t a = 0; a < rs->count(); ++a) {
    if (!(f2 & (RootMask(1) << a))) continue;
    for (std::size_t b = 0; b < rs->count(); ++b) {
      if (!(i2 & (RootMask(1) << b))) continue;
      RootCoords sum = rs->roots[a];
      for (int k = 0; k < rs->rank; ++k) sum[k] += rs->roots[b][k];
      if (rs->index_of(sum) >= 0)
        fail(ErrorCode::closure_violation,
             "sum of two-sided-finite " + coords_str(rs->roots[a]) +
                 " and two-sided-injective " + coords_str(rs->roots[b]) + " is a root");
    }
  }

  RootMask p = phi_f | rs->negate_mask(phi_i);
  if (!is_parabolic(*rs, p))
    fail(ErrorCode::closure_violation,
         "phi_f union -phi_i is not parabolic despite the pairwise closure checks");
  return attach_certificate(rs, p);
}

ParabolicSet borel_parabolic(RootSystemPtr rs) {
  RootMask pos = 0;
  for (std::size_t r = 0; r < rs->count(); ++r)
    if (rs->height(static_cast<int>(r)) > 0) pos |= RootMask(1) << r;
  return attach_certificate(rs, pos);
}

ParabolicSet full_parabolic(RootSystemPtr rs) {
  return attach_certificate(rs, rs->full_mask());
}

} // namespace currmod
