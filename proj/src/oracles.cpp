#include "currmod/oracles.hpp"

#include "currmod/error.hpp"

#include <functional>

namespace currmod {

namespace {

void require_dominant_type_a(const RootSystem& rs, const std::vector<long>& lambda) {
  if (!rs.is_type_a())
    fail(ErrorCode::unsupported_type, "dimension and multiplicity oracles cover type A only");
  if (lambda.size() != static_cast<std::size_t>(rs.rank))
    fail(ErrorCode::dimension_mismatch, "weight has wrong number of coordinates");
  for (long x : lambda)
    if (x < 0) fail(ErrorCode::non_dominant, "weight is not dominant integral");
}

// (mu, nu) for weights in fundamental coordinates: mu^T M nu with
// M_ij = ((C^T)^{-1})_ji (alpha_j, alpha_j)/2. Type A: M = C^{-1}.
Mat weight_gram(const RootSystem& rs) {
  const int n = rs.rank;
  Mat ct(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct.at(i, j) = rs.cartan[j][i];
  auto inv = inverse(ct);
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = inv->at(j, i) * rs.gram.at(j, j) / 2;
  return g;
}

Rat pair_fund(const Mat& g, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat v = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) v += a[i] * g.at(i, j) * b[j];
  }
  return v;
}

// Fundamental coordinates of a root-lattice element.
std::vector<Rat> root_to_fund(const RootSystem& rs, const RootCoords& c) {
  std::vector<Rat> out(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    Rat v = 0;
    for (int i = 0; i < rs.rank; ++i) v += Rat(c[i]) * Rat(rs.cartan[i][j]);
    out[j] = v;
  }
  return out;
}

} // namespace

long weyl_dim(const RootSystem& rs, const std::vector<long>& lambda) {
  require_dominant_type_a(rs, lambda);
  // prod over positive roots of (lambda + rho, alpha) / (rho, alpha); in
  // type A both pairings reduce to sums of (lambda_i + 1) over the support.
  Rat num = 1, den = 1;
  for (std::size_t r = 0; r < rs.count(); ++r) {
    if (rs.height(static_cast<int>(r)) <= 0) continue;
    Rat top = 0, bottom = 0;
    for (int i = 0; i < rs.rank; ++i) {
      top += Rat(rs.roots[r][i]) * Rat(lambda[i] + 1);
      bottom += Rat(rs.roots[r][i]);
    }
    num *= top;
    den *= bottom;
  }
  return to_long(num / den);
}

WeightDiagram freudenthal_diagram(const RootSystem& rs, const std::vector<long>& lambda) {
  require_dominant_type_a(rs, lambda);
  const long total = weyl_dim(rs, lambda);
  if (total > 10000)
    fail(ErrorCode::size_limit, "freudenthal diagram limited to dimension 10^4");

  const int n = rs.rank;
  const Mat g = weight_gram(rs);
  std::vector<Rat> lam_rho(n);
  for (int i = 0; i < n; ++i) lam_rho[i] = Rat(lambda[i] + 1);
  const Rat norm_top = pair_fund(g, lam_rho, lam_rho);

  std::vector<int> positive;
  for (std::size_t r = 0; r < rs.count(); ++r)
    if (rs.height(static_cast<int>(r)) > 0) positive.push_back(static_cast<int>(r));

  WeightDiagram d;
  d.base.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) d.base[i] = Rat(lambda[i]);

  // mults keyed by the non-negative drop beta, with mu = lambda - beta;
  // levels by total drop height, descending from lambda.
  std::map<OffsetVec, long> drop_mult;
  drop_mult[OffsetVec(n, 0)] = 1;
  long mass = 1;

  std::vector<OffsetVec> level = {OffsetVec(n, 0)};
  for (long h = 1; mass < total; ++h) {
    if (h > 100000) fail(ErrorCode::size_limit, "freudenthal recursion did not terminate");
    // all beta >= 0 with coordinate sum h
    std::vector<OffsetVec> next;
    std::function<void(int, long, OffsetVec&)> gen = [&](int pos, long left, OffsetVec& acc) {
      if (pos == n - 1) {
        acc[pos] = static_cast<int>(left);
        next.push_back(acc);
        return;
      }
      for (long k = 0; k <= left; ++k) {
        acc[pos] = static_cast<int>(k);
        gen(pos + 1, left - k, acc);
      }
    };
    OffsetVec acc(n, 0);
    gen(0, h, acc);

    for (const auto& beta : next) {
      // mu + rho = (lambda + rho) - beta in fundamental coordinates
      const auto beta_f = root_to_fund(rs, beta);
      std::vector<Rat> mu_rho(n);
      for (int i = 0; i < n; ++i) mu_rho[i] = lam_rho[i] - beta_f[i];
      Rat coeff = norm_top - pair_fund(g, mu_rho, mu_rho);
      Rat rhs = 0;
      for (int r : positive) {
        const RootCoords& alpha = rs.roots[r];
        const auto alpha_f = root_to_fund(rs, alpha);
        for (long k = 1;; ++k) {
          OffsetVec up = beta;
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            up[i] -= static_cast<int>(k) * alpha[i];
            if (up[i] < 0) ok = false;
          }
          if (!ok) break;
          auto it = drop_mult.find(up);
          if (it == drop_mult.end() || it->second == 0) continue;
          // (mu + k alpha, alpha) with mu = lambda - beta
          std::vector<Rat> mu_k(n);
          for (int i = 0; i < n; ++i)
            mu_k[i] = (lam_rho[i] - 1) - beta_f[i] + Rat(k) * alpha_f[i];
          rhs += pair_fund(g, mu_k, alpha_f) * it->second;
        }
      }
      long m = 0;
      if (coeff != 0) {
        Rat mm = 2 * rhs / coeff;
        if (!is_integer(mm) || mm < 0)
          fail(ErrorCode::invalid_argument, "freudenthal recursion produced a non-multiplicity");
        m = to_long(mm);
      }
      if (m > 0) {
        drop_mult[beta] = m;
        mass += m;
      }
    }
  }

  for (const auto& [beta, m] : drop_mult) {
    OffsetVec off = beta;
    for (auto& x : off) x = -x;
    d.mults[off] = m;
  }
  return d;
}

} // namespace currmod
