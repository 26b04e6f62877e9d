#include "currmod/linalg.hpp"

#include "currmod/error.hpp"

#include <numeric>

namespace currmod {

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::dimension_mismatch, "mat_mul shape mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::dimension_mismatch, "mat_sub shape mismatch");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

namespace {

// Integer matrix with each row scaled by the lcm of its denominators.
// Row scaling by nonzero rationals preserves rank and row echelon structure.
std::vector<std::vector<Int>> cleared(const Mat& m) {
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, denominator(m.at(r, c)));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rat& v = m.at(r, c);
      out[r][c] = numerator(v) * (l / denominator(v));
    }
  }
  return out;
}

// Fraction-free elimination in place; returns the rank. First nonzero pivot
// per column, row swaps only — keeps the result independent of entry sizes.
std::size_t bareiss_rank(std::vector<std::vector<Int>>& a) {
  if (a.empty()) return 0;
  const std::size_t nr = a.size(), nc = a[0].size();
  std::size_t piv_row = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < nc && piv_row < nr; ++col) {
    std::size_t sel = piv_row;
    while (sel < nr && a[sel][col] == 0) ++sel;
    if (sel == nr) continue;
    if (sel != piv_row) std::swap(a[sel], a[piv_row]);
    const Int pivot = a[piv_row][col];
    for (std::size_t r = piv_row + 1; r < nr; ++r) {
      for (std::size_t c = col + 1; c < nc; ++c)
        a[r][c] = (a[r][c] * pivot - a[r][col] * a[piv_row][c]) / prev;
      a[r][col] = 0;
    }
    prev = pivot;
    ++piv_row;
  }
  return piv_row;
}

} // namespace

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = cleared(m);
  return bareiss_rank(a);
}

std::vector<std::size_t> independent_rows(const Mat& m) {
  std::vector<std::size_t> chosen;
  if (m.cols() == 0) return chosen;
  // Incremental elimination over a growing row set.
  std::vector<std::vector<Rat>> basis; // rows in echelon form
  std::vector<std::size_t> pivot_col;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rat> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rat& lead = row[pivot_col[b]];
      if (lead != 0) {
        Rat f = lead;
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] -= f * basis[b][c];
      }
    }
    std::size_t p = 0;
    while (p < m.cols() && row[p] == 0) ++p;
    if (p == m.cols()) continue;
    Rat inv = row[p];
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] /= inv;
    basis.push_back(std::move(row));
    pivot_col.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

namespace {

// Plain rational Gauss-Jordan; returns (rref, pivot columns).
std::pair<Mat, std::vector<std::size_t>> rref(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(row, c));
    Rat inv = a.at(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(row, c) /= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      Rat f = a.at(r, col);
      if (f == 0) continue;
      for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

} // namespace

std::optional<std::vector<Rat>> solve_unique(const Mat& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) fail(ErrorCode::dimension_mismatch, "solve_unique shape mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto [e, pivots] = rref(aug);
  for (auto p : pivots)
    if (p == a.cols()) return std::nullopt; // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt; // underdetermined
  std::vector<Rat> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = e.at(i, a.cols());
  return x;
}

std::vector<std::vector<Rat>> nullspace(const Mat& m) {
  auto [e, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(m.cols());
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e.at(i, free_col);
    Int l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    for (auto& x : v) x *= Rat(l);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::dimension_mismatch, "det of non-square matrix");
  Mat a = m;
  Rat d = 1;
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t sel = col;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) return Rat(0);
    if (sel != col) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(col, c));
      d = -d;
    }
    d *= a.at(col, col);
    Rat inv = a.at(col, col);
    for (std::size_t r = col + 1; r < a.rows(); ++r) {
      Rat f = a.at(r, col) / inv;
      if (f == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::dimension_mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  auto [e, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.at(r, n + c);
  return inv;
}

} // namespace currmod
