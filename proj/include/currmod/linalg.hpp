#ifndef CURRMOD_LINALG_HPP
#define CURRMOD_LINALG_HPP

#include "currmod/rational.hpp"

#include <cstddef>
#include <vector>

namespace currmod {

/// Dense matrix of exact rationals. Row-major, desk-scale sizes.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Mat transposed() const;
  bool operator==(const Mat& other) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);

/// Exact rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const Mat& m);

/// Greedy deterministic choice of a row subset spanning the row space:
/// scan rows in order, keep a row iff it enlarges the rank.
std::vector<std::size_t> independent_rows(const Mat& m);

/// Solves a x = b for the unique x, where the columns of a are independent
/// and b lies in their span. Returns nullopt if inconsistent or underdetermined.
std::optional<std::vector<Rat>> solve_unique(const Mat& a, const std::vector<Rat>& b);

/// Reduced row echelon basis of the nullspace {x : m x = 0}, denominator-cleared.
std::vector<std::vector<Rat>> nullspace(const Mat& m);

Rat det(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

} // namespace currmod

#endif
