#include "currmod/coeff.hpp"

#include "currmod/error.hpp"

#include <algorithm>
#include <sstream>

namespace currmod {

namespace {

// Monic polynomial as coefficient vector, constant term first.
using Poly = std::vector<Rat>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// t^k mod f for monic f of degree d, as a coordinate vector of length d.
std::vector<std::vector<Rat>> power_table(const Poly& f, std::size_t max_power) {
  const std::size_t d = f.size() - 1;
  std::vector<std::vector<Rat>> table;
  std::vector<Rat> cur(d);
  cur[0] = 1;
  table.push_back(cur);
  for (std::size_t k = 1; k <= max_power; ++k) {
    std::vector<Rat> next(d);
    // multiply by t, then reduce the overflow term via t^d = -(f - t^d)
    Rat top = cur[d - 1];
    for (std::size_t i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < d; ++i) next[i] -= top * f[i];
    table.push_back(next);
    cur = next;
  }
  return table;
}

std::string monomial_label(std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return "t";
  return "t^" + std::to_string(k);
}

CoeffAlgebraPtr from_poly(CoeffAlgebra::Kind kind, const Poly& f, std::vector<Rat> points,
                          std::string descriptor) {
  const std::size_t d = f.size() - 1;
  auto s = std::make_shared<CoeffAlgebra>();
  s->kind = kind;
  s->descriptor = std::move(descriptor);
  for (std::size_t k = 0; k < d; ++k) s->labels.push_back(monomial_label(k));
  auto powers = power_table(f, 2 * (d - 1) + 1);
  s->mult.assign(d, std::vector<std::vector<Rat>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s->mult[i][j] = powers[i + j];
  s->points_ = std::move(points);
  return s;
}

} // namespace

std::vector<Rat> CoeffAlgebra::multiply(const std::vector<Rat>& a,
                                        const std::vector<Rat>& b) const {
  if (a.size() != dim() || b.size() != dim())
    fail(ErrorCode::dimension_mismatch, "element length does not match algebra dimension");
  std::vector<Rat> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      Rat c = a[i] * b[j];
      for (std::size_t k = 0; k < dim(); ++k) out[k] += c * mult[i][j][k];
    }
  }
  return out;
}

std::vector<Rat> CoeffAlgebra::unit() const { return basis_vec(0); }

std::vector<Rat> CoeffAlgebra::basis_vec(std::size_t i) const {
  std::vector<Rat> v(dim());
  v[i] = 1;
  return v;
}

std::vector<MaxCharacter> characters(const CoeffAlgebraPtr& s) {
  std::vector<MaxCharacter> out;
  for (const Rat& a : s->branch_points()) {
    MaxCharacter chi;
    chi.parent = s;
    Rat p = 1;
    for (std::size_t k = 0; k < s->dim(); ++k) {
      chi.values.push_back(p);
      p *= a;
    }
    out.push_back(std::move(chi));
  }
  return out;
}

CoeffAlgebraPtr make_points_algebra(const std::vector<Rat>& points) {
  if (points.empty()) fail(ErrorCode::invalid_argument, "need at least one point");
  std::vector<std::pair<Rat, int>> branches;
  for (const Rat& a : points) branches.emplace_back(a, 1);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        fail(ErrorCode::duplicate_point, "duplicate evaluation point " + rat_str(points[i]));
  Poly f = {Rat(1)};
  for (const Rat& a : points) f = poly_mul(f, Poly{-a, Rat(1)});
  return from_poly(CoeffAlgebra::Kind::points, f, points, "points:" + join_rats(points, ','));
}

CoeffAlgebraPtr make_truncated(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "truncation order must be >= 1");
  Poly f(static_cast<std::size_t>(n) + 1);
  f[static_cast<std::size_t>(n)] = 1;
  return from_poly(CoeffAlgebra::Kind::truncated, f, {Rat(0)}, "trunc:" + std::to_string(n));
}

CoeffAlgebraPtr make_split_poly(const std::vector<std::pair<Rat, int>>& branches) {
  if (branches.empty()) fail(ErrorCode::invalid_argument, "need at least one branch");
  std::vector<Rat> points;
  Poly f = {Rat(1)};
  for (const auto& [a, m] : branches) {
    if (m < 1) fail(ErrorCode::invalid_argument, "branch multiplicity must be >= 1");
    points.push_back(a);
    for (int k = 0; k < m; ++k) f = poly_mul(f, Poly{-a, Rat(1)});
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        fail(ErrorCode::duplicate_point, "duplicate branch point " + rat_str(points[i]));
  std::ostringstream desc;
  desc << "split:";
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (i) desc << ',';
    desc << rat_str(branches[i].first) << '^' << branches[i].second;
  }
  return from_poly(CoeffAlgebra::Kind::split_poly, f, points, desc.str());
}

Rat evaluate(const CoeffAlgebraPtr& parent, const std::vector<Rat>& element,
             const MaxCharacter& chi) {
  if (chi.parent.get() != parent.get())
    fail(ErrorCode::mismatched_algebra, "element and character belong to different algebras");
  if (element.size() != parent->dim())
    fail(ErrorCode::mismatched_algebra, "element length does not match algebra dimension");
  Rat v = 0;
  for (std::size_t i = 0; i < element.size(); ++i) v += element[i] * chi.values[i];
  return v;
}

CoeffAlgebraPtr parse_algebra(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::bad_descriptor, "algebra descriptor needs 'points:...' or 'trunc:n'");
  std::string head = descriptor.substr(0, colon);
  std::string tail = descriptor.substr(colon + 1);
  if (head == "trunc") {
    auto n = parse_rat(tail);
    if (!n || !is_integer(*n) || *n < 1)
      fail(ErrorCode::bad_descriptor, "bad truncation order '" + tail + "'");
    return make_truncated(static_cast<int>(to_long(*n)));
  }
  if (head == "points") {
    std::vector<Rat> points;
    std::istringstream in(tail);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto v = parse_rat(item);
      if (!v) fail(ErrorCode::bad_descriptor, "bad point '" + item + "'");
      points.push_back(*v);
    }
    if (points.empty()) fail(ErrorCode::bad_descriptor, "empty point list");
    return make_points_algebra(points);
  }
  fail(ErrorCode::bad_descriptor, "unknown algebra kind '" + head + "'");
}

} // namespace currmod
