#include "currmod/rootsys.hpp"

#include "currmod/error.hpp"

#include <algorithm>
#include <set>

namespace currmod {

namespace {

bool lex_less(const RootCoords& a, const RootCoords& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int coords_height(const RootCoords& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

} // namespace

int RootSystem::index_of(const RootCoords& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int root_index) const { return coords_height(roots[root_index]); }

Rat RootSystem::pair_with_coroot(const RootCoords& mu, int j) const {
  Rat v = 0;
  for (int i = 0; i < rank; ++i) v += Rat(mu[i]) * Rat(cartan[i][j]);
  return v;
}

RootCoords RootSystem::reflect_simple(const RootCoords& mu, int j) const {
  Rat p = pair_with_coroot(mu, j);
  RootCoords out = mu;
  out[j] -= static_cast<int>(to_long(p));
  return out;
}

RootCoords RootSystem::reflect(const RootCoords& mu, int root_index) const {
  const RootCoords& alpha = roots[root_index];
  // <mu, alpha^v> = 2 (mu, alpha) / (alpha, alpha)
  Rat num = 2 * pairing(mu, alpha);
  Rat den = pairing(alpha, alpha);
  long long k = to_long(num / den);
  RootCoords out = mu;
  for (int i = 0; i < rank; ++i) out[i] -= static_cast<int>(k) * alpha[i];
  return out;
}

Rat RootSystem::pairing(const RootCoords& mu, const RootCoords& nu) const {
  Rat v = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (mu[i] != 0 && nu[j] != 0) v += Rat(mu[i]) * Rat(nu[j]) * gram.at(i, j);
  return v;
}

RootMask RootSystem::negate_mask(RootMask m) const {
  RootMask out = 0;
  for (std::size_t i = 0; i < count(); ++i)
    if (m & (RootMask(1) << i)) out |= RootMask(1) << neg_index_[i];
  return out;
}

std::string RootSystem::type_name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

void RootSystem::ensure_bases() const {
  if (!bases_.empty()) return;
  // Orbit of the standard base under simple reflections.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> std_base(rank);
  for (int i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    std_base[i] = index_of(e);
  }
  std::sort(std_base.begin(), std_base.end());
  seen.insert(std_base);
  queue.push_back(std_base);
  while (!queue.empty()) {
    auto base = queue.back();
    queue.pop_back();
    for (int j = 0; j < rank; ++j) {
      std::vector<int> image;
      for (int r : base) image.push_back(index_of(reflect_simple(roots[r], j)));
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  bases_.assign(seen.begin(), seen.end());
  base_coords_.clear();
  for (const auto& base : bases_) {
    Mat b(rank, rank);
    for (int c = 0; c < rank; ++c)
      for (int r = 0; r < rank; ++r) b.at(r, c) = roots[base[c]][r];
    auto inv = inverse(b);
    if (!inv) fail(ErrorCode::invalid_argument, "degenerate base");
    Mat coords(count(), rank);
    for (std::size_t r = 0; r < count(); ++r) {
      for (int i = 0; i < rank; ++i) {
        Rat v = 0;
        for (int k = 0; k < rank; ++k) v += inv->at(i, k) * Rat(roots[r][k]);
        if (!is_integer(v)) fail(ErrorCode::invalid_argument, "non-integral base coordinates");
        coords.at(r, i) = v;
      }
    }
    base_coords_.push_back(std::move(coords));
  }
}

const std::vector<std::vector<int>>& RootSystem::bases() const {
  ensure_bases();
  return bases_;
}

const Mat& RootSystem::base_coords(std::size_t base_pos) const {
  ensure_bases();
  return base_coords_[base_pos];
}

RootSystemPtr build_root_system(Series series, int rank) {
  const bool ok = (series == Series::A && rank >= 1 && rank <= 4) ||
                  (series == Series::B && rank == 2) || (series == Series::G && rank == 2);
  if (!ok)
    fail(ErrorCode::unsupported_type,
         "unsupported root system " + std::string(1, static_cast<char>(series)) +
             std::to_string(rank) + " (supported: A1..A4, B2, G2)");

  auto rs = std::make_shared<RootSystem>();
  rs->series = series;
  rs->rank = rank;
  rs->cartan.assign(rank, std::vector<int>(rank, 0));
  rs->gram = Mat(rank, rank);

  if (series == Series::A) {
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        rs->cartan[i][j] = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) rs->gram.at(i, j) = rs->cartan[i][j];
  } else if (series == Series::B) {
    // alpha_1 long (norm 2), alpha_2 short (norm 1)
    rs->cartan = {{2, -2}, {-1, 2}};
    rs->gram.at(0, 0) = 2;
    rs->gram.at(0, 1) = rs->gram.at(1, 0) = -1;
    rs->gram.at(1, 1) = 1;
  } else {
    // G2: alpha_1 short (norm 2), alpha_2 long (norm 6)
    rs->cartan = {{2, -1}, {-3, 2}};
    rs->gram.at(0, 0) = 2;
    rs->gram.at(0, 1) = rs->gram.at(1, 0) = -3;
    rs->gram.at(1, 1) = 6;
  }

  // Close the simple roots under simple reflections.
  std::set<RootCoords> closure;
  std::vector<RootCoords> queue;
  for (int i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    closure.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootCoords c = queue.back();
    queue.pop_back();
    for (int j = 0; j < rank; ++j) {
      RootCoords image = rs->reflect_simple(c, j);
      if (closure.insert(image).second) queue.push_back(image);
    }
  }

  rs->roots.assign(closure.begin(), closure.end());
  std::sort(rs->roots.begin(), rs->roots.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = coords_height(a), hb = coords_height(b);
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });
  for (std::size_t i = 0; i < rs->roots.size(); ++i) rs->index_[rs->roots[i]] = static_cast<int>(i);
  rs->neg_index_.resize(rs->roots.size());
  for (std::size_t i = 0; i < rs->roots.size(); ++i) {
    RootCoords neg = rs->roots[i];
    for (auto& x : neg) x = -x;
    rs->neg_index_[i] = rs->index_of(neg);
  }
  return rs;
}

RootSystemPtr build_root_system(const std::string& type_name) {
  if (type_name.size() != 2 || type_name[1] < '1' || type_name[1] > '9')
    fail(ErrorCode::unsupported_type, "malformed root system type '" + type_name + "'");
  char s = type_name[0];
  if (s != 'A' && s != 'B' && s != 'C' && s != 'D' && s != 'G')
    fail(ErrorCode::unsupported_type, "unknown series '" + std::string(1, s) + "'");
  return build_root_system(static_cast<Series>(s), type_name[1] - '0');
}

// --- Chevalley basis (type A, matrix units) ---

ChevalleyBasis::ChevalleyBasis(RootSystemPtr rs) : rs_(std::move(rs)) {
  if (!rs_->is_type_a())
    fail(ErrorCode::structure_constants_unavailable,
         "structure constants are realized only for type A; " + rs_->type_name() +
             " supports root combinatorics only");
  matrix_size_ = rs_->rank + 1;

  // Root alpha = sum c_k (e_k - e_{k+1}); its E_ij position comes from the
  // telescoping of the coordinates.
  root_unit_.resize(rs_->count());
  for (std::size_t r = 0; r < rs_->count(); ++r) {
    std::vector<int> eps(matrix_size_, 0);
    const RootCoords& c = rs_->roots[r];
    for (int k = 0; k < rs_->rank; ++k) {
      eps[k] += c[k];
      eps[k + 1] -= c[k];
    }
    int pos = -1, neg = -1;
    for (int m = 0; m < matrix_size_; ++m) {
      if (eps[m] == 1) pos = m;
      if (eps[m] == -1) neg = m;
    }
    root_unit_[r] = {pos, neg};
  }

  coroots_.resize(rs_->count());
  for (std::size_t r = 0; r < rs_->count(); ++r) {
    auto [i, j] = root_unit_[r];
    // h_alpha = E_ii - E_jj; partial sums give the coefficients over h_1..h_n.
    std::vector<int> diag(matrix_size_, 0);
    diag[i] = 1;
    diag[j] = -1;
    std::vector<long long> coeffs(rs_->rank, 0);
    long long acc = 0;
    for (int k = 0; k < rs_->rank; ++k) {
      acc += diag[k];
      coeffs[k] = acc;
    }
    coroots_[r] = std::move(coeffs);
  }

  for (const auto& u : all_elems())
    for (const auto& v : all_elems()) table_[{u, v}] = compute_bracket(u, v);
}

std::vector<ChevElem> ChevalleyBasis::all_elems() const {
  std::vector<ChevElem> out;
  for (std::size_t r = 0; r < rs_->count(); ++r) out.push_back(root_elem(static_cast<int>(r)));
  for (int i = 0; i < rs_->rank; ++i) out.push_back(cartan_elem(i));
  return out;
}

BracketTerms ChevalleyBasis::compute_bracket(const ChevElem& u, const ChevElem& v) const {
  const int n = matrix_size_;
  auto as_matrix = [&](const ChevElem& e) {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    if (e.kind == ChevElem::Kind::root) {
      auto [i, j] = root_unit_[e.index];
      m[i][j] = 1;
    } else {
      m[e.index][e.index] = 1;
      m[e.index + 1][e.index + 1] = -1;
    }
    return m;
  };
  auto a = as_matrix(u), b = as_matrix(v);
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];

  BracketTerms out;
  // Off-diagonal entries are multiples of root vectors.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0) continue;
      RootCoords coords(rs_->rank, 0);
      for (int k = std::min(i, j); k < std::max(i, j); ++k) coords[k] = (i < j) ? 1 : -1;
      int r = rs_->index_of(coords);
      out.emplace_back(root_elem(r), c[i][j]);
    }
  // Trace-zero diagonal decomposes over h_1..h_n by partial sums.
  long long acc = 0;
  for (int k = 0; k < rs_->rank; ++k) {
    acc += c[k][k];
    if (acc != 0) out.emplace_back(cartan_elem(k), acc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const BracketTerms& ChevalleyBasis::bracket(const ChevElem& u, const ChevElem& v) const {
  return table_.at({u, v});
}

const std::vector<long long>& ChevalleyBasis::coroot_coeffs(int root_index) const {
  return coroots_[root_index];
}

long long ChevalleyBasis::eval_on_simple_cartan(const RootCoords& mu, int j) const {
  long long v = 0;
  for (int i = 0; i < rs_->rank; ++i) v += static_cast<long long>(mu[i]) * rs_->cartan[i][j];
  return v;
}

ChevalleyBasisPtr make_chevalley_basis(RootSystemPtr rs) {
  return std::make_shared<const ChevalleyBasis>(std::move(rs));
}

} // namespace currmod
