#include "currmod/realization.hpp"

#include "currmod/error.hpp"

#include <algorithm>

namespace currmod {

std::string StructuralTag::render() const {
  std::string out = (kind == Kind::highest_weight) ? "hw:" : "dense:";
  out += join_rats(params, ',');
  return out;
}

const SparseVec& Realization::apply(const ChevElem& elem, int s_index, int carrier) const {
  auto it = actions.find({elem, s_index});
  if (it == actions.end())
    fail(ErrorCode::invalid_argument, "generator does not act on this module");
  const ActionTable& t = it->second;
  if (!t.valid[carrier])
    fail(ErrorCode::out_of_window,
         "action leaves the materialized window at carrier index " + std::to_string(carrier));
  return t.cols[carrier];
}

SparseVec Realization::apply_cartan_combo(const std::vector<Rat>& combo, int s_index,
                                          int carrier) const {
  std::map<int, Rat> acc;
  for (int i = 0; i < rs->rank; ++i) {
    if (combo[i] == 0) continue;
    for (const auto& [row, v] : apply(cartan_elem(i), s_index, carrier)) acc[row] += combo[i] * v;
  }
  SparseVec out;
  for (auto& [row, v] : acc)
    if (v != 0) out.emplace_back(row, std::move(v));
  return out;
}

Mat Realization::action_matrix(const ChevElem& elem, int s_index) const {
  Mat m(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (const auto& [row, v] : apply(elem, s_index, c)) m.at(row, c) = v;
  return m;
}

bool Realization::supports(const ChevElem& elem) const {
  if (elem.kind == ChevElem::Kind::cartan) return true;
  return supported & (RootMask(1) << elem.index);
}

void Realization::finalize() {
  weights.clear();
  for (const auto& off : offsets) weights.push_back(weight_add_offset(*rs, anchor, off));
  diag.base = anchor;
  diag.mults.clear();
  diag.exact.clear();
  diag.extent = windowed ? WeightDiagram::Extent::windowed : WeightDiagram::Extent::finite;
  for (const auto& off : offsets) {
    ++diag.mults[off];
    if (windowed) diag.exact.insert(off);
  }
}

RealizationPtr dense_sl2(ChevalleyBasisPtr chev, const Rat& lambda, const Rat& tau, int window) {
  const RootSystemPtr& rs = chev->root_system();
  if (rs->rank != 1 || !rs->is_type_a())
    fail(ErrorCode::unsupported_type, "the dense family is an sl2 construction");
  if (window < 1) fail(ErrorCode::invalid_argument, "window must be >= 1");

  // c_k = 0 iff k^2 + (lambda+1) k - tau = 0 has an integer root.
  Rat disc = (lambda + 1) * (lambda + 1) + 4 * tau;
  if (disc >= 0) {
    if (auto root = exact_sqrt(disc)) {
      for (const Rat& sign : {Rat(1), Rat(-1)}) {
        Rat k = (-(lambda + 1) + sign * *root) / 2;
        if (is_integer(k))
          fail(ErrorCode::reducible_parameters,
               "c_k vanishes at k = " + rat_str(k) + "; the family is reducible there");
      }
    }
  }

  auto m = std::make_shared<Realization>();
  m->rs = rs;
  m->chev = std::move(chev);
  m->coeff = make_truncated(1);
  m->supported = rs->full_mask();
  m->dim = 2 * window + 1;
  m->anchor = {lambda};
  m->windowed = true;
  m->tag = StructuralTag{StructuralTag::Kind::dense, {lambda, tau}};

  auto carrier_of = [&](int k) { return k + window; };
  for (int k = -window; k <= window; ++k) m->offsets.push_back({k});

  int pos_root = rs->index_of({1});
  int neg_root = rs->index_of({-1});

  Realization::ActionTable e, f, h;
  e.cols.resize(m->dim);
  e.valid.assign(m->dim, 1);
  f.cols.resize(m->dim);
  f.valid.assign(m->dim, 1);
  h.cols.resize(m->dim);
  h.valid.assign(m->dim, 1);
  for (int k = -window; k <= window; ++k) {
    int c = carrier_of(k);
    if (k == window)
      e.valid[c] = 0;
    else
      e.cols[c] = {{carrier_of(k + 1), tau - Rat(k) * (lambda + Rat(k) + 1)}};
    if (k == -window)
      f.valid[c] = 0;
    else
      f.cols[c] = {{carrier_of(k - 1), Rat(1)}};
    h.cols[c] = {{c, lambda + 2 * Rat(k)}};
  }
  m->actions[{root_elem(pos_root), 0}] = std::move(e);
  m->actions[{root_elem(neg_root), 0}] = std::move(f);
  m->actions[{cartan_elem(0), 0}] = std::move(h);
  m->finalize();
  return m;
}

std::vector<std::vector<Rat>> center_basis(const RootSystem& rs, RootMask levi) {
  // Rows of the constraint matrix: alpha(h_j) over the levi roots.
  std::vector<std::size_t> levi_roots;
  for (std::size_t r = 0; r < rs.count(); ++r)
    if (levi & (RootMask(1) << r)) levi_roots.push_back(r);
  if (levi_roots.empty()) {
    std::vector<std::vector<Rat>> id;
    for (int i = 0; i < rs.rank; ++i) {
      std::vector<Rat> e(rs.rank);
      e[i] = 1;
      id.push_back(std::move(e));
    }
    return id;
  }
  Mat constraints(levi_roots.size(), rs.rank);
  for (std::size_t r = 0; r < levi_roots.size(); ++r)
    for (int j = 0; j < rs.rank; ++j)
      constraints.at(r, j) = rs.pair_with_coroot(rs.roots[levi_roots[r]], j);
  return nullspace(constraints);
}

RealizationPtr levi_module(ChevalleyBasisPtr chev, const ParabolicSet& p, CoeffAlgebraPtr s,
                           const std::optional<LeviBlock>& block, const Mat& chi) {
  const RootSystemPtr& rs = chev->root_system();
  const RootMask levi = p.levi_mask();
  const auto z_basis = center_basis(*rs, levi);

  if (chi.rows() != z_basis.size() || chi.cols() != s->dim())
    fail(ErrorCode::dimension_mismatch,
         "character must be " + std::to_string(z_basis.size()) + " x " +
             std::to_string(s->dim()) + " for this centre and S");

  RootMask block_mask = 0;
  if (block) {
    int pos = block->root_index;
    block_mask = (RootMask(1) << pos) | (RootMask(1) << rs->negative_of(pos));
    if (block->u->coeff.get() != s.get())
      fail(ErrorCode::mismatched_algebra, "block realization must be defined over the same S");
    if (block->u->rs->rank != 1)
      fail(ErrorCode::unsupported_type, "block realizations are sl2 modules");
  }
  if (levi != block_mask)
    fail(ErrorCode::unsupported_type,
         block ? "block does not span the levi root set"
               : "nonabelian levi needs a block realization");

  auto m = std::make_shared<Realization>();
  m->rs = rs;
  m->chev = chev;
  m->coeff = s;
  m->supported = levi;
  m->dim = block ? block->u->dim : 1;
  m->windowed = block ? block->u->windowed : false;

  // h_i = c h_beta + sum_j d_j z_j; solve the rank x rank change of basis.
  const int n = rs->rank;
  const std::size_t zc = z_basis.size();
  Mat basis(n, (block ? 1 : 0) + zc);
  if (block) {
    const auto& h_beta = chev->coroot_coeffs(block->root_index);
    for (int i = 0; i < n; ++i) basis.at(i, 0) = Rat(h_beta[i]);
  }
  for (std::size_t j = 0; j < zc; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, (block ? 1 : 0) + j) = z_basis[j][i];

  std::vector<std::vector<Rat>> decomp(n); // per h_i: coefficients over [block?, z...]
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> e(n);
    e[i] = 1;
    auto x = solve_unique(basis, e);
    if (!x) fail(ErrorCode::invalid_argument, "centre + block cartan do not span h");
    decomp[i] = std::move(*x);
  }

  // chi(z_j (x) s_b) for a centre combo, linear in both slots.
  auto chi_of = [&](const std::vector<Rat>& z_combo, std::size_t b) {
    Rat v = 0;
    for (std::size_t j = 0; j < zc; ++j)
      if (z_combo[j] != 0) v += z_combo[j] * chi.at(j, b);
    return v;
  };

  // Full-h weights of the carrier.
  m->anchor.assign(n, Rat(0));
  for (int k = 0; k < m->dim; ++k) {
    Weight w(n);
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> z_part(decomp[i].begin() + (block ? 1 : 0), decomp[i].end());
      Rat v = chi_of(z_part, 0);
      if (block) v += decomp[i][0] * block->u->weights[k][0];
      w[i] = v;
    }
    if (k == 0) m->anchor = w;
    auto off = weight_diff_offset(*rs, w, m->anchor);
    if (!off)
      fail(ErrorCode::invalid_argument,
           "levi module weights do not differ by root-lattice elements");
    m->offsets.push_back(*off);
  }

  // Root actions through the block; h_i actions as block part + centre scalar.
  const int a1_pos = block ? block->u->rs->index_of({1}) : -1;
  const int a1_neg = block ? block->u->rs->index_of({-1}) : -1;
  for (std::size_t b = 0; b < s->dim(); ++b) {
    if (block) {
      for (int amb : {block->root_index, rs->negative_of(block->root_index)}) {
        int local = (amb == block->root_index) ? a1_pos : a1_neg;
        Realization::ActionTable t;
        t.cols.resize(m->dim);
        t.valid.assign(m->dim, 1);
        for (int k = 0; k < m->dim; ++k) {
          try {
            t.cols[k] = block->u->apply(root_elem(local), static_cast<int>(b), k);
          } catch (const Error& err) {
            if (err.code() != ErrorCode::out_of_window) throw;
            t.valid[k] = 0;
          }
        }
        m->actions[{root_elem(amb), static_cast<int>(b)}] = std::move(t);
      }
    }
    for (int i = 0; i < n; ++i) {
      Realization::ActionTable t;
      t.cols.resize(m->dim);
      t.valid.assign(m->dim, 1);
      std::vector<Rat> z_part(decomp[i].begin() + (block ? 1 : 0), decomp[i].end());
      Rat scalar = chi_of(z_part, b);
      for (int k = 0; k < m->dim; ++k) {
        std::map<int, Rat> acc;
        if (scalar != 0) acc[k] += scalar;
        if (block && decomp[i][0] != 0) {
          // h action on the block is diagonal, never out of window
          for (const auto& [row, v] : block->u->apply(cartan_elem(0), static_cast<int>(b), k))
            acc[row] += decomp[i][0] * v;
        }
        for (auto& [row, v] : acc)
          if (v != 0) t.cols[k].emplace_back(row, v);
      }
      m->actions[{cartan_elem(i), static_cast<int>(b)}] = std::move(t);
    }
  }
  m->finalize();
  return m;
}

RealizationPtr borel_weight_module(ChevalleyBasisPtr chev, const ParabolicSet& p,
                                   CoeffAlgebraPtr s, const std::vector<long>& coords) {
  const int n = chev->root_system()->rank;
  auto chars = characters(s);
  if (coords.size() != chars.size() * static_cast<std::size_t>(n))
    fail(ErrorCode::dimension_mismatch,
         "expected " + std::to_string(chars.size() * n) + " weight coordinates");
  Mat chi(n, s->dim());
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (int i = 0; i < n; ++i)
      for (std::size_t b = 0; b < s->dim(); ++b)
        chi.at(i, b) += chars[c].values[b] * Rat(coords[c * n + i]);
  return levi_module(std::move(chev), p, std::move(s), std::nullopt, chi);
}

} // namespace currmod
