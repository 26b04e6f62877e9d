#include "currmod/induction.hpp"

#include "currmod/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace currmod {

namespace {

// Simple roots of a root subsystem w.r.t. canonical positivity: positive
// members not expressible as a sum of two positive members.
std::vector<int> subsystem_base(const RootSystem& rs, RootMask subsystem) {
  std::vector<int> pos;
  for (std::size_t r = 0; r < rs.count(); ++r)
    if ((subsystem & (RootMask(1) << r)) && rs.height(static_cast<int>(r)) > 0)
      pos.push_back(static_cast<int>(r));
  std::vector<int> base;
  for (int r : pos) {
    bool decomposable = false;
    for (int a : pos) {
      for (int b : pos) {
        RootCoords sum = rs.roots[a];
        for (int k = 0; k < rs.rank; ++k) sum[k] += rs.roots[b][k];
        if (sum == rs.roots[r]) decomposable = true;
      }
    }
    if (!decomposable) base.push_back(r);
  }
  return base;
}

bool offset_in_span(const RootSystem& rs, const std::vector<int>& base_roots,
                    const OffsetVec& off) {
  bool zero = true;
  for (int x : off) zero &= (x == 0);
  if (zero) return true;
  if (base_roots.empty()) return false;
  Mat b(rs.rank, base_roots.size());
  for (std::size_t c = 0; c < base_roots.size(); ++c)
    for (int r = 0; r < rs.rank; ++r) b.at(r, c) = rs.roots[base_roots[c]][r];
  std::vector<Rat> rhs(rs.rank);
  for (int r = 0; r < rs.rank; ++r) rhs[r] = off[r];
  auto x = solve_unique(b, rhs);
  if (!x) return false;
  for (const Rat& v : *x)
    if (!is_integer(v)) return false;
  return true;
}

} // namespace

InducedModule::InducedModule(ChevalleyBasisPtr chev, ParabolicSet p, CoeffAlgebraPtr s,
                             RealizationPtr w)
    : chev_(std::move(chev)), rs_(chev_->root_system()), p_(std::move(p)), s_(std::move(s)),
      w_(std::move(w)) {
  if (p_.rs.get() != rs_.get())
    fail(ErrorCode::mismatched_algebra, "parabolic and basis use different root systems");
  if (w_->rs.get() != rs_.get())
    fail(ErrorCode::mismatched_algebra, "W and basis use different root systems");
  if (w_->coeff.get() != s_.get())
    fail(ErrorCode::mismatched_algebra, "W must be a module over the given S");

  levi_mask_ = p_.levi_mask();
  raise_mask_ = p_.raise_mask();
  lower_mask_ = p_.lower_mask();
  if ((w_->supported & levi_mask_) != levi_mask_)
    fail(ErrorCode::invalid_argument, "W does not carry an action of the full Levi part");

  // Weights of W must lie in a single coset of the lattice Q0 spanned by the
  // levi roots.
  auto levi_base = subsystem_base(*rs_, levi_mask_);
  for (const auto& off : w_->offsets)
    if (!offset_in_span(*rs_, levi_base, off))
      fail(ErrorCode::invalid_argument,
           "W weights do not lie in a single Q0-coset: offending offset " + offset_str(off));

  exact_ = !w_->windowed;

  for (std::size_t r = 0; r < rs_->count(); ++r) {
    for (std::size_t b = 0; b < s_->dim(); ++b) {
      if (lower_mask_ & (RootMask(1) << r)) {
        lower_id_[{static_cast<int>(r), static_cast<int>(b)}] = static_cast<int>(lower_.size());
        lower_.emplace_back(static_cast<int>(r), static_cast<int>(b));
      }
      if (raise_mask_ & (RootMask(1) << r))
        raise_.emplace_back(static_cast<int>(r), static_cast<int>(b));
    }
  }
}

long InducedModule::height_of(const OffsetVec& gamma) const {
  RootCoords c(gamma.begin(), gamma.end());
  return p_.height()(c);
}

OffsetVec InducedModule::monomial_offset(const PBWMonomial& m) const {
  OffsetVec off = w_->offsets[m.tail];
  for (int id : m.letters) {
    const RootCoords& r = rs_->roots[lower_[id].first];
    for (int i = 0; i < rs_->rank; ++i) off[i] += r[i];
  }
  return off;
}

// --- straightening ---

MonCombo InducedModule::apply_to_combo(const ChevElem& u, int s_index, const MonCombo& c,
                                       const Rat& scale) const {
  MonCombo out;
  for (const auto& [m, coeff] : c) {
    for (const auto& [m2, coeff2] : apply_impl(u, s_index, m)) {
      Rat v = scale * coeff * coeff2;
      if (v == 0) continue;
      auto [it, inserted] = out.try_emplace(m2, v);
      if (!inserted) {
        it->second += v;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

MonCombo InducedModule::apply_impl(const ChevElem& u, int s_index, const PBWMonomial& m) const {
  auto key = std::make_tuple(u, s_index, m);
  if (auto it = apply_memo_.find(key); it != apply_memo_.end()) return it->second;

  MonCombo out;
  const bool is_root = u.kind == ChevElem::Kind::root;
  const RootMask bit = is_root ? (RootMask(1) << u.index) : 0;

  if (m.letters.empty()) {
    if (is_root && (raise_mask_ & bit)) {
      // nilradical acts trivially on W
    } else if (is_root && (lower_mask_ & bit)) {
      out[{std::vector<int>{lower_id_.at({u.index, s_index})}, m.tail}] = 1;
    } else {
      // levi root or cartan element: act on W
      for (const auto& [row, v] : w_->apply(u, s_index, m.tail))
        out[{std::vector<int>{}, row}] = v;
    }
  } else {
    const int head = m.letters[0];
    const int my_id = (is_root && (lower_mask_ & bit)) ? lower_id_.at({u.index, s_index}) : -1;
    if (my_id >= head) {
      PBWMonomial ext;
      ext.letters.reserve(m.letters.size() + 1);
      ext.letters.push_back(my_id);
      ext.letters.insert(ext.letters.end(), m.letters.begin(), m.letters.end());
      ext.tail = m.tail;
      out[std::move(ext)] = 1;
    } else {
      // u . (head . rest) = head . (u . rest) + [u, head] . rest
      PBWMonomial rest{std::vector<int>(m.letters.begin() + 1, m.letters.end()), m.tail};
      const auto [head_root, head_b] = lower_[head];
      MonCombo inner = apply_impl(u, s_index, rest);
      for (const auto& [m2, c2] : apply_to_combo(root_elem(head_root), head_b, inner, Rat(1))) {
        auto [it, ins] = out.try_emplace(m2, c2);
        if (!ins) {
          it->second += c2;
          if (it->second == 0) out.erase(it);
        }
      }
      // [x_u (x) s_a, x_head (x) s_c] = sum bracket terms (x) s_a s_c
      const auto& terms = chev_->bracket(u, root_elem(head_root));
      if (!terms.empty()) {
        const auto ss = s_->mult[static_cast<std::size_t>(s_index)][static_cast<std::size_t>(head_b)];
        for (const auto& [elem, coeff] : terms) {
          for (std::size_t b2 = 0; b2 < ss.size(); ++b2) {
            if (ss[b2] == 0) continue;
            for (const auto& [m2, c2] :
                 apply_to_combo(elem, static_cast<int>(b2), MonCombo{{rest, Rat(1)}},
                                Rat(coeff) * ss[b2])) {
              auto [it, ins] = out.try_emplace(m2, c2);
              if (!ins) {
                it->second += c2;
                if (it->second == 0) out.erase(it);
              }
            }
          }
        }
      }
    }
  }

  auto [it, ins] = apply_memo_.emplace(std::move(key), std::move(out));
  return it->second;
}

MonCombo InducedModule::apply_element(const ChevElem& u, int s_index, const PBWMonomial& m) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return apply_impl(u, s_index, m);
}

std::vector<Rat> InducedModule::straighten_impl(const RaisingWord& word,
                                                const PBWMonomial& m) const {
  MonCombo cur{{m, Rat(1)}};
  for (std::size_t i = word.size(); i-- > 0;) {
    const auto [r, b] = raise_[word[i]];
    cur = apply_to_combo(root_elem(r), b, cur, Rat(1));
  }
  std::vector<Rat> out(w_->dim, Rat(0));
  for (const auto& [mono, c] : cur) {
    if (!mono.letters.empty())
      fail(ErrorCode::height_mismatch, "straightened element did not land in the W component");
    out[mono.tail] += c;
  }
  return out;
}

std::vector<Rat> InducedModule::straighten_apply(const RaisingWord& word,
                                                 const PBWMonomial& m) const {
  std::lock_guard<std::mutex> lock(mutex_);
  long word_ht = 0;
  for (int id : word) word_ht += p_.height()(rs_->roots[raise_[id].first]);
  long mono_ht = height_of(monomial_offset(m));
  if (word_ht + mono_ht != 0)
    fail(ErrorCode::height_mismatch, "word height " + std::to_string(word_ht) +
                                         " does not cancel monomial height " +
                                         std::to_string(mono_ht));
  return straighten_impl(word, m);
}

// --- weight bases and words ---

const std::vector<PBWMonomial>& InducedModule::basis_impl(const OffsetVec& gamma) const {
  if (auto it = basis_memo_.find(gamma); it != basis_memo_.end()) return it->second;

  std::vector<PBWMonomial> out;
  for (int j = 0; j < w_->dim; ++j) {
    OffsetVec delta = offset_sub(gamma, w_->offsets[j]);
    // Multisets of lowering letters summing to delta; every letter strictly
    // lowers the parabolic height, which bounds the recursion.
    std::vector<int> stack;
    auto ht = [&](const OffsetVec& o) { return height_of(o); };
    std::function<void(int, OffsetVec)> dfs = [&](int max_id, OffsetVec remaining) {
      bool zero = true;
      for (int x : remaining) zero &= (x == 0);
      if (zero) {
        // the stack is already weakly decreasing by construction
        out.push_back(PBWMonomial{stack, j});
        return;
      }
      if (ht(remaining) >= 0) return;
      for (int id = max_id; id >= 0; --id) {
        const RootCoords& r = rs_->roots[lower_[id].first];
        OffsetVec next = remaining;
        for (int i = 0; i < rs_->rank; ++i) next[i] -= r[i];
        stack.push_back(id);
        dfs(id, next);
        stack.pop_back();
      }
    };
    dfs(static_cast<int>(lower_.size()) - 1, delta);
  }
  std::sort(out.begin(), out.end());
  auto [it, ins] = basis_memo_.emplace(gamma, std::move(out));
  return it->second;
}

std::vector<PBWMonomial> InducedModule::verma_weight_basis(const OffsetVec& gamma) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return basis_impl(gamma);
}

std::vector<RaisingWord> InducedModule::words_impl(const OffsetVec& gamma) const {
  long target = -height_of(gamma);
  if (target < 0)
    fail(ErrorCode::height_mismatch, "raising words require non-positive height");
  std::vector<RaisingWord> out;
  RaisingWord word;
  std::function<void(long)> dfs = [&](long remaining) {
    if (remaining == 0) {
      out.push_back(word);
      return;
    }
    for (std::size_t id = 0; id < raise_.size(); ++id) {
      long h = p_.height()(rs_->roots[raise_[id].first]);
      if (h > remaining) continue;
      word.push_back(static_cast<int>(id));
      dfs(remaining - h);
      word.pop_back();
    }
  };
  dfs(target);
  return out;
}

std::vector<RaisingWord> InducedModule::raising_words(const OffsetVec& gamma) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return words_impl(gamma);
}

// --- pairing levels ---

const InducedModule::LevelInfo& InducedModule::level_impl(const OffsetVec& gamma) const {
  if (auto it = level_memo_.find(gamma); it != level_memo_.end()) return it->second;

  LevelInfo info;
  info.monomials = basis_impl(gamma);
  const std::size_t nrows = info.monomials.size();

  std::vector<std::pair<RaisingWord, int>> columns; // (word, W index)
  if (height_of(gamma) <= 0) {
    for (const auto& word : words_impl(gamma)) {
      OffsetVec target = gamma;
      for (int id : word) {
        const RootCoords& r = rs_->roots[raise_[id].first];
        for (int i = 0; i < rs_->rank; ++i) target[i] += r[i];
      }
      for (int j = 0; j < w_->dim; ++j)
        if (w_->offsets[j] == target) columns.emplace_back(word, j);
    }
  }

  info.pairing = Mat(nrows, columns.size());
  for (std::size_t row = 0; row < nrows; ++row) {
    for (std::size_t col = 0; col < columns.size(); ++col) {
      auto coords = straighten_impl(columns[col].first, info.monomials[row]);
      info.pairing.at(row, col) = coords[columns[col].second];
    }
  }
  info.rank = rank(info.pairing);
  info.pivot_rows = independent_rows(info.pairing);
  auto [it, ins] = level_memo_.emplace(gamma, std::move(info));
  return it->second;
}

const InducedModule::LevelInfo& InducedModule::level(const OffsetVec& gamma) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return level_impl(gamma);
}

long InducedModule::simple_quotient_mult(const OffsetVec& gamma) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (height_of(gamma) > 0) return 0;
  return static_cast<long>(level_impl(gamma).rank);
}

long InducedModule::n_plus_invariants_dim(const OffsetVec& gamma) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (height_of(gamma) >= 0)
    fail(ErrorCode::height_mismatch, "invariants are computed at strictly negative heights");
  const LevelInfo& base = level_impl(gamma);
  const std::size_t nrows = base.monomials.size();
  if (nrows == 0) return 0;

  // Columns of [B_X A'] over all single raising letters X: v is invariant in
  // the quotient iff X v lies in the kernel at the target level for every X.
  std::vector<std::vector<Rat>> stacked(nrows);
  for (std::size_t id = 0; id < raise_.size(); ++id) {
    OffsetVec target = gamma;
    const RootCoords& r = rs_->roots[raise_[id].first];
    for (int i = 0; i < rs_->rank; ++i) target[i] += r[i];
    const LevelInfo& up = level_impl(target);
    std::map<PBWMonomial, std::size_t> up_index;
    for (std::size_t k = 0; k < up.monomials.size(); ++k) up_index[up.monomials[k]] = k;

    Mat bx(nrows, up.monomials.size());
    for (std::size_t row = 0; row < nrows; ++row) {
      auto image = apply_impl(root_elem(raise_[id].first), raise_[id].second,
                              base.monomials[row]);
      for (const auto& [mono, c] : image) {
        auto it = up_index.find(mono);
        if (it == up_index.end())
          fail(ErrorCode::invalid_argument, "straightened image left the computed basis");
        bx.at(row, it->second) = c;
      }
    }
    Mat prod = mat_mul(bx, up.pairing);
    for (std::size_t row = 0; row < nrows; ++row)
      for (std::size_t col = 0; col < prod.cols(); ++col)
        stacked[row].push_back(prod.at(row, col));
  }

  Mat c(nrows, stacked.empty() ? 0 : stacked[0].size());
  for (std::size_t row = 0; row < nrows; ++row)
    for (std::size_t col = 0; col < stacked[row].size(); ++col) c.at(row, col) = stacked[row][col];
  const std::size_t joint = nrows - rank(c);    // dim of vectors killed into kernels
  const std::size_t kernel = nrows - base.rank; // dim N_gamma
  return static_cast<long>(joint - kernel);
}

std::vector<OffsetVec> InducedModule::support_offsets(int max_depth) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::set<OffsetVec> seen;
  // Multisets of lowering roots with height >= -max_depth, added to each W offset.
  std::vector<int> lower_roots;
  for (std::size_t r = 0; r < rs_->count(); ++r)
    if (lower_mask_ & (RootMask(1) << r)) lower_roots.push_back(static_cast<int>(r));

  std::set<OffsetVec> sums;
  OffsetVec zero(rs_->rank, 0);
  std::function<void(std::size_t, OffsetVec, long)> dfs = [&](std::size_t from, OffsetVec acc,
                                                              long ht_left) {
    sums.insert(acc);
    for (std::size_t i = from; i < lower_roots.size(); ++i) {
      long h = -p_.height()(rs_->roots[lower_roots[i]]);
      if (h > ht_left) continue;
      OffsetVec next = acc;
      for (int k = 0; k < rs_->rank; ++k) next[k] += rs_->roots[lower_roots[i]][k];
      dfs(i, std::move(next), ht_left - h);
    }
  };
  dfs(0, zero, max_depth);

  for (const auto& woff : w_->offsets)
    for (const auto& s : sums) seen.insert(offset_add(woff, s));

  std::vector<OffsetVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const OffsetVec& a, const OffsetVec& b) {
    long ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha > hb;
    return a < b;
  });
  return out;
}

std::vector<Rat> InducedModule::project_impl(const OffsetVec& gamma, const MonCombo& v) const {
  const LevelInfo& info = level_impl(gamma);
  if (info.rank == 0) return {};
  std::map<PBWMonomial, std::size_t> index;
  for (std::size_t k = 0; k < info.monomials.size(); ++k) index[info.monomials[k]] = k;

  // v^T A must be expressed over the pivot rows of A.
  std::vector<Rat> va(info.pairing.cols(), Rat(0));
  for (const auto& [mono, c] : v) {
    auto it = index.find(mono);
    if (it == index.end())
      fail(ErrorCode::invalid_argument, "combination uses a monomial outside the level basis");
    for (std::size_t col = 0; col < info.pairing.cols(); ++col)
      va[col] += c * info.pairing.at(it->second, col);
  }
  Mat pivot_t(info.pairing.cols(), info.pivot_rows.size());
  for (std::size_t k = 0; k < info.pivot_rows.size(); ++k)
    for (std::size_t col = 0; col < info.pairing.cols(); ++col)
      pivot_t.at(col, k) = info.pairing.at(info.pivot_rows[k], col);
  auto x = solve_unique(pivot_t, va);
  if (!x) fail(ErrorCode::invalid_argument, "projection is not in the quotient row space");
  return *x;
}

std::vector<Rat> InducedModule::project_to_quotient(const OffsetVec& gamma,
                                                    const MonCombo& v) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return project_impl(gamma, v);
}

} // namespace currmod
