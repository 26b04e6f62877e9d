#include "currmod/evalmod.hpp"

#include "currmod/error.hpp"

#include <algorithm>

namespace currmod {

RealizationPtr evaluation_realization(const EvaluationFactor& f) {
  if (f.base->coeff->dim() != 1)
    fail(ErrorCode::mismatched_algebra, "evaluation factor base must be over the base field");
  const CoeffAlgebraPtr& s = f.point.parent;
  auto m = std::make_shared<Realization>();
  m->rs = f.base->rs;
  m->chev = f.base->chev;
  m->coeff = s;
  m->supported = f.base->supported;
  m->dim = f.base->dim;
  m->anchor = f.base->anchor;
  m->offsets = f.base->offsets;
  m->windowed = f.base->windowed;
  m->tag = f.base->tag;
  for (const auto& [key, table] : f.base->actions) {
    for (std::size_t b = 0; b < s->dim(); ++b) {
      Rat scale = f.point.values[b];
      Realization::ActionTable t;
      t.valid = table.valid;
      t.cols.resize(table.cols.size());
      if (scale != 0) {
        for (std::size_t c = 0; c < table.cols.size(); ++c)
          for (const auto& [row, v] : table.cols[c]) t.cols[c].emplace_back(row, scale * v);
      } else {
        // the zero map is representable even where the base action is not
        std::fill(t.valid.begin(), t.valid.end(), char(1));
      }
      m->actions[{key.first, static_cast<int>(b)}] = std::move(t);
    }
  }
  m->finalize();
  return m;
}

SparseVec evaluation_action(const EvaluationFactor& f, const ChevElem& elem,
                            const std::vector<Rat>& s, int carrier) {
  Rat scale = evaluate(f.point.parent, s, f.point);
  SparseVec out;
  if (scale == 0) return out;
  for (const auto& [row, v] : f.base->apply(elem, 0, carrier)) out.emplace_back(row, scale * v);
  return out;
}

int TensorModule::flatten(const std::vector<int>& parts) const {
  int idx = 0, stride = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    idx += parts[i] * stride;
    stride *= factors[i].base->dim;
  }
  return idx;
}

std::vector<int> TensorModule::unflatten(int carrier) const {
  std::vector<int> parts(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    parts[i] = carrier % factors[i].base->dim;
    carrier /= factors[i].base->dim;
  }
  return parts;
}

TensorModule tensor_eval(std::vector<EvaluationFactor> factors) {
  if (factors.empty()) fail(ErrorCode::invalid_argument, "tensor of zero factors");
  const CoeffAlgebraPtr s = factors[0].point.parent;
  for (const auto& f : factors) {
    if (f.point.parent.get() != s.get())
      fail(ErrorCode::mismatched_algebra, "all factors must evaluate over the same S");
    if (f.base->rs.get() != factors[0].base->rs.get())
      fail(ErrorCode::mismatched_algebra, "all factors must share the ambient root system");
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i].point.values == factors[j].point.values)
        fail(ErrorCode::repeated_point,
             "factors " + std::to_string(i) + " and " + std::to_string(j) +
                 " evaluate at the same maximal ideal");
  int windowed_count = 0;
  for (const auto& f : factors) windowed_count += f.base->windowed ? 1 : 0;
  if (windowed_count > 1)
    fail(ErrorCode::invalid_argument,
         "at most one infinite-dimensional factor is admissible per simple component");

  TensorModule t;
  t.factors = std::move(factors);

  auto m = std::make_shared<Realization>();
  m->rs = t.factors[0].base->rs;
  m->chev = t.factors[0].base->chev;
  m->coeff = s;
  m->supported = t.factors[0].base->supported;
  for (const auto& f : t.factors) m->supported &= f.base->supported;
  m->dim = 1;
  for (const auto& f : t.factors) m->dim *= f.base->dim;
  m->windowed = windowed_count > 0;

  m->anchor.assign(m->rs->rank, Rat(0));
  for (const auto& f : t.factors) m->anchor = weight_sum(m->anchor, f.base->anchor);
  for (int c = 0; c < m->dim; ++c) {
    std::vector<int> parts = t.unflatten(c);
    OffsetVec off(m->rs->rank, 0);
    for (std::size_t i = 0; i < t.factors.size(); ++i)
      off = offset_add(off, t.factors[i].base->offsets[parts[i]]);
    m->offsets.push_back(std::move(off));
  }

  // Leibniz action: (x (x) s_b) = sum_i chi_i(s_b) . (1 (x) ... (x) x_i (x) ... (x) 1).
  std::vector<ChevElem> elems;
  for (std::size_t r = 0; r < m->rs->count(); ++r)
    if (m->supported & (RootMask(1) << r)) elems.push_back(root_elem(static_cast<int>(r)));
  for (int i = 0; i < m->rs->rank; ++i) elems.push_back(cartan_elem(i));

  for (const ChevElem& elem : elems) {
    for (std::size_t b = 0; b < s->dim(); ++b) {
      Realization::ActionTable table;
      table.cols.resize(m->dim);
      table.valid.assign(m->dim, 1);
      for (int c = 0; c < m->dim; ++c) {
        std::vector<int> parts = t.unflatten(c);
        std::map<int, Rat> acc;
        bool valid = true;
        for (std::size_t i = 0; i < t.factors.size() && valid; ++i) {
          Rat scale = t.factors[i].point.values[b];
          if (scale == 0) continue;
          const auto& ft = t.factors[i].base->actions.at({elem, 0});
          if (!ft.valid[parts[i]]) {
            valid = false;
            break;
          }
          for (const auto& [row, v] : ft.cols[parts[i]]) {
            std::vector<int> target = parts;
            target[i] = row;
            acc[t.flatten(target)] += scale * v;
          }
        }
        if (!valid) {
          table.valid[c] = 0;
          continue;
        }
        for (auto& [row, v] : acc)
          if (v != 0) table.cols[c].emplace_back(row, v);
      }
      m->actions[{elem, static_cast<int>(b)}] = std::move(table);
    }
  }

  m->finalize();
  // Replace the carrier-derived diagram by the factor convolution, which
  // carries the per-offset exactness bookkeeping for windowed factors.
  WeightDiagram d = t.factors[0].base->diag;
  for (std::size_t i = 1; i < t.factors.size(); ++i) d = convolve(d, t.factors[i].base->diag);
  m->diag = std::move(d);
  t.mod = std::move(m);
  return t;
}

long weight_mult(const TensorModule& t, const OffsetVec& gamma) {
  auto v = t.diagram().mult_at(gamma);
  if (!v)
    fail(ErrorCode::out_of_window,
         "multiplicity at " + offset_str(gamma) + " is outside the exact window");
  return *v;
}

CanonicalForm iso_canonical_form(const TensorModule& t) {
  std::vector<std::string> parts;
  for (const auto& f : t.factors) {
    if (!f.base->tag)
      fail(ErrorCode::untagged_factor, "factor without a structural tag cannot be compared");
    parts.push_back(f.base->tag->render() + "@" + join_rats(f.point.values, ';'));
  }
  std::sort(parts.begin(), parts.end());
  CanonicalForm cf;
  cf.factors = parts;
  cf.rendered = "";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) cf.rendered += "x";
    cf.rendered += "[" + parts[i] + "]";
  }
  return cf;
}

} // namespace currmod
