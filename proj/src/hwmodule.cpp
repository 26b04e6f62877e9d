#include "currmod/error.hpp"
#include "currmod/induction.hpp"
#include "currmod/oracles.hpp"
#include "currmod/realization.hpp"

#include <map>

namespace currmod {

// Explicit matrices for L(lambda): run Borel induction over the base field,
// pick pivot monomials as a basis of each quotient weight space, and read
// every generator action through the quotient projection.
RealizationPtr highest_weight_module(ChevalleyBasisPtr chev, const std::vector<long>& lambda) {
  const RootSystemPtr& rs = chev->root_system();
  const long dim = weyl_dim(*rs, lambda); // validates dominance and type A
  if (dim > 200) fail(ErrorCode::size_limit, "explicit realization limited to dimension 200");

  auto s = make_truncated(1);
  ParabolicSet borel = borel_parabolic(rs);
  Mat chi(rs->rank, 1);
  for (int i = 0; i < rs->rank; ++i) chi.at(i, 0) = Rat(lambda[i]);
  RealizationPtr w = levi_module(chev, borel, s, std::nullopt, chi);
  InducedModule im(chev, borel, s, w);

  // Descend level by level; the support of a simple finite-dimensional
  // module has no height gaps, so the first empty level ends the module.
  struct BasisVec {
    OffsetVec gamma;
    PBWMonomial monomial;
  };
  std::vector<BasisVec> basis;
  std::map<OffsetVec, std::pair<std::size_t, std::size_t>> span; // gamma -> [first, count)
  std::map<OffsetVec, long> level_of;
  long h = 0;
  for (;; ++h) {
    bool any = false;
    for (const auto& gamma : im.support_offsets(static_cast<int>(h))) {
      if (im.height_of(gamma) != -h || level_of.count(gamma)) continue;
      level_of[gamma] = h;
      const auto& info = im.level(gamma);
      span[gamma] = {basis.size(), info.pivot_rows.size()};
      for (std::size_t k : info.pivot_rows) {
        basis.push_back({gamma, info.monomials[k]});
        any = true;
      }
    }
    if (!any && h > 0) break;
    if (h > 4 * dim) fail(ErrorCode::size_limit, "quotient support did not terminate");
  }

  auto m = std::make_shared<Realization>();
  m->rs = rs;
  m->chev = chev;
  m->coeff = s;
  m->supported = rs->full_mask();
  m->dim = static_cast<int>(basis.size());
  m->anchor.assign(rs->rank, Rat(0));
  for (int i = 0; i < rs->rank; ++i) m->anchor[i] = Rat(lambda[i]);
  for (const auto& bv : basis) m->offsets.push_back(bv.gamma);
  std::vector<Rat> params;
  for (long x : lambda) params.emplace_back(x);
  m->tag = StructuralTag{StructuralTag::Kind::highest_weight, params};

  std::vector<ChevElem> elems = chev->all_elems();
  for (const ChevElem& e : elems) {
    Realization::ActionTable table;
    table.cols.resize(m->dim);
    table.valid.assign(m->dim, 1);
    for (int c = 0; c < m->dim; ++c) {
      const BasisVec& bv = basis[c];
      OffsetVec target = bv.gamma;
      if (e.kind == ChevElem::Kind::root)
        target = offset_add(target, OffsetVec(rs->roots[e.index].begin(),
                                              rs->roots[e.index].end()));
      MonCombo image = im.apply_element(e, 0, bv.monomial);
      if (image.empty()) continue;
      auto it = span.find(target);
      if (it == span.end()) continue; // beyond the computed support: dim L = 0 there
      auto coords = im.project_to_quotient(target, image);
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] != 0)
          table.cols[c].emplace_back(static_cast<int>(it->second.first + k), coords[k]);
    }
    m->actions[{e, 0}] = std::move(table);
  }
  m->finalize();
  return m;
}

} // namespace currmod
