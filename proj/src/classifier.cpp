#include "currmod/classifier.hpp"

#include "currmod/error.hpp"

namespace currmod {

RootClassification classify_exact(const TensorModule& t) {
  RootClassification c;
  c.rs = t.mod->rs;
  c.exact = true;
  for (std::size_t r = 0; r < c.rs->count(); ++r) {
    bool nilpotent_everywhere = true;
    for (const auto& f : t.factors) {
      if (!f.base->tag)
        fail(ErrorCode::untagged_factor, "factor without a structural tag cannot be classified");
      if (f.base->tag->kind == StructuralTag::Kind::dense) {
        // the dense family lives on sl2; both of its roots act injectively
        nilpotent_everywhere = false;
      }
    }
    if (nilpotent_everywhere)
      c.phi_f |= RootMask(1) << r;
    else
      c.phi_i |= RootMask(1) << r;
  }
  return c;
}

RootClassification classify_window(const RootSystemPtr& rs, const WeightDiagram& diagram,
                                   const OffsetVec& lambda0, int bound) {
  if (bound < 1) fail(ErrorCode::window_too_small, "empty scan window");
  {
    auto at = diagram.mult_at(lambda0);
    if (!at || *at == 0)
      fail(ErrorCode::invalid_argument, "lambda0 must be a support point of the diagram");
  }
  RootClassification c;
  c.rs = rs;
  c.exact = false;
  c.window_bound = bound;
  for (std::size_t r = 0; r < rs->count(); ++r) {
    bool tail_zero = true;
    for (int n = bound / 2 + 1; n <= bound; ++n) {
      OffsetVec probe = lambda0;
      for (int i = 0; i < rs->rank; ++i) probe[i] += n * rs->roots[r][i];
      auto m = diagram.mult_at(probe);
      if (!m)
        fail(ErrorCode::window_too_small,
             "diagram window cannot resolve the root string at n = " + std::to_string(n));
      if (*m != 0) tail_zero = false;
    }
    if (tail_zero)
      c.phi_f |= RootMask(1) << r;
    else
      c.phi_i |= RootMask(1) << r;
  }
  return c;
}

Trichotomy trichotomy(const RootClassification& c) {
  if (!c.exact)
    fail(ErrorCode::invalid_argument,
         "trichotomy requires an exact classification, not a windowed heuristic");
  const RootMask full = c.rs->full_mask();
  if (c.phi_f == full) return TrichotomyFinite{};
  if (c.phi_i == full) return TrichotomyDense{};
  ParabolicSet p = parabolic_from_partition(c.rs, c.phi_f, c.phi_i);
  if (p.members == full)
    fail(ErrorCode::closure_violation,
         "mixed classification produced the improper parabolic, contradicting the trichotomy");
  return p;
}

std::string trichotomy_name(const Trichotomy& t) {
  if (std::holds_alternative<TrichotomyFinite>(t)) return "finite";
  if (std::holds_alternative<TrichotomyDense>(t)) return "dense";
  return "parabolic";
}

} // namespace currmod
