#ifndef CURRMOD_ORACLES_HPP
#define CURRMOD_ORACLES_HPP

#include "currmod/weights.hpp"

#include <vector>

namespace currmod {

/// Weyl dimension of the simple module of highest weight lambda (dominant
/// integral, fundamental coordinates), type A only.
long weyl_dim(const RootSystem& rs, const std::vector<long>& lambda);

/// Full weight diagram of L(lambda) by the Freudenthal recursion, anchored
/// at lambda. Guarded by weyl_dim(lambda) <= 10^4.
WeightDiagram freudenthal_diagram(const RootSystem& rs, const std::vector<long>& lambda);

} // namespace currmod

#endif
