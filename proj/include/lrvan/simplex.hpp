#pragma once

#include "lrvan/polytope.hpp"
#include "lrvan/rational.hpp"

#include <vector>

namespace lrvan {

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> point;  // a solution of the system; empty when infeasible
};

/// Exact rational feasibility of coeffs.x = rhs (equalities) and
/// coeffs.x <= rhs (inequalities).  Bound propagation first, then a phase-I
/// simplex with Bland's least-index rule, so the run is deterministic and
/// cannot cycle.  Every returned point is re-checked against the input rows.
FeasibilityResult feasible(const ConstraintSystem& sys);

}  // namespace lrvan
